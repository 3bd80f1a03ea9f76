"""Even/odd factorized Chebyshev cubature, fast total-degree hyperinterpolation
and a Clenshaw-Curtis-like rule on the cube."""

from .cc3 import CCRule, cc_integrate, cc_rule, moment_1d, moments, sum_abs_weights
from .cheb1d import (Rule1D, RuleKind, apply_rule, cheb_T, cheb_T_hat, gauss_chebyshev_rule,
                     gauss_lobatto_rule, lemma_value, split_lobatto)
from .cubature import (CubatureRule, Measure, SigmaPattern, build_sigma_rule, flip, integrate,
                       node_count, representative_patterns)
from .errors import ConvergenceError, DomainError
from .hyperinterp3 import (CoeffTensor, HyperNodeSet, build_grid_values, hyper_coeffs,
                           hyper_coeffs_direct, hyper_eval, hyper_node_set, relative_error)
from .transform import GridArray, cosine_sum_1d, cosine_sum_3d

__version__ = "0.1.0"
