"""Clenshaw-Curtis-like cubature on [-1, 1]^3 for the Lebesgue measure.

Integrating the degree-n hyperinterpolant against dx gives a rule on the
hyperinterpolation nodes with weights

    lambda_xi = w_xi * sum_{|a| <= n} p_a(xi) m_a,   m_a = int p_a(x) dx,

exact on total degree n. The weights can be negative; their absolute sum
tends to the volume 8.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .cheb1d import cheb_T_hat_table, lobatto_nodes
from .cubature import SigmaPattern, evaluate_at_nodes
from .hyperinterp3 import HyperNodeSet, hyper_node_set, simplex_indices

VOLUME = 8.0


def moment_1d(k: int) -> float:
    """Integral of the orthonormal Chebyshev polynomial T^_k over [-1, 1]."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return 2.0
    if k % 2:
        return 0.0
    return math.sqrt(2.0) * 2.0 / (1.0 - k * k)


@dataclass(frozen=True)
class MomentVector:
    n: int
    alphas: np.ndarray
    values: np.ndarray

    def as_dict(self) -> dict[tuple[int, int, int], float]:
        return {tuple(int(v) for v in a): float(m) for a, m in zip(self.alphas, self.values)}


def moments(n: int) -> MomentVector:
    if n < 1:
        raise ValueError("n must be >= 1")
    alphas = simplex_indices(n)
    m1 = np.array([moment_1d(k) for k in range(n + 1)])
    return MomentVector(n, alphas, m1[alphas].prod(axis=1))


@dataclass(frozen=True)
class CCRule:
    n: int
    sigma: SigmaPattern
    points: np.ndarray
    weights: np.ndarray   # lambda, possibly negative

    def __len__(self) -> int:
        return len(self.weights)


def _kernel_on_grid(n: int) -> np.ndarray:
    """``K[i,j,l] = sum_{|a|<=n} p_a(x_i, x_j, x_l) m_a`` on the C_{n+1} grid."""
    x = lobatto_nodes(n + 1)
    m1 = np.array([moment_1d(k) for k in range(n + 1)])
    v = cheb_T_hat_table(n, x) * m1[:, None]            # v[a, i]
    a = np.arange(n + 1)
    mask = (a[:, None, None] + a[None, :, None] + a[None, None, :] <= n).astype(float)
    return np.einsum("abc,ai,bj,cl->ijl", mask, v, v, v, optimize=True)


def cc_weights_direct(nodeset: HyperNodeSet) -> np.ndarray:
    """Per-node sum over the moment vector; O(N * n^3), for cross-checking."""
    n = nodeset.n
    mom = moments(n)
    t = [cheb_T_hat_table(n, nodeset.points[:, s]) for s in range(3)]
    lam = np.empty(len(nodeset))
    a1, a2, a3 = mom.alphas.T
    for q in range(len(nodeset)):
        lam[q] = np.sum(t[0][a1, q] * t[1][a2, q] * t[2][a3, q] * mom.values)
    return nodeset.weights * lam


def cc_rule(n: int, sigma="EEE") -> CCRule:
    nodeset = hyper_node_set(n, sigma)
    kernel = _kernel_on_grid(n)
    lam = nodeset.weights * kernel[tuple(nodeset.grid_index.T)]
    return CCRule(n, nodeset.sigma, nodeset.points, lam)


def cc_integrate(f: Callable, n: int, sigma="EEE", vectorized: bool = False,
                 rule: CCRule | None = None) -> float:
    rule = rule if rule is not None else cc_rule(n, sigma)
    return float(np.dot(rule.weights, evaluate_at_nodes(f, rule.points, vectorized)))


def sum_abs_weights(rule: CCRule) -> float:
    return float(np.sum(np.abs(rule.weights)))
