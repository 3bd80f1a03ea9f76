import itertools
import math

import numpy as np
import pytest

from chebcube.bench import gauss_legendre_1d, get_function
from chebcube.cc3 import (VOLUME, cc_integrate, cc_rule, cc_weights_direct, moment_1d, moments,
                          sum_abs_weights)
from chebcube.cheb1d import cheb_T_hat
from chebcube.hyperinterp3 import (control_grid, control_points, hyper_coeffs, hyper_eval_grid,
                                   hyper_node_set)


def monomial_integral(alpha):
    return math.prod(2.0 / (a + 1) if a % 2 == 0 else 0.0 for a in alpha)


class TestMoments:
    def test_values(self):
        assert moment_1d(0) == 2.0
        assert moment_1d(1) == 0.0
        assert moment_1d(2) == pytest.approx(-2 * math.sqrt(2) / 3, abs=1e-15)

    def test_against_quadrature(self):
        x, w = gauss_legendre_1d(60)
        for k in range(40):
            assert moment_1d(k) == pytest.approx(np.dot(w, cheb_T_hat(k, x)), abs=1e-13)

    def test_vector(self):
        m = moments(4).as_dict()
        assert m[(0, 0, 0)] == 8.0
        assert m[(1, 0, 0)] == 0.0
        assert m[(2, 2, 0)] == pytest.approx(16 / 9, abs=1e-14)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_parity(self, n):
        mv = moments(n)
        odd = (mv.alphas % 2).any(axis=1)
        assert np.all(mv.values[odd] == 0.0)
        assert np.all(mv.values[~odd] != 0.0)


class TestRule:
    @pytest.mark.parametrize("n", [1, 2, 5, 10])
    @pytest.mark.parametrize("sigma", ["EEE", "EEO", "EOE", "EOO"])
    def test_sum(self, n, sigma):
        r = cc_rule(n, sigma)
        assert abs(r.weights.sum() - VOLUME) <= 1e-12
        assert len(r) == len(hyper_node_set(n, sigma))

    def test_second_moment(self):
        r = cc_rule(4, "EEE")
        assert np.dot(r.weights, r.points[:, 0] ** 2) == pytest.approx(8 / 3, abs=1e-13)

    @pytest.mark.parametrize("n", [4, 6, 9])
    def test_x1sq_x2sq(self, n):
        f = lambda x: x[0] ** 2 * x[1] ** 2  # noqa: E731
        assert cc_integrate(f, n, "EEE") == pytest.approx(8 / 9, abs=1e-13)

    def test_constant(self):
        assert cc_integrate(lambda x: 1.0, 3, "EOE") == pytest.approx(8.0, abs=1e-13)

    @pytest.mark.parametrize("sigma", ["EEE", "EEO", "EOO"])
    def test_nodal_indicator_oracle(self, sigma):
        """lambda_xi equals the exact integral of the hyperinterpolant of the xi-indicator."""
        n = 3
        rule = cc_rule(n, sigma)
        ns = hyper_node_set(n, sigma)
        x, w = gauss_legendre_1d(n + 2)
        for q, xi in enumerate(ns.points):
            ind = lambda p, xi=xi: 1.0 if np.array_equal(p, xi) else 0.0  # noqa: E731
            c = hyper_coeffs(ind, n, sigma)
            # integrate the degree-n polynomial with a tensor Gauss-Legendre rule (exact)
            vals = hyper_eval_grid(c, x)
            lam = np.einsum("ijk,i,j,k->", vals, w, w, w)
            assert abs(lam - rule.weights[q]) <= 1e-12

    @pytest.mark.parametrize("n", [2, 5, 8])
    def test_fast_kernel_matches_direct(self, n):
        for sigma in ("EEE", "EOE"):
            ns = hyper_node_set(n, sigma)
            np.testing.assert_allclose(cc_rule(n, sigma).weights, cc_weights_direct(ns), atol=1e-14)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_monomial_exactness(self, n):
        for sigma in ("EEE", "EEO"):
            r = cc_rule(n, sigma)
            for alpha in itertools.product(range(n + 1), repeat=3):
                if sum(alpha) > n:
                    continue
                val = np.dot(r.weights, np.prod(r.points ** np.array(alpha), axis=1))
                assert abs(val - monomial_integral(alpha)) <= 1e-12

    def test_exp_n20(self):
        exact = (2 * math.sinh(1)) ** 3
        assert exact == pytest.approx(12.984542692956987, abs=1e-13)
        val = cc_integrate(get_function("EXP"), 20, "EEE", vectorized=True)
        assert abs(val - exact) / exact < 1e-10

    def test_negative_weights_kept(self):
        r = cc_rule(6, "EEE")
        assert (r.weights < 0).any()


class TestAbsSum:
    def test_lower_bound(self):
        for n in (1, 3, 7, 12):
            assert sum_abs_weights(cc_rule(n)) >= VOLUME - 1e-12

    def test_trend(self):
        gap = {n: sum_abs_weights(cc_rule(n, "EEE")) - VOLUME for n in (5, 10, 20, 30)}
        assert gap[30] < gap[5]
        # calibration run: 0.3753, 0.01838, 0.001673, 0.0003900
        assert gap[30] <= 5e-4

    @pytest.mark.parametrize("fid", ["GAUSSIAN", "RUNGE", "C2"])
    def test_polya_steklov_bound(self, fid):
        f = get_function(fid)
        x, w = gauss_legendre_1d(64)
        ref = np.einsum("ijk,i,j,k->", f(np.stack(np.meshgrid(x, x, x, indexing="ij"), -1)), w, w, w)
        pts = control_points(25)
        exact = f(pts)
        for n in (6, 10, 14):
            rule = cc_rule(n)
            err = abs(np.dot(rule.weights, f(rule.points)) - ref)
            proxy = np.max(np.abs(hyper_eval_grid(hyper_coeffs(f, n, "EEE", True),
                                                  control_grid(25)).ravel() - exact))
            assert err <= (VOLUME + sum_abs_weights(rule)) * proxy
