"""Total-degree hyperinterpolation in the 3-cube for the product Chebyshev measure.

The degree-n hyperinterpolant uses the sigma cubature built on the
Chebyshev-Lobatto grid ``C_{n+1} = {cos(k pi/(n+1)), k = 0..n+1}``, which is
exact to degree 2n+1. Its coefficients in the orthonormal product basis
``p_a(x) = T^_{a1}(x1) T^_{a2}(x2) T^_{a3}(x3)`` are a scaled cosine sum of
the weighted samples placed on the full grid (zeros off the node set).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from typing import Callable

import numpy as np

from .cheb1d import cheb_T_hat_table
from .cubature import SigmaPattern, evaluate_at_nodes, sigma_grid
from .transform import GridArray, cosine_sum_3d

CONTROL_GRID_SIZE = 30


class BoundaryClass(IntEnum):
    INTERIOR = 0
    FACE = 1
    EDGE = 2
    VERTEX = 3


@dataclass(frozen=True)
class HyperNodeSet:
    n: int
    sigma: SigmaPattern
    points: np.ndarray          # (N, 3)
    weights: np.ndarray         # (N,)
    grid_index: np.ndarray      # (N, 3) indices into C_{n+1}
    boundary_class: np.ndarray  # (N,) BoundaryClass values

    def __len__(self) -> int:
        return len(self.weights)

    @property
    def nu(self) -> int:
        return self.n + 1


def simplex_indices(n: int) -> np.ndarray:
    """All multi-indices with |a| <= n in graded lexicographic order.

    Within one total degree, larger a1 comes first, then larger a2.
    """
    rows = []
    for deg in range(n + 1):
        for a1 in range(deg, -1, -1):
            for a2 in range(deg - a1, -1, -1):
                rows.append((a1, a2, deg - a1 - a2))
    return np.array(rows, dtype=int).reshape(-1, 3)


def dim_total_degree(n: int) -> int:
    return (n + 1) * (n + 2) * (n + 3) // 6


@dataclass(frozen=True)
class CoeffTensor:
    n: int
    alphas: np.ndarray   # (M, 3), graded lexicographic
    values: np.ndarray   # (M,)

    def __post_init__(self):
        if len(self.alphas) != dim_total_degree(self.n):
            raise ValueError("coefficient count does not match dim of total-degree space")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("non-finite hyperinterpolation coefficient")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, alpha) -> float:
        a = tuple(int(v) for v in alpha)
        if sum(a) > self.n or min(a) < 0:
            raise KeyError(alpha)
        return float(self.dense()[a])

    def as_dict(self) -> dict[tuple[int, int, int], float]:
        return {tuple(int(v) for v in a): float(c) for a, c in zip(self.alphas, self.values)}

    def dense(self) -> np.ndarray:
        """Coefficients on the (n+1)^3 cube, zero where |a| > n."""
        out = np.zeros((self.n + 1,) * 3)
        out[tuple(self.alphas.T)] = self.values
        return out

    @classmethod
    def from_dense(cls, n: int, cube: np.ndarray) -> CoeffTensor:
        alphas = simplex_indices(n)
        return cls(n, alphas, np.asarray(cube)[tuple(alphas.T)].copy())


def hyper_node_set(n: int, sigma) -> HyperNodeSet:
    if int(n) != n or n < 1:
        raise ValueError(f"hyperinterpolation degree must be >= 1, got {n!r}")
    sigma = SigmaPattern.parse(sigma)
    if len(sigma) != 3:
        raise ValueError("hyperinterpolation needs a sigma pattern of length 3")
    nu = n + 1
    points, weights, index = sigma_grid(3, nu, sigma)
    on_boundary = (index == 0) | (index == nu)
    bclass = on_boundary.sum(axis=1)
    return HyperNodeSet(n, sigma, points, weights, index, bclass)


def build_grid_values(f: Callable, nodeset: HyperNodeSet, vectorized: bool = False) -> GridArray:
    values = evaluate_at_nodes(f, nodeset.points, vectorized)
    grid = np.zeros((nodeset.nu + 1,) * 3)
    grid[tuple(nodeset.grid_index.T)] = nodeset.weights * values
    return GridArray(nodeset.nu, grid)


def _beta(n: int) -> np.ndarray:
    b = np.full(n + 1, math.sqrt(2.0))
    b[0] = 1.0
    return b


def hyper_coeffs(f: Callable, n: int, sigma, vectorized: bool = False,
                 nodeset: HyperNodeSet | None = None) -> CoeffTensor:
    """Coefficients of the degree-n hyperinterpolant via the fast cosine transform."""
    nodeset = nodeset if nodeset is not None else hyper_node_set(n, sigma)
    raw = cosine_sum_3d(build_grid_values(f, nodeset, vectorized))
    b = _beta(n)
    cube = raw[:n + 1, :n + 1, :n + 1] * b[:, None, None] * b[None, :, None] * b[None, None, :]
    return CoeffTensor.from_dense(n, cube)


def hyper_coeffs_direct(f: Callable, n: int, sigma, vectorized: bool = False) -> CoeffTensor:
    """Coefficients by explicit weighted sums over the node set (reference path)."""
    nodeset = hyper_node_set(n, sigma)
    wf = nodeset.weights * evaluate_at_nodes(f, nodeset.points, vectorized)
    t = [cheb_T_hat_table(n, nodeset.points[:, s]) for s in range(3)]  # (n+1, N)
    alphas = simplex_indices(n)
    values = np.array([np.sum(wf * t[0][a] * t[1][b] * t[2][c]) for a, b, c in alphas])
    return CoeffTensor(n, alphas, values)


def hyper_eval(coeffs: CoeffTensor, x, chunk: int = 4096):
    """Evaluate the hyperinterpolant at one point (length 3) or at rows of an (M, 3) array."""
    pts = np.asarray(x, dtype=float)
    single = pts.ndim == 1
    pts = np.atleast_2d(pts)
    cube = coeffs.dense()
    n = coeffs.n
    out = np.empty(len(pts))
    for start in range(0, len(pts), chunk):
        p = pts[start:start + chunk]
        t1, t2, t3 = (cheb_T_hat_table(n, p[:, s]) for s in range(3))
        tmp = np.einsum("abc,ci->abi", cube, t3)
        tmp = np.einsum("abi,bi->ai", tmp, t2)
        out[start:start + chunk] = np.einsum("ai,ai->i", tmp, t1)
    return float(out[0]) if single else out


def hyper_eval_grid(coeffs: CoeffTensor, x1d) -> np.ndarray:
    """Evaluate on the tensor grid ``x1d^3``; returns shape (m, m, m)."""
    t = cheb_T_hat_table(coeffs.n, np.asarray(x1d, dtype=float))
    return np.einsum("abc,ai,bj,ck->ijk", coeffs.dense(), t, t, t, optimize=True)


def control_grid(m: int = CONTROL_GRID_SIZE) -> np.ndarray:
    """Equispaced 1-D abscissas of the uniform m^3 control grid."""
    return np.linspace(-1.0, 1.0, m)


def control_points(m: int = CONTROL_GRID_SIZE) -> np.ndarray:
    g = control_grid(m)
    mesh = np.meshgrid(g, g, g, indexing="ij")
    return np.stack([a.ravel() for a in mesh], axis=1)


def relative_error(approx, exact) -> float:
    """Max error scaled by the maximum deviation of ``exact`` from its mean."""
    approx = np.asarray(approx, dtype=float).ravel()
    exact = np.asarray(exact, dtype=float).ravel()
    if approx.shape != exact.shape:
        raise ValueError("approx and exact must have equal length")
    spread = np.max(np.abs(exact - exact.mean()))
    if spread <= 1e-15:
        raise ZeroDivisionError("exact values are constant; relative error undefined")
    return float(np.max(np.abs(approx - exact)) / spread)


def hyper_error(f: Callable, n: int, sigma="EEE", m: int = CONTROL_GRID_SIZE) -> float:
    """Relative hyperinterpolation error of a vectorized ``f`` on the m^3 control grid."""
    coeffs = hyper_coeffs(f, n, sigma, vectorized=True)
    approx = hyper_eval_grid(coeffs, control_grid(m)).ravel()
    return relative_error(approx, f(control_points(m)))
