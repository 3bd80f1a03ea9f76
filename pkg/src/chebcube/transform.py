"""Cosine-sum transforms ``G_a = sum_{k=0}^{nu} g_k cos(k a pi / nu)``.

These are bare sums: no halving of the end terms. The fast path runs a real
FFT of length 2*nu on the even extension ``g_0..g_nu, g_{nu-1}..g_1``; that
spectrum counts interior terms twice, so the end terms are added back and the
result halved.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class GridArray:
    """Values on the (nu+1)^3 Chebyshev-Lobatto grid, axis s <-> coordinate s."""

    nu: int
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.shape != (self.nu + 1,) * 3:
            raise ValueError(f"grid values must have shape {(self.nu + 1,) * 3}, got {v.shape}")
        if not np.all(np.isfinite(v)):
            raise ValueError("grid values must be finite")
        object.__setattr__(self, "values", v)


def _cosine_sum_axis(g: np.ndarray, axis: int) -> np.ndarray:
    g = np.moveaxis(g, axis, -1)
    nu = g.shape[-1] - 1
    ext = np.concatenate([g, g[..., nu - 1:0:-1]], axis=-1)
    spec = np.fft.rfft(ext, axis=-1).real          # length nu + 1
    sign = np.where(np.arange(nu + 1) % 2 == 0, 1.0, -1.0)
    out = 0.5 * (spec + g[..., :1] + sign * g[..., nu:nu + 1])
    return np.moveaxis(out, -1, axis)


def cosine_sum_1d(g, nu: int | None = None) -> np.ndarray:
    g = np.asarray(g, dtype=float)
    if g.ndim != 1:
        raise ValueError("g must be one-dimensional")
    if nu is None:
        nu = len(g) - 1
    if len(g) != nu + 1:
        raise ValueError(f"length of g is {len(g)}, expected nu+1 = {nu + 1}")
    if nu < 1:
        raise ValueError("nu must be >= 1")
    return _cosine_sum_axis(g, 0)


def cosine_sum_1d_direct(g, nu: int | None = None) -> np.ndarray:
    """O(nu^2) reference: the cosine sum evaluated term by term."""
    g = np.asarray(g, dtype=float)
    if nu is None:
        nu = len(g) - 1
    if len(g) != nu + 1:
        raise ValueError(f"length of g is {len(g)}, expected nu+1 = {nu + 1}")
    k = np.arange(nu + 1)
    out = np.empty(nu + 1)
    for a in range(nu + 1):
        out[a] = np.sum(g * np.cos(k * a * np.pi / nu))
    return out


def cosine_sum_3d(F: GridArray | np.ndarray) -> np.ndarray:
    """Cosine sum along each of the three axes; output axis s carries index a_s."""
    values = F.values if isinstance(F, GridArray) else GridArray(np.shape(F)[0] - 1, F).values
    out = values
    for axis in range(3):
        out = _cosine_sum_axis(out, axis)
    return out


def cosine_sum_3d_direct(F: GridArray | np.ndarray) -> np.ndarray:
    values = F.values if isinstance(F, GridArray) else GridArray(np.shape(F)[0] - 1, F).values
    nu = values.shape[0] - 1
    k = np.arange(nu + 1)
    cos = np.cos(np.outer(k, k) * np.pi / nu)     # cos[a, i]
    return np.einsum("ijk,ai,bj,ck->abc", values, cos, cos, cos, optimize=True)
