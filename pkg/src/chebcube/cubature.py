"""Even/odd factorized cubature for the product Chebyshev measure on [-1, 1]^d.

For a pattern sigma over {E, O} the rule is

    2^(d-1) * ( I^{sigma_1} ... I^{sigma_d} f  +  I^{~sigma_1} ... I^{~sigma_d} f )

with I^E, I^O the halves of the Chebyshev-Lobatto rule of parameter n and
~sigma the flipped pattern. It is exact for total degree <= 2n-1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable

import numpy as np

from .cheb1d import Rule1D, split_lobatto


class Measure(str, Enum):
    CHEBYSHEV_NORMALIZED = "CHEBYSHEV_NORMALIZED"
    LEBESGUE = "LEBESGUE"


@dataclass(frozen=True)
class SigmaPattern:
    entries: tuple[str, ...]

    def __post_init__(self):
        entries = tuple(str(e).upper() for e in self.entries)
        if not entries:
            raise ValueError("sigma pattern must have length >= 1")
        bad = [e for e in entries if e not in ("E", "O")]
        if bad:
            raise ValueError(f"sigma entries must be 'E' or 'O', got {bad!r}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str | Iterable[str] | SigmaPattern) -> SigmaPattern:
        if isinstance(text, SigmaPattern):
            return text
        if isinstance(text, str):
            text = text.replace(",", "").replace(" ", "")
        return cls(tuple(text))

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "".join(self.entries)

    def flip(self) -> SigmaPattern:
        return flip(self)


def flip(sigma: SigmaPattern) -> SigmaPattern:
    return SigmaPattern(tuple("O" if e == "E" else "E" for e in sigma.entries))


def representative_patterns(d: int) -> list[SigmaPattern]:
    """One pattern per {sigma, flip(sigma)} class, each starting with E."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return [SigmaPattern(("E",) + tail)
            for tail in itertools.product("EO", repeat=d - 1)]


@dataclass(frozen=True)
class CubatureRule:
    dim: int
    degree_param: int
    measure: Measure
    nodes: np.ndarray       # shape (N, dim)
    weights: np.ndarray     # shape (N,)
    sigma: SigmaPattern | None = None
    name: str = ""

    def __post_init__(self):
        self.nodes.setflags(write=False)
        self.weights.setflags(write=False)

    def __len__(self) -> int:
        return len(self.weights)


def _check_args(d: int, n: int, sigma) -> SigmaPattern:
    if int(d) != d or d < 1:
        raise ValueError(f"dimension must be >= 1, got {d!r}")
    if int(n) != n or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")
    sigma = SigmaPattern.parse(sigma)
    if len(sigma) != d:
        raise ValueError(f"sigma {sigma} has length {len(sigma)}, expected {d}")
    return sigma


def _product_grid(halves: list[Rule1D]):
    """Cartesian product in lexicographic order of the 1-D node indices."""
    mesh = np.meshgrid(*[np.arange(len(h)) for h in halves], indexing="ij")
    pos = np.stack([m.ravel() for m in mesh], axis=1)
    nodes = np.column_stack([h.nodes[pos[:, s]] for s, h in enumerate(halves)])
    lob = np.column_stack([h.lobatto_index[pos[:, s]] for s, h in enumerate(halves)])
    weights = np.prod([h.weights[pos[:, s]] for s, h in enumerate(halves)], axis=0)
    return nodes, weights, lob


def sigma_grid(d: int, n: int, sigma) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Nodes, weights and Lobatto grid indices of the sigma rule.

    The sigma subgrid comes first, then the flipped subgrid.
    """
    sigma = _check_args(d, n, sigma)
    half = dict(zip("EO", split_lobatto(n)))
    parts = [_product_grid([half[e] for e in pat.entries])
             for pat in (sigma, flip(sigma))]
    nodes = np.concatenate([p[0] for p in parts])
    weights = 2.0 ** (d - 1) * np.concatenate([p[1] for p in parts])
    index = np.concatenate([p[2] for p in parts])
    # the two subgrids have opposite index parity in every coordinate
    n_first = len(parts[0][0])
    if n_first and len(parts[1][0]):
        a = {tuple(r) for r in index[:n_first]}
        assert not any(tuple(r) in a for r in index[n_first:]), "sigma subgrids overlap"
    return nodes, weights, index


def build_sigma_rule(d: int, n: int, sigma) -> CubatureRule:
    """Degree 2n-1 rule for the normalized product Chebyshev measure."""
    sigma = _check_args(d, n, sigma)
    nodes, weights, _ = sigma_grid(d, n, sigma)
    return CubatureRule(d, n, Measure.CHEBYSHEV_NORMALIZED, nodes, weights, sigma,
                        name=f"sigma_{sigma}")


def node_count(d: int, n: int, sigma) -> int:
    sigma = _check_args(d, n, sigma)
    e, o = split_lobatto(n)
    size = {"E": len(e), "O": len(o)}
    return (int(np.prod([size[s] for s in sigma.entries]))
            + int(np.prod([size[s] for s in flip(sigma).entries])))


def evaluate_at_nodes(f: Callable, nodes: np.ndarray, vectorized: bool = False) -> np.ndarray:
    """Evaluate ``f`` on the rows of ``nodes``.

    With ``vectorized=True`` ``f`` receives the whole ``(N, d)`` array once;
    otherwise it is called once per node with a length-d array.
    """
    if vectorized:
        values = np.asarray(f(nodes), dtype=float)
        if values.shape != (len(nodes),):
            raise ValueError(f"vectorized f returned shape {values.shape}, "
                             f"expected ({len(nodes)},)")
        return values
    return np.array([f(p) for p in nodes], dtype=float)


def integrate(rule: CubatureRule, f: Callable, vectorized: bool = False) -> float:
    return float(np.dot(rule.weights, evaluate_at_nodes(f, rule.nodes, vectorized)))
