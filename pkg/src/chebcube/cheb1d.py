"""One-dimensional Chebyshev machinery.

All rules here integrate against the *normalized* Chebyshev weight
w(x) = 1 / (pi * sqrt(1 - x^2)) on [-1, 1], whose total mass is 1.

Nodes are produced as ``cos(j*pi/n)`` directly, in index order, so they are
sorted by decreasing abscissa.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .errors import DomainError

CLAMP_TOL = 1e-12


class RuleKind(str, Enum):
    GAUSS = "GAUSS"
    LOBATTO = "LOBATTO"
    HALF_E = "HALF_E"
    HALF_O = "HALF_O"


@dataclass(frozen=True)
class Rule1D:
    """Nodes and weights of a 1-D quadrature functional.

    ``lobatto_index`` holds, for LOBATTO and the two halves, the position
    ``j`` of each node ``cos(j*pi/n)`` in the parent Lobatto grid; it is
    ``None`` for Gauss rules.
    """

    nodes: np.ndarray
    weights: np.ndarray
    label: RuleKind
    n: int
    lobatto_index: np.ndarray | None = None

    def __post_init__(self):
        for arr in (self.nodes, self.weights, self.lobatto_index):
            if arr is not None:
                arr.setflags(write=False)

    def __len__(self) -> int:
        return len(self.nodes)


def _check_domain(x):
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0 + CLAMP_TOL):
        raise DomainError(f"argument outside [-1, 1]: max |x| = {np.max(np.abs(x))!r}")
    return np.clip(x, -1.0, 1.0)


def cheb_T(k: int, x):
    """Chebyshev polynomial ``T_k(x) = cos(k arccos x)``; accepts scalars or arrays."""
    if k < 0:
        raise ValueError("k must be non-negative")
    xc = _check_domain(x)
    out = np.cos(k * np.arccos(xc))
    return float(out) if out.ndim == 0 else out


def cheb_T_hat(k: int, x):
    """Orthonormal Chebyshev polynomial: ``T_0`` = 1, ``sqrt(2) T_k`` for k > 0."""
    val = cheb_T(k, x)
    return val if k == 0 else math.sqrt(2.0) * val


def cheb_T_hat_table(n: int, x) -> np.ndarray:
    """Rows ``0..n`` of orthonormal Chebyshev values at the points ``x``.

    Returns an array of shape ``(n + 1,) + x.shape``.
    """
    theta = np.arccos(_check_domain(x))
    k = np.arange(n + 1).reshape((-1,) + (1,) * theta.ndim)
    table = np.cos(k * theta)
    table[1:] *= math.sqrt(2.0)
    return table


def _require_positive(n: int, minimum: int = 1):
    if int(n) != n or n < minimum:
        raise ValueError(f"n must be an integer >= {minimum}, got {n!r}")


def gauss_chebyshev_rule(n: int) -> Rule1D:
    _require_positive(n)
    k = np.arange(1, n + 1)
    nodes = np.cos((2 * k - 1) * np.pi / (2 * n))
    return Rule1D(nodes, np.full(n, 1.0 / n), RuleKind.GAUSS, n)


def lobatto_nodes(n: int) -> np.ndarray:
    """The n+1 Chebyshev-Lobatto points ``cos(j*pi/n)``, j = 0..n."""
    return np.cos(np.arange(n + 1) * np.pi / n)


def lobatto_weights(n: int) -> np.ndarray:
    w = np.full(n + 1, 1.0 / n)
    w[0] = w[-1] = 0.5 / n
    return w


def gauss_lobatto_rule(n: int) -> Rule1D:
    _require_positive(n)
    return Rule1D(lobatto_nodes(n), lobatto_weights(n), RuleKind.LOBATTO, n,
                  np.arange(n + 1))


def split_lobatto(n: int) -> tuple[Rule1D, Rule1D]:
    """Split the Lobatto rule of parameter ``n`` by index parity.

    Returns ``(E, O)`` where E keeps the even-indexed nodes and O the odd ones.
    For n = 2m both endpoints fall in E; for n = 2m-1 the endpoint -1 is in O.
    """
    _require_positive(n, 2)
    x = lobatto_nodes(n)
    w = lobatto_weights(n)
    idx = np.arange(n + 1)
    even, odd = idx[0::2], idx[1::2]
    half_e = Rule1D(x[even], w[even], RuleKind.HALF_E, n, even)
    half_o = Rule1D(x[odd], w[odd], RuleKind.HALF_O, n, odd)
    return half_e, half_o


def lemma_value(parity: str, n: int, k: int) -> float:
    """Closed form of ``I^E_n T_k`` (parity "E") or ``I^O_n T_k`` (parity "O")."""
    _require_positive(n, 2)
    if k < 0:
        k = -k
    if k % n:
        return 0.0
    parity = str(parity).upper()
    if parity == "E":
        return 0.5
    if parity == "O":
        return 0.5 if (k // n) % 2 == 0 else -0.5
    raise ValueError(f"parity must be 'E' or 'O', got {parity!r}")


def apply_rule(rule: Rule1D, f: Callable[[float], float]) -> float:
    values = np.array([f(float(x)) for x in rule.nodes], dtype=float)
    return float(np.dot(rule.weights, values))
