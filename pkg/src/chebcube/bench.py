"""Test integrands, tensor-product baseline rules, reference values and the benchmark runner."""

from __future__ import annotations

import csv
import functools
import io
import json
import logging
import math
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .cc3 import cc_rule
from .cheb1d import gauss_chebyshev_rule, gauss_lobatto_rule
from .cubature import CubatureRule, Measure, SigmaPattern, build_sigma_rule
from .errors import ConvergenceError

log = logging.getLogger(__name__)

CSV_COLUMNS = ("rule", "measure", "n", "nodes", "function", "approx", "reference", "rel_error")


def fmt(x: float) -> str:
    return format(float(x), ".17g")


# --------------------------------------------------------------------------
# test functions; each accepts x of shape (..., 3)

def _r2(x):
    x = np.asarray(x, dtype=float)
    return x[..., 0] ** 2 + x[..., 1] ** 2 + x[..., 2] ** 2


def _poly(x):
    x = np.asarray(x, dtype=float)
    return ((x[..., 0] + x[..., 1] + x[..., 2]) / 3.0) ** 20


def _exp(x):
    x = np.asarray(x, dtype=float)
    return np.exp(x[..., 0] + x[..., 1] + x[..., 2])


def _gaussian(x):
    return np.exp(-_r2(x))


def _runge(x):
    return 1.0 / (1.0 + 16.0 * _r2(x))


def _cinf(x):
    r2 = _r2(x)
    safe = np.where(r2 > 0.0, r2, 1.0)
    return np.where(r2 > 0.0, np.exp(-1.0 / safe), 0.0)


def _c2(x):
    return _r2(x) ** 1.5


@dataclass(frozen=True)
class TestFunction:
    __test__ = False  # not a pytest class

    id: str
    evaluator: Callable
    smoothness_class: str
    formula: str = ""

    def __call__(self, x):
        out = self.evaluator(x)
        return float(out) if np.ndim(out) == 0 else out


_SUITE = (
    TestFunction("POLY", _poly, "entire", "((x1+x2+x3)/3)^20"),
    TestFunction("EXP", _exp, "entire", "exp(x1+x2+x3)"),
    TestFunction("GAUSSIAN", _gaussian, "entire", "exp(-(x1^2+x2^2+x3^2))"),
    TestFunction("RUNGE", _runge, "analytic, not entire", "1/(1+16(x1^2+x2^2+x3^2))"),
    TestFunction("CINF", _cinf, "C-infinity, not analytic", "exp(-1/(x1^2+x2^2+x3^2)), 0 at origin"),
    TestFunction("C2", _c2, "C^2", "(x1^2+x2^2+x3^2)^(3/2)"),
)


def test_suite() -> tuple[TestFunction, ...]:
    return _SUITE


test_suite.__test__ = False


def get_function(fid: str) -> TestFunction:
    for f in _SUITE:
        if f.id == fid.upper():
            return f
    raise KeyError(f"unknown test function {fid!r}; choose from {[f.id for f in _SUITE]}")


# --------------------------------------------------------------------------
# 1-D baseline rules on [-1, 1]

def _legendre(n: int, x):
    """P_n(x) and P_{n-1}(x) by the three-term recurrence."""
    p0, p1 = np.ones_like(x), x
    if n == 0:
        return p0, np.zeros_like(x)
    for k in range(2, n + 1):
        p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
    return p1, p0


def gauss_legendre_1d(n: int, tol: float = 1e-15, maxiter: int = 100):
    """n-point Gauss-Legendre nodes (decreasing) and weights by Newton iteration."""
    if n < 1:
        raise ValueError("n must be >= 1")
    k = np.arange(1, n + 1)
    x = np.cos(np.pi * (k - 0.25) / (n + 0.5))
    for _ in range(maxiter):
        p, pm1 = _legendre(n, x)
        dp = n * (x * p - pm1) / (x * x - 1.0)
        dx = p / dp
        x = x - dx
        if np.max(np.abs(dx)) <= tol:
            break
    else:
        raise ConvergenceError(f"Gauss-Legendre Newton iteration did not converge for n={n}")
    p, pm1 = _legendre(n, x)
    dp = n * (x * p - pm1) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    return x, w


def gauss_legendre_lobatto_1d(n: int, tol: float = 1e-15, maxiter: int = 100):
    """(n+1)-point Gauss-Legendre-Lobatto rule: +-1 and the zeros of P_n'."""
    if n < 1:
        raise ValueError("n must be >= 1")
    x = np.cos(np.arange(n + 1) * np.pi / n)
    interior = x[1:-1].copy()
    if n > 1:
        for _ in range(maxiter):
            p, pm1 = _legendre(n, interior)
            dp = n * (interior * p - pm1) / (interior ** 2 - 1.0)
            # (1-x^2) P'' = 2x P' - n(n+1) P
            d2p = (2.0 * interior * dp - n * (n + 1) * p) / (1.0 - interior ** 2)
            dx = dp / d2p
            interior = interior - dx
            if np.max(np.abs(dx)) <= tol:
                break
        else:
            raise ConvergenceError(f"Gauss-Legendre-Lobatto Newton iteration did not converge for n={n}")
    x = np.concatenate([[1.0], interior, [-1.0]])
    p, _ = _legendre(n, x)
    return x, 2.0 / (n * (n + 1) * p * p)


def clenshaw_curtis_1d(n: int):
    """(n+1)-point Clenshaw-Curtis rule on the Chebyshev-Lobatto points."""
    if n < 1:
        raise ValueError("n must be >= 1")
    j = np.arange(n + 1)
    x = np.cos(j * np.pi / n)
    w = np.ones(n + 1)
    for k in range(1, n // 2 + 1):
        b = 1.0 if 2 * k == n else 2.0
        w -= b * np.cos(2 * k * j * np.pi / n) / (4 * k * k - 1)
    c = np.full(n + 1, 2.0)
    c[0] = c[-1] = 1.0
    return x, c * w / n


TENSOR_KINDS = ("GAUSS_CHEB", "GAUSS_CHEB_LOBATTO", "GAUSS_LEGENDRE",
                "GAUSS_LEGENDRE_LOBATTO", "CLENSHAW_CURTIS")


def rule_1d(kind: str, n: int):
    kind = kind.upper()
    if kind == "GAUSS_CHEB":
        r = gauss_chebyshev_rule(n)
        return r.nodes, r.weights, Measure.CHEBYSHEV_NORMALIZED
    if kind == "GAUSS_CHEB_LOBATTO":
        r = gauss_lobatto_rule(n)
        return r.nodes, r.weights, Measure.CHEBYSHEV_NORMALIZED
    if kind == "GAUSS_LEGENDRE":
        return (*gauss_legendre_1d(n), Measure.LEBESGUE)
    if kind == "GAUSS_LEGENDRE_LOBATTO":
        return (*gauss_legendre_lobatto_1d(n), Measure.LEBESGUE)
    if kind == "CLENSHAW_CURTIS":
        return (*clenshaw_curtis_1d(n), Measure.LEBESGUE)
    raise ValueError(f"unknown rule kind {kind!r}; choose from {TENSOR_KINDS}")


def tensor_rule(kind: str, n: int, d: int) -> CubatureRule:
    if n < 1 or d < 1:
        raise ValueError("n and d must be >= 1")
    x, w, measure = rule_1d(kind, n)
    mesh = np.meshgrid(*([np.arange(len(x))] * d), indexing="ij")
    idx = np.stack([m.ravel() for m in mesh], axis=1)
    return CubatureRule(d, n, measure, x[idx], np.prod(w[idx], axis=1), None,
                        name=kind.lower())


# --------------------------------------------------------------------------
# reference integrals

def _tensor_sum_3d(f: Callable, x: np.ndarray, w: np.ndarray) -> float:
    """sum_{ijk} w_i w_j w_k f(x_i, x_j, x_k), one x1-slice at a time."""
    x2, x3 = np.meshgrid(x, x, indexing="ij")
    w23 = np.outer(w, w)
    pts = np.empty(x2.shape + (3,))
    pts[..., 1], pts[..., 2] = x2, x3
    slices = np.empty(len(x))
    for i, xi in enumerate(x):
        pts[..., 0] = xi
        slices[i] = np.sum(w23 * f(pts))
    return float(np.dot(w, slices))


@dataclass(frozen=True)
class Reference:
    value: float
    agreement: float
    n_final: int
    converged: bool


@functools.lru_cache(maxsize=None)
def _reference(fid: str, measure: Measure, tol: float, n_start: int, n_max: int) -> Reference:
    f = get_function(fid)
    kind = "GAUSS_CHEB" if measure == Measure.CHEBYSHEV_NORMALIZED else "GAUSS_LEGENDRE"
    n = n_start
    prev = _tensor_sum_3d(f, *rule_1d(kind, n)[:2])
    agreement = math.inf
    while n < n_max:
        n *= 2
        cur = _tensor_sum_3d(f, *rule_1d(kind, n)[:2])
        agreement = abs(cur - prev) / max(abs(cur), 1e-300)
        prev = cur
        if agreement <= tol:
            return Reference(cur, agreement, n, True)
    log.info("reference for %s/%s stopped at n=%d with agreement %.3g",
             fid, measure.value, n, agreement)
    return Reference(prev, agreement, n, False)


def reference_integral(f: TestFunction | str, measure: Measure | str,
                       tol: float = 1e-14, n_start: int = 32, n_max: int = 512) -> Reference:
    """Tensor Gauss reference, doubling n until successive values agree to ``tol``.

    Non-convergence is not an error: the achieved agreement is returned.
    """
    fid = f if isinstance(f, str) else f.id
    return _reference(fid.upper(), Measure(measure), tol, n_start, n_max)


# --------------------------------------------------------------------------
# benchmark runner

CHEB_RULES = ("sigma_EEE", "gauss_cheb", "gauss_cheb_lobatto")
LEBESGUE_RULES = ("cc_EEE", "clenshaw_curtis", "gauss_legendre", "gauss_legendre_lobatto")
DEFAULT_N_RANGE = (2, 40)


def rule_measure(name: str) -> Measure:
    if name.startswith("sigma_") or name in ("gauss_cheb", "gauss_cheb_lobatto"):
        return Measure.CHEBYSHEV_NORMALIZED
    if name.startswith("cc_") or name in ("clenshaw_curtis", "gauss_legendre",
                                          "gauss_legendre_lobatto"):
        return Measure.LEBESGUE
    raise ValueError(f"unknown rule {name!r}")


def validate_rule_name(name: str) -> str:
    rule_measure(name)
    if name.startswith(("sigma_", "cc_")):
        sigma = SigmaPattern.parse(name.split("_", 1)[1])
        if len(sigma) != 3:
            raise ValueError(f"rule {name!r}: sigma must have length 3")
    return name


def make_rule(name: str, n: int):
    """Return (nodes, weights) of a named 3-D benchmark rule at parameter n."""
    if name.startswith("sigma_"):
        r = build_sigma_rule(3, n, name[len("sigma_"):])
        return r.nodes, r.weights
    if name.startswith("cc_"):
        r = cc_rule(n, name[len("cc_"):])
        return r.points, r.weights
    r = tensor_rule(name.upper(), n, 3)
    return r.nodes, r.weights


@dataclass(frozen=True)
class BenchRecord:
    rule_name: str
    measure: str
    n: int
    num_nodes: int
    function_id: str
    approx_value: float
    reference_value: float
    relative_error: float

    def row(self) -> list[str]:
        return [self.rule_name, self.measure, str(self.n), str(self.num_nodes),
                self.function_id, fmt(self.approx_value), fmt(self.reference_value),
                fmt(self.relative_error)]


@dataclass
class BenchConfig:
    functions: Sequence[str] = tuple(f.id for f in _SUITE)
    rules: Sequence[str] = CHEB_RULES + LEBESGUE_RULES
    n_min: int = DEFAULT_N_RANGE[0]
    n_max: int = DEFAULT_N_RANGE[1]
    stride: int = 1
    measure: str | None = None
    out: Path | None = None
    n_values: Sequence[int] | None = None

    def ns(self) -> list[int]:
        if self.n_values is not None:
            return sorted(set(int(n) for n in self.n_values))
        return list(range(self.n_min, self.n_max + 1, self.stride))

    def selected_rules(self) -> list[str]:
        rules = [validate_rule_name(r) for r in self.rules]
        if self.measure is not None:
            m = Measure(self.measure)
            rules = [r for r in rules if rule_measure(r) == m]
        return rules


def _min_n(name: str) -> int:
    return 2 if name.startswith("sigma_") else 1


def run_benchmark(config: BenchConfig) -> list[BenchRecord]:
    """One record per (rule, n, function), sorted by (rule, function, n)."""
    functions = [get_function(fid) for fid in config.functions]
    records = []
    for name in config.selected_rules():
        measure = rule_measure(name)
        for n in config.ns():
            if n < _min_n(name):
                continue
            nodes, weights = make_rule(name, n)
            for f in functions:
                ref = reference_integral(f, measure).value
                approx = float(np.dot(weights, f(nodes)))
                records.append(BenchRecord(name, measure.value, n, len(weights), f.id, approx,
                                           ref, abs(approx - ref) / max(abs(ref), 1e-300)))
    records.sort(key=lambda r: (r.rule_name, r.function_id, r.n))
    if config.out is not None:
        write_bench_csv(records, config.out)
        write_bench_metadata(config, Path(str(config.out) + ".meta.json"))
    return records


def bench_csv_text(records: Sequence[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow(r.row())
    return buf.getvalue()


def write_bench_csv(records: Sequence[BenchRecord], path: Path) -> None:
    path = Path(path)
    try:
        with open(path, "w", newline="") as fh:
            fh.write(bench_csv_text(records))
    except OSError as exc:
        raise OSError(f"cannot write benchmark CSV to {path}: {exc}") from exc


def write_bench_metadata(config: BenchConfig, path: Path) -> None:
    meta = {
        "functions": list(config.functions),
        "rules": config.selected_rules(),
        "n_values": config.ns(),
        "references": {},
    }
    for fid in config.functions:
        for m in {rule_measure(r) for r in config.selected_rules()}:
            ref = reference_integral(fid, m)
            meta["references"][f"{fid}/{m.value}"] = asdict(ref)
    try:
        Path(path).write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write benchmark metadata to {path}: {exc}") from exc
