"""Relative cubature errors vs. function evaluations, product Chebyshev measure.

New sigma rule against tensor Gauss-Chebyshev and Gauss-Chebyshev-Lobatto on the
six test integrands. Writes CSV (plus a .meta.json sidecar).

    python scripts/cubature_experiment.py --out cheb.csv --n-max 40
"""

import argparse
from pathlib import Path

from chebcube.bench import CHEB_RULES, BenchConfig, run_benchmark


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sigma", default="EEE")
    ap.add_argument("--n-min", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=40)
    ap.add_argument("--out", type=Path, default=Path("cubature_chebyshev.csv"))
    args = ap.parse_args()
    rules = [f"sigma_{args.sigma}"] + [r for r in CHEB_RULES if not r.startswith("sigma_")]
    recs = run_benchmark(BenchConfig(rules=rules, n_min=args.n_min, n_max=args.n_max, out=args.out))
    print(f"{len(recs)} records -> {args.out}")


if __name__ == "__main__":
    main()
