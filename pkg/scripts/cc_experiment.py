"""Relative cubature errors vs. number of points, Lebesgue measure on [-1,1]^3.

Clenshaw-Curtis-like rule against tensor Clenshaw-Curtis, Gauss-Legendre and
Gauss-Legendre-Lobatto. Odd and even degrees are both recorded, so the parity
effect can be read off the CSV.

    python scripts/cc_experiment.py --out lebesgue.csv
"""

import argparse
from pathlib import Path

from chebcube.bench import LEBESGUE_RULES, BenchConfig, run_benchmark


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sigma", default="EEE")
    ap.add_argument("--n-min", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=40)
    ap.add_argument("--out", type=Path, default=Path("cubature_lebesgue.csv"))
    args = ap.parse_args()
    rules = [f"cc_{args.sigma}"] + [r for r in LEBESGUE_RULES if not r.startswith("cc_")]
    recs = run_benchmark(BenchConfig(rules=rules, n_min=args.n_min, n_max=args.n_max, out=args.out))
    print(f"{len(recs)} records -> {args.out}")


if __name__ == "__main__":
    main()
