"""Doubling-ratio benchmark for both farsighted solvers.

    python3 scripts/run_scaling.py --out results/
"""
import argparse
from pathlib import Path

from farsight.bench import run_scaling, to_csv

DEFAULT_SIZES = {
    "farsighted-linear": [250, 500, 1000, 2000],
    "farsighted-ref": [100, 200, 400, 800],
}


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=Path, help="directory for per-algorithm CSV files")
    args = p.parse_args()
    for algorithm, sizes in DEFAULT_SIZES.items():
        text = to_csv(run_scaling(algorithm, sizes, args.repeats, args.seed))
        print(text)
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            (args.out / f"scaling_{algorithm}.csv").write_text(text)


if __name__ == "__main__":
    main()
