"""Property sweep (differential, dominance, hopeless man, uniqueness, stability) over several seeds."""
import argparse
import json
import time

from farsight.oracle import verify_sweep


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    p.add_argument("--n-max", type=int, default=10)
    args = p.parse_args()
    failed = False
    for seed in args.seeds:
        t0 = time.perf_counter()
        report = verify_sweep(args.count, seed, 2, args.n_max)
        print(f"seed={seed} instances={report.instances} failures={len(report.failures)} "
              f"{time.perf_counter() - t0:.1f}s")
        for f in report.failures:
            print(json.dumps(f))
        failed |= not report.passed
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
