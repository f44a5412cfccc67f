"""Command line: solve, compare, verify, bench, gen.

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import bench as bench_mod
from .core import Instance, InstanceError, Matching, format_instance, parse_instance, rank_in_boy_list
from .gale_shapley import solve_gs
from .linear import solve_farsighted_linear
from .oracle import gen_random_instance, verify_sweep
from .reference import solve_farsighted_ref
from .ttc import solve_ttc

JSON_VERSION = 1
EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_USAGE = 0, 1, 2, 3

ALGORITHMS = ("gs", "farsighted-ref", "farsighted-linear", "ttc")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_seed() -> int:
    return int(os.environ.get("FARSIGHT_SEED", "0"))


def _read(args) -> Instance:
    if args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as f:
            text = f.read()
    return parse_instance(text, allow_partial=args.partial)


def _solve(instance: Instance, algorithm: str, audit: bool = False) -> Matching:
    if algorithm == "gs":
        return solve_gs(instance)[0]
    if algorithm == "farsighted-ref":
        return solve_farsighted_ref(instance)
    if algorithm == "farsighted-linear":
        return solve_farsighted_linear(instance, audit=audit)
    return solve_ttc(instance)


def _matching_text(m: Matching) -> str:
    return "\n".join(f"b{b}-g{g}" for b, g in m.pairs())


def cmd_solve(args, out) -> int:
    if args.trace and args.algorithm != "gs":
        raise UsageError("--trace is only available with --algorithm gs")
    if args.audit and args.algorithm != "farsighted-linear":
        raise UsageError("--audit is only available with --algorithm farsighted-linear")
    instance = _read(args)
    if args.algorithm == "gs":
        matching, trace = solve_gs(instance)
    else:
        matching, trace = _solve(instance, args.algorithm, audit=args.audit), None
    if args.format == "json":
        doc = {"version": JSON_VERSION, "algorithm": args.algorithm, **matching.to_json()}
        if args.trace:
            doc["trace"] = trace.render()
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(_matching_text(matching) + "\n")
        if args.trace:
            out.write(trace.render() + "\n")
    return EXIT_OK


def compare(instance: Instance) -> dict:
    results = {name: _solve(instance, name) for name in ALGORITHMS}
    boys = []
    for b in range(instance.n):
        row = {"boy": b}
        for name, m in results.items():
            row[name] = {"girl": m[b], "rank": rank_in_boy_list(instance, b, m[b])}
        row["ttc_differs"] = results["ttc"][b] != results["farsighted-linear"][b]
        row["ref_differs"] = results["farsighted-ref"][b] != results["farsighted-linear"][b]
        boys.append(row)
    return {
        "version": JSON_VERSION,
        "n": instance.n,
        "boys": boys,
        "ttc_divergent_boys": [r["boy"] for r in boys if r["ttc_differs"]],
        "ref_linear_agree": all(not r["ref_differs"] for r in boys),
    }


def cmd_compare(args, out) -> int:
    report = compare(_read(args))
    if args.format == "json":
        out.write(json.dumps(report) + "\n")
        return EXIT_OK
    head = f"{'boy':>4} " + " ".join(f"{name:>18}" for name in ALGORITHMS) + "  flags"
    out.write(head + "\n")
    for r in report["boys"]:
        cells = " ".join(f"{'g%d (rank %d)' % (r[a]['girl'], r[a]['rank']):>18}" for a in ALGORITHMS)
        flags = []
        if r["ttc_differs"]:
            flags.append("ttc!=farsighted")
        if r["ref_differs"]:
            flags.append("ref!=linear")
        out.write(f"{'b%d' % r['boy']:>4} {cells}  {','.join(flags)}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    report = verify_sweep(args.count, seed, args.n_min, args.n_max, args.choosers)
    doc = {"version": JSON_VERSION, "seed": seed, **report.to_json()}
    text = json.dumps(doc, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    out.write(text)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_bench(args, out) -> int:
    rows = bench_mod.run_scaling(args.algorithm, args.n, args.repeats, args.seed)
    text = bench_mod.to_csv(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_gen(args, out) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    text = format_instance(gen_random_instance(args.n, seed), comment=f"random instance n={args.n} seed={seed}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="farsight", description="Farsighted stable marriage solvers.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_input(sp):
        sp.add_argument("-i", "--input", help="instance file ('-' or omitted for stdin)")
        sp.add_argument("--partial", action="store_true", help="complete truncated rows ascending")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("solve", help="solve one instance")
    sp.add_argument("-a", "--algorithm", choices=ALGORITHMS, required=True)
    add_input(sp)
    sp.add_argument("--trace", action="store_true", help="print the proposal play (gs only)")
    sp.add_argument("--audit", action="store_true", help="recheck solver state after every step (farsighted-linear only)")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("compare", help="per-boy outcome under every algorithm")
    add_input(sp)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("verify", help="property sweep over random instances")
    sp.add_argument("--count", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--n-min", type=int, default=2)
    sp.add_argument("--n-max", type=int, default=10)
    sp.add_argument("--choosers", type=int, default=3)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="wall-clock scaling table (CSV)")
    sp.add_argument("-a", "--algorithm", choices=ALGORITHMS, required=True)
    sp.add_argument("--n", type=int, nargs="+", required=True)
    sp.add_argument("--repeats", type=int, default=5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("gen", help="write a seeded random instance")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gen)
    return p


def main(argv: Optional[list[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as e:
        print(f"farsight: usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InstanceError as e:
        print(f"farsight: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as e:
        print(f"farsight: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:
        if args.command in ("bench", "gen", "verify"):
            print(f"farsight: usage error: {e}", file=sys.stderr)
            return EXIT_USAGE
        raise


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
