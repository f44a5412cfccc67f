"""Wall-clock scaling runs for the solvers."""
from __future__ import annotations

import csv
import gc
import io
import statistics
import time
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .core import Instance, Matching
from .gale_shapley import solve_gs
from .linear import solve_farsighted_linear
from .oracle import gen_random_instance
from .reference import solve_farsighted_ref
from .ttc import solve_ttc

ALGORITHMS: dict[str, Callable[[Instance], Matching]] = {
    "gs": lambda inst: solve_gs(inst)[0],
    "farsighted-ref": solve_farsighted_ref,
    "farsighted-linear": solve_farsighted_linear,
    "ttc": solve_ttc,
}


@dataclass
class ScalingRow:
    algorithm: str
    n: int
    median_ns: int
    ratio_to_prev: Optional[float]


def time_once(fn: Callable[[Instance], object], instance: Instance) -> int:
    enabled = gc.isenabled()
    gc.disable()
    try:
        t0 = time.perf_counter_ns()
        fn(instance)
        return time.perf_counter_ns() - t0
    finally:
        if enabled:
            gc.enable()


def run_scaling(algorithm: str, n_values: Sequence[int], repeats: int = 5, seed: int = 0) -> list[ScalingRow]:
    if repeats < 3:
        raise ValueError("repeats must be at least 3")
    if list(n_values) != sorted(n_values):
        raise ValueError("n_values must be ascending")
    fn = ALGORITHMS[algorithm]
    rows: list[ScalingRow] = []
    prev = None
    for n in n_values:
        inst = gen_random_instance(n, seed + n)
        med = int(statistics.median(time_once(fn, inst) for _ in range(repeats)))
        ratio = med / prev if prev else None
        rows.append(ScalingRow(algorithm, n, med, ratio))
        prev = med
    return rows


def to_csv(rows: Sequence[ScalingRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["algorithm", "n", "median_ns", "ratio_to_prev"])
    for r in rows:
        w.writerow([r.algorithm, r.n, r.median_ns, "" if r.ratio_to_prev is None else f"{r.ratio_to_prev:.3f}"])
    return buf.getvalue()
