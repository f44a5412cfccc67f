"""Seeded instance generation, brute-force baselines and theorem checks.

Generator (reproducible across languages), all arithmetic mod 2**64:

* rows are numbered r = 0..2n-1, boys 0..n-1 first, then girls.
* row r has its own stream with state ``splitmix64(splitmix64(seed) + r)``;
  a zero state is replaced by ``0x9E3779B97F4A7C15``.
* draw: xorshift64* -- ``x ^= x >> 12; x ^= x << 25; x ^= x >> 27``,
  output ``x * 0x2545F4914F6CDD1D``.
* each row is Fisher-Yates on ``[0, 1, ..., n-1]``: for ``i = n-1 .. 1``,
  ``j = draw() % (i + 1)``, swap positions i and j.

:func:`gen_random_instance` runs all row streams side by side with numpy;
:class:`XorShift64Star` is the scalar form of one stream.
"""
from __future__ import annotations

import itertools

import numpy as np
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .core import Instance, Matching, format_instance, rank_in_boy_list
from .gale_shapley import is_strictly_stable, solve_gs
from .linear import solve_farsighted_linear
from .reference import (
    Chooser,
    farsighted_rounds,
    highest_index_chooser,
    last_proposal_chooser,
    lowest_index_chooser,
    random_chooser,
    solve_farsighted_ref,
    solve_farsighted_ref_with_choice,
)

MASK64 = (1 << 64) - 1
MAX_ENUMERATION_N = 8


class TooLarge(ValueError):
    pass


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


ZERO_STATE = 0x9E3779B97F4A7C15
XORSHIFT_MULT = 0x2545F4914F6CDD1D


def row_state(seed: int, r: int) -> int:
    return splitmix64((splitmix64(seed & MASK64) + r) & MASK64) or ZERO_STATE


class XorShift64Star:
    def __init__(self, state: int):
        self.state = state or ZERO_STATE

    def next(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * XORSHIFT_MULT) & MASK64

    def permutation(self, n: int) -> list[int]:
        row = list(range(n))
        for i in range(n - 1, 0, -1):
            j = self.next() % (i + 1)
            row[i], row[j] = row[j], row[i]
        return row


def gen_random_instance(n: int, seed: int) -> Instance:
    if n < 1:
        raise ValueError("n must be positive")
    m = 2 * n
    state = np.array([row_state(seed, r) for r in range(m)], dtype=np.uint64)
    rows = np.tile(np.arange(n, dtype=np.int64), (m, 1))
    which = np.arange(m)
    mult = np.uint64(XORSHIFT_MULT)
    s12, s25, s27 = np.uint64(12), np.uint64(25), np.uint64(27)
    for i in range(n - 1, 0, -1):
        state ^= state >> s12
        state ^= state << s25
        state ^= state >> s27
        j = ((state * mult) % np.uint64(i + 1)).astype(np.int64)
        a = rows[:, i].copy()
        rows[:, i] = rows[which, j]
        rows[which, j] = a
    out = rows.tolist()
    return Instance(n, out[:n], out[n:])


def gen_random_instance_scalar(n: int, seed: int) -> Instance:
    """Row-by-row form of :func:`gen_random_instance`, one Python stream per row."""
    rows = [XorShift64Star(row_state(seed, r)).permutation(n) for r in range(2 * n)]
    return Instance(n, rows[:n], rows[n:])


def sweep_instances(count: int, seed: int, n_min: int = 2, n_max: int = 10) -> Iterator[tuple[int, Instance]]:
    """Instance i has n = n_min + i mod (n_max - n_min + 1) and seed ``seed + i``."""
    span = n_max - n_min + 1
    for i in range(count):
        yield seed + i, gen_random_instance(n_min + i % span, seed + i)


def enumerate_stable_matchings(instance: Instance) -> list[Matching]:
    if instance.n > MAX_ENUMERATION_N:
        raise TooLarge(f"n={instance.n} exceeds {MAX_ENUMERATION_N}")
    out = []
    for perm in itertools.permutations(range(instance.n)):
        m = Matching(perm)
        if is_strictly_stable(instance, m):
            out.append(m)
    return out


def man_optimal(instance: Instance, matchings: list[Matching]) -> Optional[Matching]:
    """The matching in ``matchings`` best for every boy at once, if one exists."""
    for m in matchings:
        if all(
            rank_in_boy_list(instance, b, m[b]) <= rank_in_boy_list(instance, b, other[b])
            for other in matchings
            for b in range(instance.n)
        ):
            return m
    return None


@dataclass
class Verdict:
    passed: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed


def check_theorem1(instance: Instance, farsighted: Optional[Matching] = None) -> Verdict:
    gs, _ = solve_gs(instance)
    fs = farsighted if farsighted is not None else solve_farsighted_ref(instance)
    worse = [
        b for b in range(instance.n)
        if rank_in_boy_list(instance, b, fs[b]) > rank_in_boy_list(instance, b, gs[b])
    ]
    if worse:
        return Verdict(False, f"boys worse than deferred acceptance: {worse}")
    return Verdict(True)


def check_theorem2(instance: Instance, farsighted: Optional[Matching] = None) -> Verdict:
    """Every sole proposer of the full run keeps his partner from that run."""
    gs, trace = solve_gs(instance)
    fs = farsighted if farsighted is not None else solve_farsighted_ref(instance)
    counts = trace.proposer_counts(instance.n)
    hopeless = [gs.match_of_girl()[g] for g in range(instance.n) if counts[g] == 1]
    first = farsighted_rounds(instance)[0].boy
    if first not in hopeless:
        return Verdict(False, f"round-1 boy {first} is not a sole proposer")
    moved = [b for b in hopeless if fs[b] != gs[b]]
    if moved:
        return Verdict(False, f"hopeless boys moved: {moved}")
    return Verdict(True)


def chooser_policies(k: int) -> list[tuple[str, Chooser]]:
    base: list[tuple[str, Chooser]] = [
        ("last-proposal", last_proposal_chooser),
        ("lowest-index", lowest_index_chooser),
        ("highest-index", highest_index_chooser),
    ]
    for i in range(max(0, k - len(base))):
        base.append((f"random-{i}", random_chooser(i)))
    return base[:k]


def check_uniqueness(instance: Instance, k_choosers: int = 3) -> Verdict:
    results = {name: solve_farsighted_ref_with_choice(instance, ch) for name, ch in chooser_policies(k_choosers)}
    results["linear"] = solve_farsighted_linear(instance)
    distinct = set(results.values())
    if len(distinct) != 1:
        return Verdict(False, "; ".join(f"{k}={v.match_of_boy}" for k, v in results.items()))
    return Verdict(True)


def check_differential(instance: Instance) -> Verdict:
    ref = solve_farsighted_ref(instance)
    lin = solve_farsighted_linear(instance)
    if ref != lin:
        return Verdict(False, f"reference {ref.match_of_boy} != linear {lin.match_of_boy}")
    return Verdict(True)


@dataclass
class SweepReport:
    instances: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"instances": self.instances, "passed": self.passed, "failures": self.failures}


def verify_sweep(count: int, seed: int, n_min: int = 2, n_max: int = 10, k_choosers: int = 3) -> SweepReport:
    report = SweepReport()
    for s, inst in sweep_instances(count, seed, n_min, n_max):
        report.instances += 1
        ref = solve_farsighted_ref(inst)
        gs, _ = solve_gs(inst)
        checks = {
            "differential": check_differential(inst),
            "theorem1": check_theorem1(inst, ref),
            "theorem2": check_theorem2(inst, ref),
            "uniqueness": check_uniqueness(inst, k_choosers),
            "gs_stable": Verdict(is_strictly_stable(inst, gs), "deferred acceptance output has a blocking pair"),
        }
        for name, v in checks.items():
            if not v:
                report.failures.append(
                    {"check": name, "seed": s, "n": inst.n, "detail": v.detail, "instance": format_instance(inst)}
                )
    return report
