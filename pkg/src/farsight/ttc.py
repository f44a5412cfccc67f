"""Top trading cycles on the deferred-acceptance endowment.

Each round every unfixed boy points at the holder of his favourite unfixed
girl; every cycle of that pointer graph (self-loops included) is executed and
its members leave. No veto check is made, which is why the outcome can differ
from the farsighted matching.
"""
from __future__ import annotations

from .core import Instance, Matching
from .gale_shapley import solve_gs
from .linear import CycleReport


class NoCycle(RuntimeError):
    pass


def _pointer_cycles(point: dict[int, int]) -> list[list[int]]:
    state: dict[int, int] = {}
    cycles = []
    for start in sorted(point):
        if start in state:
            continue
        path = []
        b = start
        while b not in state:
            state[b] = 1
            path.append(b)
            b = point[b]
        if state[b] == 1:
            cycles.append(path[path.index(b):])
        for x in path:
            state[x] = 2
    return cycles


def ttc_rounds(instance: Instance) -> list[list[CycleReport]]:
    n = instance.n
    gs, _ = solve_gs(instance)
    holds = list(gs.match_of_boy)
    holder = gs.match_of_girl()
    girl_free = [True] * n
    boys_left = set(range(n))
    rounds = []
    while boys_left:
        point = {}
        for b in boys_left:
            top = next(g for g in instance.boy_prefs[b] if girl_free[g])
            point[b] = holder[top]
        cycles = _pointer_cycles(point)
        if not cycles:
            raise NoCycle("pointer graph without a cycle")
        reports = []
        for cyc in cycles:
            reports.append(CycleReport(tuple(cyc), tuple(holds[b] for b in cyc)))
        reports.sort(key=lambda r: min(r.boys))
        for rep in reports:
            for b, g in rep.assignment().items():
                holds[b] = g
                holder[g] = b
                girl_free[g] = False
                boys_left.discard(b)
        rounds.append(reports)
    return rounds


def solve_ttc(instance: Instance) -> Matching:
    mob = [None] * instance.n
    for reports in ttc_rounds(instance):
        for rep in reports:
            for b, g in rep.assignment().items():
                mob[b] = g
    return Matching(tuple(mob))


def first_top_cycle(instance: Instance) -> list[CycleReport]:
    """All cycles executed in the first round, ordered by their lowest boy index."""
    return ttc_rounds(instance)[0]
