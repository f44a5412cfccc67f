"""Cubic-time farsighted matching by repeated hopeless-man elimination.

Each round reruns deferred acceptance on the players still in play, fixes a
girl who received a single proposal to her only proposer, and removes both.
This is the correctness oracle for :mod:`farsight.linear`.
"""
from __future__ import annotations

import random
from itertools import compress
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .core import UNMATCHED, Instance, Matching
from .gale_shapley import ProposalTrace, deferred_acceptance, last_proposal

Chooser = Callable[[ProposalTrace, Sequence[int]], int]


class ChooserPickedInvalidGirl(ValueError):
    pass


def last_proposal_chooser(trace: ProposalTrace, candidates: Sequence[int]) -> int:
    return last_proposal(trace)[1]


def lowest_index_chooser(trace: ProposalTrace, candidates: Sequence[int]) -> int:
    return candidates[0]


def highest_index_chooser(trace: ProposalTrace, candidates: Sequence[int]) -> int:
    return candidates[-1]


def random_chooser(seed: int) -> Chooser:
    rng = random.Random(seed)

    def choose(trace: ProposalTrace, candidates: Sequence[int]) -> int:
        return rng.choice(list(candidates))

    return choose


CHOOSERS: dict[str, Chooser] = {
    "last-proposal": last_proposal_chooser,
    "lowest-index": lowest_index_chooser,
    "highest-index": highest_index_chooser,
}


@dataclass(frozen=True)
class Round:
    boy: int
    girl: int
    trace: ProposalTrace
    candidates: tuple[int, ...]


def farsighted_rounds(instance: Instance, chooser: Chooser = last_proposal_chooser) -> list[Round]:
    n = instance.n
    boy_prefs = instance.boy_prefs
    alive = [True] * n
    girl_alive = alive.__getitem__
    active = list(range(n))
    rows: list[Optional[Sequence[int]]] = list(boy_prefs)
    rounds = []
    for k in range(n):
        if k:
            # restrict the surviving rows to the girls still in play
            for b in active:
                row = rows[b]
                rows[b] = list(compress(row, map(girl_alive, row)))
        holder, trace = deferred_acceptance(active, rows, instance.girl_rank_of_boy, n)
        counts = trace.proposer_counts(n)
        candidates = tuple(g for g in range(n) if counts[g] == 1)
        g = chooser(trace, candidates)
        if counts[g] != 1:
            raise ChooserPickedInvalidGirl(f"girl {g} received {counts[g]} proposals")
        b = holder[g]
        rounds.append(Round(b, g, trace, candidates))
        active.remove(b)
        rows[b] = None
        alive[g] = False
    return rounds


def solve_farsighted_ref_with_choice(instance: Instance, chooser: Chooser) -> Matching:
    mob: list[Optional[int]] = [UNMATCHED] * instance.n
    for r in farsighted_rounds(instance, chooser):
        mob[r.boy] = r.girl
    return Matching(tuple(mob))


def solve_farsighted_ref(instance: Instance) -> Matching:
    return solve_farsighted_ref_with_choice(instance, last_proposal_chooser)
