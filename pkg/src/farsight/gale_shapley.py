"""Man-proposing deferred acceptance with a full proposal trace."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence

from .core import UNMATCHED, Instance, Matching, PartialMatching


class Outcome(enum.Enum):
    ACCEPTED_NEW = "accepted_new"
    ACCEPTED_DISPLACING = "accepted_displacing"
    REJECTED = "rejected"


class ProposalEvent(NamedTuple):
    boy: int
    girl: int
    outcome: Outcome
    displaced: Optional[int] = None

    @property
    def accepted(self) -> bool:
        return self.outcome is not Outcome.REJECTED


class EmptyTrace(ValueError):
    pass


@dataclass
class ProposalTrace:
    """Ordered proposals; ``raw`` holds plain ``(boy, girl, outcome, displaced)`` tuples."""

    raw: list[tuple] = field(default_factory=list)

    @cached_property
    def events(self) -> list[ProposalEvent]:
        return [ProposalEvent._make(e) for e in self.raw]

    def __len__(self) -> int:
        return len(self.raw)

    def __iter__(self):
        return iter(self.events)

    def proposal_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((e[0], e[1]) for e in self.raw)

    def proposer_counts(self, n: int) -> list[int]:
        """Number of proposers per girl (a boy proposes to a girl at most once)."""
        counts = [0] * n
        for e in self.raw:
            counts[e[1]] += 1
        return counts

    def render(self) -> str:
        """Play notation: one ``b→g(winner)`` element per proposal, joined by '|'."""
        held: dict[int, int] = {}
        parts = []
        for e in self.events:
            if e.accepted:
                held[e.girl] = e.boy
            parts.append(f"b{e.boy}→g{e.girl}(b{held[e.girl]})")
        return "|".join(parts)


def deferred_acceptance(
    boys: Iterable[int],
    rows: Sequence[Optional[Sequence[int]]],
    girl_rank: Sequence[Sequence[int]],
    n: int,
) -> tuple[list[Optional[int]], ProposalTrace]:
    """Run boy-proposing deferred acceptance over ``boys``.

    ``rows[b]`` is boy b's list restricted to the girls in play; girls are
    compared through ``girl_rank``. Boys enter in the given order and a
    displaced boy continues at once, so the lowest-index free boy always
    proposes next when ``boys`` is ascending. Returns the holder of each girl
    (indexed by girl, UNMATCHED for girls nobody reached) and the trace.
    """
    nxt = [0] * n
    holder: list[Optional[int]] = [UNMATCHED] * n
    events: list[tuple] = []
    append = events.append
    new, displacing, rejected = Outcome.ACCEPTED_NEW, Outcome.ACCEPTED_DISPLACING, Outcome.REJECTED
    for b in boys:
        while True:
            row = rows[b]
            g = row[nxt[b]]
            nxt[b] += 1
            h = holder[g]
            if h is UNMATCHED:
                holder[g] = b
                append((b, g, new, None))
                break
            rank = girl_rank[g]
            if rank[b] < rank[h]:
                holder[g] = b
                append((b, g, displacing, h))
                b = h
            else:
                append((b, g, rejected, None))
    return holder, ProposalTrace(events)


def solve_gs(instance: Instance) -> tuple[Matching, ProposalTrace]:
    n = instance.n
    holder, trace = deferred_acceptance(range(n), instance.boy_prefs, instance.girl_rank_of_boy, n)
    mob: list[Optional[int]] = [UNMATCHED] * n
    for g, b in enumerate(holder):
        mob[b] = g
    return Matching(tuple(mob)), trace


def last_proposal(trace: ProposalTrace) -> tuple[int, int]:
    if not trace.raw:
        raise EmptyTrace("trace has no proposals")
    b, g, _, _ = trace.raw[-1]
    return b, g


def blocking_pairs(instance: Instance, matching: Matching) -> list[tuple[int, int]]:
    if not matching.is_perfect():
        raise PartialMatching("stability is defined for perfect matchings only")
    partner = matching.match_of_girl()
    out = []
    for b, own in enumerate(matching.match_of_boy):
        for g in instance.boy_prefs[b]:
            if g == own:
                break
            if instance.girl_rank_of_boy[g][b] < instance.girl_rank_of_boy[g][partner[g]]:
                out.append((b, g))
    return out


def is_strictly_stable(instance: Instance, matching: Matching) -> bool:
    return not blocking_pairs(instance, matching)


def temperature_history(instance: Instance, trace: ProposalTrace) -> dict[int, list[int]]:
    """Rank (in her own list) of each girl's held partner after every event touching her."""
    held: dict[int, int] = {}
    hist: dict[int, list[int]] = {}
    for e in trace:
        if e.accepted:
            held[e.girl] = e.boy
        hist.setdefault(e.girl, []).append(instance.girl_rank_of_boy[e.girl][held[e.girl]])
    return hist
