"""Quadratic-time farsighted matching (linear in the input size).

One deferred-acceptance run seeds the proposal state. Each round then fixes a
girl with a single remaining proposal to her proposer, withdraws all of his
proposals, and repairs the state by walking the "second proposer" graph and
materializing every trading cycle it closes. Cycles found this way cannot be
vetoed, and once no cycle is left the state is exactly the deferred-acceptance
outcome for the players still in play.

Girl ranks are best-first (0 = best), so advancing ``second_of_girl`` moves
toward worse proposers.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .core import UNMATCHED, Instance, Matching
from .gale_shapley import solve_gs

EMPTY = -1

UNVISITED, ON_STACK, DONE = 0, 1, 2


class AuditError(AssertionError):
    pass


class BoyNotInPlay(ValueError):
    pass


class NoHopelessGirl(RuntimeError):
    pass


class Walk(enum.Enum):
    DEAD_END = "dead_end"
    CYCLE = "cycle"


@dataclass(frozen=True)
class CycleReport:
    """A trading cycle; ``boys[i]`` holds ``girls[i]`` and takes ``girls[i + 1]`` (wrapping)."""

    boys: tuple[int, ...]
    girls: tuple[int, ...]

    def assignment(self) -> dict[int, int]:
        k = len(self.boys)
        return {self.boys[i]: self.girls[(i + 1) % k] for i in range(k)}

    def render(self) -> str:
        parts = [f"g{g}|b{b}" for b, g in zip(self.boys, self.girls)]
        return "→".join(parts) + f"→g{self.girls[0]}"

    def canonical(self) -> tuple[tuple[int, int], ...]:
        """Rotation-normalized (boy, girl) pairs, starting from the lowest boy index."""
        k = self.boys.index(min(self.boys))
        pairs = list(zip(self.boys, self.girls))
        return tuple(pairs[k:] + pairs[:k])


@dataclass
class WorkCounters:
    initial_proposals: int = 0
    removals: int = 0
    second_scans: list[int] = field(default_factory=list)
    cycles: int = 0
    walk_steps: int = 0


@dataclass(eq=False)
class SolverState:
    instance: Instance
    exists: list[bytearray]
    proposing_rank: list[bytearray]
    index_of_boy: list[int]
    top_of_girl: list[int]
    second_of_girl: list[int]
    num_proposals: list[int]
    seen: list[int]
    in_play: list[bool]
    result: list[Optional[int]]
    counters: WorkCounters
    cycles: list[CycleReport] = field(default_factory=list)
    audit: bool = False
    record_cycles: bool = True

    def girl_of(self, b: int) -> int:
        return self.instance.boy_prefs[b][self.index_of_boy[b]]

    def successor(self, b: int) -> int:
        g = self.girl_of(b)
        s = self.second_of_girl[g]
        return EMPTY if s == EMPTY else self.instance.girl_prefs[g][s]

    def matching(self) -> Matching:
        return Matching(tuple(self.result))

    def held_matching(self) -> dict[int, int]:
        """Current girl at index for every boy still in play."""
        return {b: self.girl_of(b) for b in range(self.instance.n) if self.in_play[b]}

    def check(self) -> None:
        """Recompute top/second/num and boy indices from ``exists`` and compare."""
        inst = self.instance
        n = inst.n
        for g in range(n):
            ranks = [k for k, b in enumerate(inst.girl_prefs[g]) if self.exists[b][g]]
            if [k for k in range(n) if self.proposing_rank[g][k]] != ranks:
                raise AuditError(f"girl {g}: rank view disagrees with exists")
            if self.num_proposals[g] != len(ranks):
                raise AuditError(f"girl {g}: num {self.num_proposals[g]} != {len(ranks)}")
            top = ranks[0] if ranks else EMPTY
            second = ranks[1] if len(ranks) > 1 else EMPTY
            if self.top_of_girl[g] != top or self.second_of_girl[g] != second:
                raise AuditError(
                    f"girl {g}: top/second ({self.top_of_girl[g]}, {self.second_of_girl[g]})"
                    f" != ({top}, {second})"
                )
        for b in range(n):
            positions = [i for i, g in enumerate(inst.boy_prefs[b]) if self.exists[b][g]]
            worst = positions[-1] if positions else EMPTY
            if self.in_play[b] and self.index_of_boy[b] != worst:
                raise AuditError(f"boy {b}: index {self.index_of_boy[b]} != worst in-play {worst}")
            if not self.in_play[b] and positions:
                raise AuditError(f"fixed boy {b} still has proposals {positions}")


def seed_state(instance: Instance, audit: bool = False) -> SolverState:
    n = instance.n
    rank = instance.girl_rank_of_boy
    _, trace = solve_gs(instance)
    exists = [bytearray(n) for _ in range(n)]
    index = [EMPTY] * n
    top = [EMPTY] * n
    second = [EMPTY] * n
    num = [0] * n
    proposing = [bytearray(n) for _ in range(n)]
    for b, g, _outcome, _displaced in trace.raw:
        exists[b][g] = 1
        index[b] += 1
        num[g] += 1
        r = rank[g][b]
        proposing[g][r] = 1
        t = top[g]
        if t == EMPTY or r < t:
            second[g] = t
            top[g] = r
        elif second[g] == EMPTY or r < second[g]:
            second[g] = r
    state = SolverState(
        instance=instance,
        exists=exists,
        proposing_rank=proposing,
        index_of_boy=index,
        top_of_girl=top,
        second_of_girl=second,
        num_proposals=num,
        seen=[UNVISITED] * n,
        in_play=[True] * n,
        result=[UNMATCHED] * n,
        counters=WorkCounters(initial_proposals=len(trace), second_scans=[0] * n),
        audit=audit,
    )
    if audit:
        state.check()
    return state


def _next_in_play(state: SolverState, g: int, k: int) -> int:
    # first rank worse than k still proposing to g; every skipped rank counts as one scan step
    nxt = state.proposing_rank[g].find(1, k + 1)
    state.counters.second_scans[g] += (nxt if nxt != EMPTY else state.instance.n) - k
    return nxt


def _remove(state: SolverState, b: int, g: int) -> None:
    r = state.instance.girl_rank_of_boy[g][b]
    state.exists[b][g] = 0
    state.proposing_rank[g][r] = 0
    state.num_proposals[g] -= 1
    state.counters.removals += 1
    if state.top_of_girl[g] == r:
        s = state.second_of_girl[g]
        state.top_of_girl[g] = s
        if s != EMPTY:
            state.second_of_girl[g] = _next_in_play(state, g, s)
    elif state.second_of_girl[g] == r:
        state.second_of_girl[g] = _next_in_play(state, g, r)
    if state.audit:
        state.check()


def eliminate_proposals_by_boy(state: SolverState, b: int, stop_girl: Optional[int] = None) -> None:
    """Withdraw every proposal of ``b`` he likes less than ``stop_girl`` (all of them if None)."""
    if not state.in_play[b]:
        raise BoyNotInPlay(f"boy {b} is not in play")
    if stop_girl is not None and not state.exists[b][stop_girl]:
        raise ValueError(f"boy {b} has no proposal to girl {stop_girl} in play")
    prefs = state.instance.boy_prefs[b]
    row = state.exists[b]
    i = state.index_of_boy[b]
    while i >= 0:
        g = prefs[i]
        if g == stop_girl:
            break
        i -= 1
        if row[g]:
            state.index_of_boy[b] = i
            _remove(state, b, g)
    state.index_of_boy[b] = i


def _audit_walk_edge(state: SolverState, b: int) -> None:
    g = state.girl_of(b)
    if state.instance.girl_prefs[g][state.top_of_girl[g]] != b:
        raise AuditError(f"boy {b} is not the best proposer at his girl {g}")


def _audit_cycle(state: SolverState, report: CycleReport) -> None:
    inst = state.instance
    k = len(report.boys)
    for i, b in enumerate(report.boys):
        own, wanted = report.girls[i], report.girls[(i + 1) % k]
        if inst.boy_rank_of_girl[b][wanted] >= inst.boy_rank_of_girl[b][own]:
            raise AuditError(f"cycle boy {b} does not prefer girl {wanted} to {own}")
        s = state.second_of_girl[wanted]
        if s == EMPTY or inst.girl_prefs[wanted][s] != b:
            raise AuditError(f"cycle boy {b} is not second at girl {wanted}")


def _audit_veto(state: SolverState, report: CycleReport) -> None:
    inst = state.instance
    members = set(report.boys)
    new = report.assignment()
    for x in range(inst.n):
        if not state.in_play[x] or x in members:
            continue
        own_rank = inst.boy_rank_of_girl[x][state.girl_of(x)]
        for b, g in new.items():
            if inst.boy_rank_of_girl[x][g] < own_rank and inst.girl_rank_of_boy[g][x] < inst.girl_rank_of_boy[g][b]:
                raise AuditError(f"boy {x} can veto cycle {report.render()} at girl {g}")


def _materialize(state: SolverState, cycle: list[int]) -> None:
    # walk order: cycle[i + 1] is second at cycle[i]'s girl and takes her
    girls = [state.girl_of(b) for b in cycle]
    k = len(cycle)
    report = CycleReport(tuple(reversed(cycle)), tuple(reversed(girls)))
    if state.audit:
        _audit_cycle(state, report)
    for i in range(k - 1, 0, -1):
        eliminate_proposals_by_boy(state, cycle[i], girls[i - 1])
    eliminate_proposals_by_boy(state, cycle[0], girls[k - 1])
    for b in cycle:
        state.seen[b] = UNVISITED
    state.counters.cycles += 1
    if state.record_cycles:
        state.cycles.append(report)
    if state.audit:
        _audit_veto(state, report)


def find_and_eliminate_trading_cycles(state: SolverState, start_boy: int) -> Walk:
    """Depth-first walk along boy -> second proposer at his girl, starting at ``start_boy``.

    Every closed cycle is materialized and the walk resumes from the node that
    led into it. Returns DEAD_END once the whole path is marked DONE, or CYCLE
    when a cycle closed through ``start_boy`` itself (he is UNVISITED again and
    the caller re-walks him).
    """
    if not state.in_play[start_boy]:
        raise BoyNotInPlay(f"boy {start_boy} is not in play")
    seen = state.seen
    boy_prefs = state.instance.boy_prefs
    girl_prefs = state.instance.girl_prefs
    index = state.index_of_boy
    second = state.second_of_girl
    counters = state.counters
    audit = state.audit

    stack = [start_boy]
    depth = {start_boy: 0}
    seen[start_boy] = ON_STACK
    while stack:
        b = stack[-1]
        counters.walk_steps += 1
        if audit:
            _audit_walk_edge(state, b)
        g = boy_prefs[b][index[b]]
        s = second[g]
        nxt = EMPTY if s == EMPTY else girl_prefs[g][s]
        if nxt == EMPTY or seen[nxt] == DONE:
            for x in stack:
                seen[x] = DONE
            return Walk.DEAD_END
        if seen[nxt] == ON_STACK:
            k = depth[nxt]
            cycle = stack[k:]
            del stack[k:]
            for x in cycle:
                del depth[x]
            _materialize(state, cycle)
            continue
        seen[nxt] = ON_STACK
        depth[nxt] = len(stack)
        stack.append(nxt)
    return Walk.CYCLE


def fix_hopeless(state: SolverState) -> tuple[int, int]:
    """Fix the lowest-index girl with one proposal to her proposer; returns (boy, girl)."""
    try:
        g = state.num_proposals.index(1)
    except ValueError:
        raise NoHopelessGirl("no girl has exactly one proposal in play") from None
    b = state.instance.girl_prefs[g][state.top_of_girl[g]]
    state.result[b] = g
    eliminate_proposals_by_boy(state, b, None)
    state.in_play[b] = False
    return b, g


def repair(state: SolverState) -> None:
    """Materialize trading cycles until every boy in play is DONE."""
    n = state.instance.n
    in_play = state.in_play
    seen = state.seen
    players = [b for b in range(n) if in_play[b]]
    for b in players:
        seen[b] = UNVISITED
    boy_prefs = state.instance.boy_prefs
    girl_prefs = state.instance.girl_prefs
    index = state.index_of_boy
    second = state.second_of_girl
    fast = not state.audit
    for b in players:
        if seen[b] != UNVISITED:
            continue
        if fast:
            # one-step walks that dead-end at once, without the call
            g = boy_prefs[b][index[b]]
            s = second[g]
            if s == EMPTY or seen[girl_prefs[g][s]] == DONE:
                seen[b] = DONE
                continue
        while seen[b] == UNVISITED:
            find_and_eliminate_trading_cycles(state, b)


def run_linear(instance: Instance, audit: bool = False) -> SolverState:
    state = seed_state(instance, audit=audit)
    for _ in range(instance.n):
        fix_hopeless(state)
        repair(state)
    return state


def solve_farsighted_linear(instance: Instance, audit: bool = False) -> Matching:
    return run_linear(instance, audit=audit).matching()
