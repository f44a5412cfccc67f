"""Instances, matchings and the plain-text instance format.

All indices are 0-based. Boy and girl preference rows are stored best-first;
``girl_rank_of_boy`` is the inverse table giving O(1) comparisons for girls.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

UNMATCHED = None


class InstanceError(ValueError):
    """Raised for malformed instance text or preference rows."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class DuplicateEntry(InstanceError):
    pass


class OutOfRange(InstanceError):
    pass


class ShapeMismatch(InstanceError):
    pass


class IncompleteWithoutFlag(InstanceError):
    pass


class PartialMatching(ValueError):
    pass


def _check_row(row: Sequence[int], n: int, line: Optional[int] = None) -> None:
    seen = set()
    for k, x in enumerate(row):
        if not 0 <= x < n:
            raise OutOfRange(f"index {x} not in 0..{n - 1}", line, k + 1)
        if x in seen:
            raise DuplicateEntry(f"index {x} repeated", line, k + 1)
        seen.add(x)


def complete_partial_lists(rows: Iterable[Sequence[int]], n: int) -> list[list[int]]:
    """Extend each row with its missing indices in ascending order."""
    out = []
    for row in rows:
        row = list(row)
        _check_row(row, n)
        listed = set(row)
        out.append(row + [x for x in range(n) if x not in listed])
    return out


def _inverse(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    # rows are permutations, so argsort inverts them
    inv = np.argsort(np.asarray(rows, dtype=np.int64), axis=1, kind="stable")
    return tuple(map(tuple, inv.tolist()))


@dataclass(frozen=True)
class Instance:
    """A complete strict preference profile for n boys and n girls."""

    n: int
    boy_prefs: tuple[tuple[int, ...], ...]
    girl_prefs: tuple[tuple[int, ...], ...]
    girl_rank_of_boy: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    boy_rank_of_girl: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise ShapeMismatch(f"n must be positive, got {n}")
        boy_prefs = tuple(tuple(r) for r in self.boy_prefs)
        girl_prefs = tuple(tuple(r) for r in self.girl_prefs)
        if len(boy_prefs) != n or len(girl_prefs) != n:
            raise ShapeMismatch(f"expected {n} rows per side, got {len(boy_prefs)} and {len(girl_prefs)}")
        full = set(range(n))
        for row in boy_prefs + girl_prefs:
            if len(row) != n:
                raise ShapeMismatch(f"row of length {len(row)} where {n} expected")
            if set(row) != full:
                _check_row(row, n)
        object.__setattr__(self, "boy_prefs", boy_prefs)
        object.__setattr__(self, "girl_prefs", girl_prefs)
        object.__setattr__(self, "girl_rank_of_boy", _inverse(girl_prefs))
        object.__setattr__(self, "boy_rank_of_girl", _inverse(boy_prefs))

    @classmethod
    def from_partial(cls, boy_rows, girl_rows, n: Optional[int] = None) -> "Instance":
        if n is None:
            n = len(boy_rows)
        return cls(n, complete_partial_lists(boy_rows, n), complete_partial_lists(girl_rows, n))


def rank_in_boy_list(instance: Instance, b: int, g: int) -> int:
    return instance.boy_rank_of_girl[b][g]


def rank_in_girl_list(instance: Instance, g: int, b: int) -> int:
    return instance.girl_rank_of_boy[g][b]


@dataclass(frozen=True)
class Matching:
    """Boy to girl assignment; entries are girl indices or UNMATCHED."""

    match_of_boy: tuple[Optional[int], ...]

    def __post_init__(self):
        mob = tuple(self.match_of_boy)
        object.__setattr__(self, "match_of_boy", mob)
        girls = [g for g in mob if g is not UNMATCHED]
        if len(set(girls)) != len(girls):
            raise ValueError(f"girl matched twice in {mob}")

    @property
    def n(self) -> int:
        return len(self.match_of_boy)

    def is_perfect(self) -> bool:
        return all(g is not UNMATCHED for g in self.match_of_boy)

    def match_of_girl(self) -> list[Optional[int]]:
        out: list[Optional[int]] = [UNMATCHED] * self.n
        for b, g in enumerate(self.match_of_boy):
            if g is not UNMATCHED:
                out[g] = b
        return out

    def pairs(self) -> list[tuple[int, int]]:
        return [(b, g) for b, g in enumerate(self.match_of_boy) if g is not UNMATCHED]

    def __getitem__(self, b: int) -> Optional[int]:
        return self.match_of_boy[b]

    def to_json(self) -> dict:
        return {"n": self.n, "match_of_boy": list(self.match_of_boy)}

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Matching":
        mob: list[Optional[int]] = [UNMATCHED] * n
        for b, g in pairs:
            mob[b] = g
        return cls(tuple(mob))


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_row(line: str, lineno: int) -> list[int]:
    if line == "-":
        return []
    row = []
    col = 1
    for tok in line.split():
        try:
            row.append(int(tok))
        except ValueError:
            raise InstanceError(f"not an integer: {tok!r}", lineno, col) from None
        col += 1
    return row


def parse_instance(text: str, allow_partial: bool = False) -> Instance:
    """Parse the text instance format.

    Comment lines start with '#', blank lines are skipped. The first content
    line is n, followed by n boy rows and n girl rows (best first). A row
    consisting of a single '-' is an empty partial row.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise ShapeMismatch("empty input")
    lineno, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise InstanceError(f"expected integer n, got {first!r}", lineno, 1) from None
    if n < 1:
        raise ShapeMismatch(f"n must be positive, got {n}", lineno, 1)
    body = lines[1:]
    if len(body) != 2 * n:
        raise ShapeMismatch(f"expected {2 * n} preference rows, found {len(body)}", lineno)
    rows = []
    for lineno, line in body:
        row = _parse_row(line, lineno)
        _check_row(row, n, lineno)
        if len(row) != n and not allow_partial:
            raise IncompleteWithoutFlag(f"row lists {len(row)} of {n} entries", lineno)
        rows.append(row)
    return Instance.from_partial(rows[:n], rows[n:], n)


def format_instance(instance: Instance, comment: Optional[str] = None) -> str:
    out = []
    if comment:
        out.extend("# " + c for c in comment.splitlines())
    out.append(str(instance.n))
    for row in instance.boy_prefs + instance.girl_prefs:
        out.append(" ".join(map(str, row)))
    return "\n".join(out) + "\n"


def read_instance(path, allow_partial: bool = False) -> Instance:
    with open(path, encoding="utf-8") as f:
        return parse_instance(f.read(), allow_partial=allow_partial)
