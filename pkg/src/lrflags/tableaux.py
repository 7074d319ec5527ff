"""Skew shapes, skew tableaux, and Littlewood-Richardson enumeration.

A filling of a skew shape ``outer/inner`` is a Littlewood-Richardson
tableau of content ``lam`` when

  (i)   entries weakly increase along rows and strictly increase down
        columns,
  (ii)  the entry ``j`` occurs exactly ``lam[j-1]`` times,
  (iii) reading the entries right-to-left along rows, top row first,
        every prefix of the resulting word contains at least as many
        ``i`` as ``i+1``, for every ``i`` (the ballot condition).

The number of such fillings is the Littlewood-Richardson coefficient
``c^{outer/inner}_{lam}``.

Enumeration is by backtracking over the cells in row-major order; the
returned list is sorted lexicographically by the row-major entry
sequence, which is the canonical order used throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .partitions import contains, normalize_partition

__all__ = [
    "SkewShape",
    "SkewTableau",
    "is_ballot",
    "is_lr_tableau",
    "enumerate_lr_tableaux",
    "count_lr_tableaux",
]


@dataclass(frozen=True)
class SkewShape:
    """The cells of ``outer`` not in ``inner``, for nested partitions."""

    outer: tuple[int, ...]
    inner: tuple[int, ...]

    def __post_init__(self) -> None:
        outer = normalize_partition(self.outer)
        inner = normalize_partition(self.inner)
        if not contains(outer, inner):
            raise ValueError(f"inner {inner} is not contained in outer {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def inner_row(self, r: int) -> int:
        """Length of row ``r`` (1-indexed) of the inner partition."""
        return self.inner[r - 1] if r - 1 < len(self.inner) else 0

    def row_span(self, r: int) -> tuple[int, int]:
        """Columns ``(first, last)`` of the skew cells in row ``r``; empty rows
        give ``first > last``."""
        return self.inner_row(r) + 1, self.outer[r - 1]

    def cells(self) -> Iterator[tuple[int, int]]:
        """All cells ``(row, column)`` in row-major order."""
        for r in range(1, len(self.outer) + 1):
            first, last = self.row_span(r)
            for c in range(first, last + 1):
                yield r, c


@dataclass(frozen=True)
class SkewTableau:
    """A skew shape together with one entry per cell.

    ``rows[r-1]`` holds the entries of row ``r`` left to right, one per
    skew cell of that row (possibly empty).
    """

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        outer = self.shape.outer
        if len(rows) != len(outer):
            raise ValueError("one entry row per shape row required")
        for r in range(1, len(outer) + 1):
            first, last = self.shape.row_span(r)
            if len(rows[r - 1]) != last - first + 1:
                raise ValueError(f"row {r} must have {last - first + 1} entries")
        object.__setattr__(self, "rows", rows)

    def entry(self, r: int, c: int) -> int:
        """The entry at cell ``(r, c)``; raises if the cell is not in the shape."""
        first, last = self.shape.row_span(r)
        if not first <= c <= last:
            raise KeyError(f"cell ({r}, {c}) not in skew shape")
        return self.rows[r - 1][c - first]

    def entry_sequence(self) -> tuple[int, ...]:
        """Row-major concatenation of the entries."""
        return tuple(v for row in self.rows for v in row)

    def reading_word(self) -> tuple[int, ...]:
        """Entries right-to-left along each row, top row first."""
        return tuple(v for row in self.rows for v in reversed(row))

    def content(self) -> tuple[int, ...]:
        """Multiplicity of each entry value ``1..max`` (trailing zeros kept off)."""
        seq = self.entry_sequence()
        if not seq:
            return ()
        counts = [0] * max(seq)
        for v in seq:
            counts[v - 1] += 1
        return tuple(counts)


def is_ballot(word: Sequence[int]) -> bool:
    """Whether every prefix of ``word`` has at least as many ``i`` as ``i+1``.

    >>> is_ballot((1, 2, 1))
    True
    >>> is_ballot((1, 2, 2))
    False
    """
    counts: dict[int, int] = {}
    for v in word:
        counts[v] = counts.get(v, 0) + 1
        if v > 1 and counts[v] > counts.get(v - 1, 0):
            return False
    return True


def is_lr_tableau(tableau: SkewTableau, lam: Iterable[int]) -> bool:
    """Whether ``tableau`` is a Littlewood-Richardson filling of content ``lam``.

    Total predicate: malformed content or entries simply give ``False``.
    """
    try:
        lam = normalize_partition(lam)
    except ValueError:
        return False
    shape = tableau.shape
    if any(v < 1 for row in tableau.rows for v in row):
        return False
    # (i) rows weakly increase, columns strictly increase
    for r in range(1, len(shape.outer) + 1):
        row = tableau.rows[r - 1]
        if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
            return False
        if r == 1:
            continue
        first, last = shape.row_span(r)
        up_first, up_last = shape.row_span(r - 1)
        for c in range(max(first, up_first), min(last, up_last) + 1):
            if tableau.entry(r - 1, c) >= tableau.entry(r, c):
                return False
    # (ii) content
    if tableau.content() != lam:
        return False
    # (iii) ballot reading word
    return is_ballot(tableau.reading_word())


def enumerate_lr_tableaux(shape: SkewShape, lam: Iterable[int]) -> list[SkewTableau]:
    """All Littlewood-Richardson fillings of ``shape`` with content ``lam``.

    The list is in row-major lexicographic order on entry sequences and
    its length is the coefficient ``c^{shape}_{lam}``.  A size mismatch
    yields the empty list; the empty shape with empty content yields the
    single empty filling.
    """
    lam = normalize_partition(lam)
    if shape.size != sum(lam):
        return []
    cells = list(shape.cells())
    if not cells:
        return [SkewTableau(shape, tuple(() for _ in shape.outer))]

    max_entry = len(lam)
    remaining = list(lam)
    grid: dict[tuple[int, int], int] = {}
    results: list[SkewTableau] = []

    def ballot_after_row(counts: list[int], r: int) -> bool:
        # extend the prefix word by row r read right-to-left
        first, last = shape.row_span(r)
        for c in range(last, first - 1, -1):
            v = grid[(r, c)]
            counts[v - 1] += 1
            if v > 1 and counts[v - 1] > counts[v - 2]:
                return False
        return True

    def fill(k: int) -> None:
        if k == len(cells):
            rows = tuple(
                tuple(grid[(r, c)] for c in range(shape.row_span(r)[0], shape.row_span(r)[1] + 1))
                for r in range(1, len(shape.outer) + 1)
            )
            candidate = SkewTableau(shape, rows)
            # final acceptance goes through the public predicate
            if is_lr_tableau(candidate, lam):
                results.append(candidate)
            return
        r, c = cells[k]
        lo = 1
        if (r, c - 1) in grid:
            lo = max(lo, grid[(r, c - 1)])
        if (r - 1, c) in grid:
            lo = max(lo, grid[(r - 1, c)] + 1)
        row_done = c == shape.row_span(r)[1]
        for v in range(lo, max_entry + 1):
            if remaining[v - 1] == 0:
                continue
            grid[(r, c)] = v
            remaining[v - 1] -= 1
            ok = True
            if row_done:
                # prune on the ballot condition over completed rows
                counts = [0] * max_entry
                ok = all(ballot_after_row(counts, rr) for rr in range(1, r + 1))
            if ok:
                fill(k + 1)
            remaining[v - 1] += 1
            del grid[(r, c)]

    fill(0)
    return results


_count_cache: dict[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]], int] = {}


def count_lr_tableaux(
    outer: tuple[int, ...], inner: tuple[int, ...], lam: tuple[int, ...]
) -> int:
    """The Littlewood-Richardson coefficient ``c^{outer/inner}_{lam}``, cached."""
    outer = normalize_partition(outer)
    inner = normalize_partition(inner)
    lam = normalize_partition(lam)
    key = (outer, inner, lam)
    if key not in _count_cache:
        _count_cache[key] = len(enumerate_lr_tableaux(SkewShape(outer, inner), lam))
    return _count_cache[key]
