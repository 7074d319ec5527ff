"""Filtered tableaux and the combinatorial intersection-number rule.

A filtered tableau for a problem ``((a_1, lam_1), ..., (a_s, lam_s))``
and a target shape inside a staircase region is a chain of shapes

    empty = mu_0 <= mu_1 <= ... <= mu_s = target

with a Littlewood-Richardson filling of content ``lam_i`` on each skew
step ``mu_i / mu_{i-1}``, where step ``i`` must lie inside the rectangle
``a_i x (n - a_i)``.  Since the rectangles share the region's upper-right
corner, that means every cell of step ``i`` sits in the first ``a_i``
rows and strictly right of grid column ``a_i - min(alpha)``.

The number of filtered tableaux whose target is the full region is the
coefficient of the point class in the corresponding product of pulled
back Schubert classes; against the shape of a valley permutation ``w``
(inside the full staircase for ``{1, ..., n-1}``) it is the coefficient
of the Schubert class of ``w``.

Shapes travel through this module as embedded diagrams (see
:mod:`lrflags.partitions`): ordinary partitions recording, per region
row, the grid column of the last cell.  Chains are enumerated in
lexicographic order on those diagrams and fillings in row-major
lexicographic order per step, so output order is deterministic.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from itertools import product as iter_product
from typing import Iterator, Sequence

from .partitions import Shape, Staircase
from .permutations import ValleyPermutation, check_permutation
from .problems import ProblemError, SchubertProblem, validate_problem
from .tableaux import SkewShape, SkewTableau, count_lr_tableaux, enumerate_lr_tableaux, is_lr_tableau

__all__ = [
    "FilteredTableau",
    "enumerate_filtered_tableaux",
    "count_filtered_tableaux",
    "intersection_number",
    "valley_coefficient",
    "count_monk_chains",
    "monk_shape",
]


def _pad(emb: tuple[int, ...], rows: int) -> tuple[int, ...]:
    return emb + (0,) * (rows - len(emb))


def _boxes(emb: int, offset: int) -> int:
    return max(0, emb - offset) if emb else 0


def _step_skew(outer: tuple[int, ...], inner: tuple[int, ...], staircase: Staircase) -> SkewShape:
    """The region cells of ``outer`` not in ``inner``, as an ordinary skew shape.

    Rows the inner shape leaves empty still start after their offset, so
    the inner boundary of the skew is ``max(inner, offset)`` per row; for
    legal steps this clipped boundary is itself a partition.
    """
    padded = _pad(inner, len(outer))
    off = staircase.offsets
    clipped = tuple(
        min(outer[i], max(padded[i], off[i])) for i in range(len(outer))
    )
    return SkewShape(outer, clipped)


def _step_shapes(
    inner: tuple[int, ...],
    a: int,
    size: int,
    staircase: Staircase,
    target: tuple[int, ...],
) -> list[tuple[int, ...]]:
    """Embedded shapes reachable from ``inner`` by one step at cut ``a``.

    The step adds ``size`` cells, all within rows ``1..a`` and strictly
    right of grid column ``a - min(alpha)``, staying inside ``target``.
    Results are in ascending lexicographic order.
    """
    m = len(target)
    off = staircase.offsets
    left_wall = a - staircase.alpha[0]
    nu = _pad(inner, m)
    tau = target

    # maximum cells addable in rows i.. , ignoring the weak-decrease coupling
    slack = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        gain = 0
        if i < a and max(nu[i], off[i]) >= left_wall:
            gain = _boxes(tau[i], off[i]) - _boxes(nu[i], off[i])
        slack[i] = slack[i + 1] + gain

    out: list[tuple[int, ...]] = []
    current = [0] * m

    def choose(i: int, prev: int, todo: int) -> None:
        if todo > slack[i]:
            return
        if i == m:
            if todo == 0:
                emb = tuple(current)
                while emb and emb[-1] == 0:
                    emb = emb[:-1]
                out.append(emb)
            return
        lo = nu[i]
        hi = min(tau[i], prev)
        blocked = i >= a or max(nu[i], off[i]) < left_wall
        for e in range(lo, hi + 1):
            if e > lo:
                if blocked:
                    break
                if e <= off[i]:
                    continue
            added = _boxes(e, off[i]) - _boxes(nu[i], off[i])
            if added > todo:
                break
            current[i] = e
            # passing e as the next cap also forbids cells below an empty row
            choose(i + 1, e, todo - added)

    choose(0, staircase.width, size)
    return out


def _steps_can_host_rest(
    outer: tuple[int, ...],
    target: tuple[int, ...],
    staircase: Staircase,
    rest: Sequence[int],
) -> bool:
    """Whether every target cell missing from ``outer`` fits some later step.

    A cell in row ``i``, grid column ``c`` is available to a step at cut
    ``a`` iff ``i <= a`` and ``a <= c + min(alpha) - 1``; per row only the
    leftmost missing cell matters because its window is tightest.
    """
    if not rest:
        return sum(_boxes(e, staircase.offsets[i]) for i, e in enumerate(outer)) == sum(
            _boxes(e, staircase.offsets[i]) for i, e in enumerate(target)
        )
    alpha0 = staircase.alpha[0]
    cuts = sorted(rest)
    padded = _pad(outer, len(target))
    for i, tau_i in enumerate(target):
        if padded[i] >= tau_i:
            continue
        c = max(padded[i], staircase.offsets[i]) + 1
        lo = bisect_left(cuts, i + 1)
        if lo == len(cuts) or cuts[lo] > c + alpha0 - 1:
            return False
    return True


@dataclass(frozen=True)
class FilteredTableau:
    """A chain of shapes with Littlewood-Richardson fillings per step."""

    staircase: Staircase
    terms: tuple[tuple[int, tuple[int, ...]], ...]
    chain: tuple[tuple[int, ...], ...]
    fillings: tuple[SkewTableau, ...]

    @property
    def shapes(self) -> tuple[tuple[int, ...], ...]:
        """Row-length view of the chain, one partition per level."""
        return tuple(self.staircase.extract(emb) for emb in self.chain)

    def validate(self) -> None:
        """Re-check every defining condition; raises ``ValueError`` if broken."""
        if len(self.chain) != len(self.terms) + 1 or len(self.fillings) != len(self.terms):
            raise ValueError("chain/filling lengths inconsistent with terms")
        if self.chain[0] != ():
            raise ValueError("chain must start at the empty shape")
        alpha0 = self.staircase.alpha[0]
        off = self.staircase.offsets
        for level, emb in enumerate(self.chain):
            if not self.staircase.is_valid_embedded(emb):
                raise ValueError(f"level {level} is not a shape in the region")
        for i, (a, lam) in enumerate(self.terms):
            inner, outer = self.chain[i], self.chain[i + 1]
            pad_in = _pad(inner, len(outer))
            for r0, (e_in, e_out) in enumerate(zip(pad_in, outer)):
                if e_in > e_out:
                    raise ValueError(f"chain not increasing at step {i + 1}")
                if e_in < e_out:
                    if r0 + 1 > a:
                        raise ValueError(f"step {i + 1} leaves the first {a} rows")
                    if max(e_in, off[r0]) < a - alpha0:
                        raise ValueError(f"step {i + 1} crosses the rectangle's left edge")
            filling = self.fillings[i]
            if filling.shape != _step_skew(outer, inner, self.staircase):
                raise ValueError(f"filling {i + 1} is not on the step's skew shape")
            if not is_lr_tableau(filling, lam):
                raise ValueError(f"filling {i + 1} is not an LR tableau of content {lam}")


def _structural_chains(
    terms: Sequence[tuple[int, tuple[int, ...]]],
    staircase: Staircase,
    target: tuple[int, ...],
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All chains satisfying the size and rectangle conditions, lex order."""
    rest_cuts = [a for a, _ in terms]

    def walk(level: int, prefix: tuple[tuple[int, ...], ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if level == len(terms):
            if prefix[-1] == target:
                yield prefix
            return
        a, lam = terms[level]
        for outer in _step_shapes(prefix[-1], a, sum(lam), staircase, target):
            if _steps_can_host_rest(outer, target, staircase, rest_cuts[level + 1 :]):
                yield from walk(level + 1, prefix + (outer,))

    yield from walk(0, ((),))


def enumerate_filtered_tableaux(
    problem: SchubertProblem, target: Shape | None = None
) -> list[FilteredTableau]:
    """All filtered tableaux for ``problem`` with the given target shape.

    ``target`` defaults to the full staircase region of the problem's cut
    set.  If the target size differs from the total content size the list
    is empty.  Output order: lexicographic on the chain of embedded
    diagrams, then lexicographic per-step fillings.
    """
    if target is None:
        target = Shape.full(problem.staircase)
    staircase = target.staircase
    if target.size != problem.total_size:
        return []
    results: list[FilteredTableau] = []
    for chain in _structural_chains(problem.terms, staircase, target.embedded):
        per_step = []
        for i, (a, lam) in enumerate(problem.terms):
            skew = _step_skew(chain[i + 1], chain[i], staircase)
            fillings = enumerate_lr_tableaux(skew, lam)
            if not fillings:
                per_step = []
                break
            per_step.append(fillings)
        if not per_step and problem.terms:
            continue
        for combo in iter_product(*per_step):
            results.append(
                FilteredTableau(staircase, problem.terms, chain, tuple(combo))
            )
    return results


def count_filtered_tableaux(problem: SchubertProblem, target: Shape | None = None) -> int:
    """Number of filtered tableaux, by dynamic programming over shapes.

    Agrees with ``len(enumerate_filtered_tableaux(...))`` but never
    materializes the chains; per-step multiplicities are cached
    Littlewood-Richardson coefficients.
    """
    if target is None:
        target = Shape.full(problem.staircase)
    staircase = target.staircase
    if target.size != problem.total_size:
        return 0
    rest_cuts = [a for a, _ in problem.terms]
    level: dict[tuple[int, ...], int] = {(): 1}
    for i, (a, lam) in enumerate(problem.terms):
        nxt: dict[tuple[int, ...], int] = {}
        for inner, ways in level.items():
            for outer in _step_shapes(inner, a, sum(lam), staircase, target.embedded):
                if not _steps_can_host_rest(outer, target.embedded, staircase, rest_cuts[i + 1 :]):
                    continue
                skew = _step_skew(outer, inner, staircase)
                mult = count_lr_tableaux(skew.outer, skew.inner, lam)
                if mult:
                    nxt[outer] = nxt.get(outer, 0) + ways * mult
        level = nxt
        if not level:
            return 0
    return level.get(target.embedded, 0)


def intersection_number(
    problem: SchubertProblem, alpha: Sequence[int] | None = None
) -> int:
    """Coefficient of the point class in the problem's Schubert product.

    With an explicit ``alpha`` strictly containing the problem's cut set
    the coefficient vanishes; ``alpha`` missing some cut is an error.
    """
    term_cuts = set(problem.alpha)
    if alpha is not None:
        chosen = set(int(a) for a in alpha)
        if not chosen or min(chosen) < 1 or max(chosen) > problem.n - 1:
            raise ProblemError(f"alpha {sorted(chosen)} not contained in 1..{problem.n - 1}")
        if not chosen >= term_cuts:
            raise ProblemError(
                f"alpha {sorted(chosen)} does not contain every cut {sorted(term_cuts)}"
            )
        if chosen != term_cuts:
            return 0
    validate_problem(problem)
    return count_filtered_tableaux(problem)


def valley_coefficient(valley: ValleyPermutation, problem: SchubertProblem) -> int:
    """Coefficient of the valley permutation's Schubert class in the product.

    Counts filtered tableaux with target ``mu(valley)`` inside the full
    staircase; a total-size/length mismatch gives 0.
    """
    if valley.n != problem.n:
        raise ProblemError(
            f"valley permutation lives in S_{valley.n}, problem in S_{problem.n}"
        )
    if problem.total_size != sum(valley.mu):
        return 0
    full = Staircase(tuple(range(1, problem.n)), problem.n)
    target = Shape(valley.mu, full)
    return count_filtered_tableaux(problem, target)


def count_monk_chains(problem: SchubertProblem) -> int:
    """Chains of shapes adding one cell per step, step ``i`` inside its rectangle.

    Only defined for problems whose every content is a single box; equals
    the intersection number.  Implemented as its own one-cell dynamic
    program, independent of the Littlewood-Richardson machinery.
    """
    if not problem.is_all_boxes():
        raise ProblemError("count_monk_chains requires every content to be a single box")
    validate_problem(problem)
    staircase = problem.staircase
    target = _pad(staircase.embed(staircase.rows), staircase.num_rows)
    off = staircase.offsets
    alpha0 = staircase.alpha[0]
    level: dict[tuple[int, ...], int] = {(0,) * staircase.num_rows: 1}
    for a, _ in problem.terms:
        nxt: dict[tuple[int, ...], int] = {}
        for emb, ways in level.items():
            for i in range(min(a, staircase.num_rows)):
                new = emb[i] + 1 if emb[i] else off[i] + 1
                if new > target[i]:
                    continue
                if i > 0 and new > emb[i - 1]:
                    continue
                if new <= a - alpha0:
                    continue
                grown = emb[:i] + (new,) + emb[i + 1 :]
                nxt[grown] = nxt.get(grown, 0) + ways
        level = nxt
        if not level:
            return 0
    return level.get(target, 0)


def monk_shape(w: Sequence[int], alpha: Sequence[int], n: int) -> Shape | None:
    """The shape matched to ``w`` in a chain of single-box multiplications.

    Column ``j`` of the shape (grid column ``j - min(alpha) + 1``) must
    hold ``#{k <= j : w(k) > w(j+1)}`` cells for every
    ``j in {min(alpha), ..., n-1}``; returns ``None`` when no shape in
    the region does.
    """
    w = check_permutation(w)
    if len(w) != n:
        raise ValueError(f"{w} is not a permutation of 1..{n}")
    staircase = Staircase(tuple(alpha), n)
    alpha0 = staircase.alpha[0]
    counts = []
    for j in range(alpha0, n):
        counts.append(sum(1 for k in range(j) if w[k] > w[j]))
    # cells of column c occupy the topmost rows among those whose span
    # includes c; upward closure forces exactly rows 1..count
    emb = [0] * staircase.num_rows
    for c0, cnt in enumerate(counts):
        for i in range(cnt):
            if i >= staircase.num_rows or staircase.offsets[i] > c0:
                return None
            emb[i] = max(emb[i], c0 + 1)
    trimmed = tuple(emb)
    while trimmed and trimmed[-1] == 0:
        trimmed = trimmed[:-1]
    if not staircase.is_valid_embedded(trimmed):
        return None
    if staircase.column_counts(trimmed) != tuple(counts):
        return None
    return Shape(staircase.extract(trimmed), staircase)
