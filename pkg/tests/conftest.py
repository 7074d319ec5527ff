"""Shared fixtures: the worked examples and problem generators."""

import random
from itertools import combinations

import pytest

from lrflags.partitions import partitions_in_box
from lrflags.problems import SchubertProblem, dimension


@pytest.fixture
def six_box_problem():
    """n=4, six single boxes at cuts 1,1,2,2,3,3; intersection number 2."""
    return SchubertProblem(4, tuple((a, (1,)) for a in (1, 1, 2, 2, 3, 3)))


@pytest.fixture
def thirteen_box_problem():
    """n=6, thirteen single boxes at cuts 2^4 3^5 4^4; intersection number 262."""
    return SchubertProblem(6, tuple((a, (1,)) for a in (2,) * 4 + (3,) * 5 + (4,) * 4))


@pytest.fixture
def seven_term_problem():
    """n=7 on cuts {2,3,5}; intersection number 18."""
    return SchubertProblem(
        7,
        ((2, (2,)), (2, (2,)), (3, (2, 2)), (3, (2, 1)),
         (5, (1,)), (5, (1, 1, 1)), (5, (1, 1, 1))),
    )


@pytest.fixture
def five_factor_problem():
    """n=6 on cuts {1,...,5}, all factors of degree three; intersection number 4."""
    return SchubertProblem(
        6,
        ((1, (3,)), (2, (3,)), (3, (2, 1)), (4, (1, 1, 1)), (5, (1, 1, 1))),
    )


def nonempty_partitions_in_box(rows, cols):
    return [p for p in partitions_in_box(rows, cols) if p]


def random_valid_problem(rng: random.Random, n: int) -> SchubertProblem:
    """A random valid problem: alpha random, total size exactly dim(alpha),
    every cut represented at least once."""
    while True:
        cuts = sorted(rng.sample(range(1, n), rng.randint(1, n - 1)))
        target = dimension(cuts, n)
        terms = []
        total = 0
        for a in cuts:
            lam = rng.choice(nonempty_partitions_in_box(a, n - a))
            terms.append((a, lam))
            total += sum(lam)
        attempts = 0
        while total < target and attempts < 50:
            a = rng.choice(cuts)
            fits = [p for p in nonempty_partitions_in_box(a, n - a) if sum(p) <= target - total]
            if fits:
                lam = rng.choice(fits)
                terms.append((a, lam))
                total += sum(lam)
            attempts += 1
        if total == target:
            return SchubertProblem(n, tuple(sorted(terms, key=lambda t: t[0])))


def all_contents(n: int, total: int, max_cut: int) -> list[tuple[tuple[int, tuple[int, ...]], ...]]:
    """Every sorted list of terms with non-empty contents of given total size,
    cuts at most ``max_cut``; duplicates-as-multisets appear once."""
    pools = {a: nonempty_partitions_in_box(a, n - a) for a in range(1, max_cut + 1)}
    out: list[tuple[tuple[int, tuple[int, ...]], ...]] = []
    acc: list[tuple[int, tuple[int, ...]]] = []

    def walk(min_term, remaining):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for a in range(min_term[0], max_cut + 1):
            for lam in pools[a]:
                if sum(lam) > remaining:
                    continue
                if (a, lam) < min_term:
                    continue
                acc.append((a, lam))
                walk((a, lam), remaining - sum(lam))
                acc.pop()

    walk((1, ()), total)
    return out


def all_valid_problems(n: int) -> list[SchubertProblem]:
    """Every problem with non-empty contents over every cut set of [n-1],
    with total content size exactly the dimension."""
    problems = []
    for size in range(1, n):
        for cuts in combinations(range(1, n), size):
            target = dimension(cuts, n)
            pool = {a: nonempty_partitions_in_box(a, n - a) for a in cuts}
            acc: list[tuple[int, tuple[int, ...]]] = []

            def walk(i: int, idx: int, covered: bool, total: int) -> None:
                if i == len(cuts):
                    if total == target:
                        problems.append(SchubertProblem(n, tuple(acc)))
                    return
                if covered:
                    walk(i + 1, 0, False, total)
                choices = pool[cuts[i]]
                for j in range(idx, len(choices)):
                    lam = choices[j]
                    if total + sum(lam) > target:
                        continue
                    acc.append((cuts[i], lam))
                    walk(i, j, True, total + sum(lam))
                    acc.pop()

            walk(0, 0, False, 0)
    return problems
