"""Independent verification path via Schubert polynomials.

Everything here is classical machinery, deliberately disjoint from the
filtered-tableau rule: Schubert polynomials built by divided differences
from the staircase monomial, Monk's formula on permutations, and
coefficient extraction through Poincare duality.  The only shared
ingredient is the definition of the Grassmannian permutation attached to
a term ``(a, lam)``.

Coefficient extraction: the cohomology ring is the polynomial ring
modulo symmetric functions, and the composite of divided differences
along the longest permutation annihilates that ideal while sending the
top Schubert polynomial to 1.  Applying it to a homogeneous polynomial
of top degree therefore reads off the point-class coefficient; the raw
coefficient of the staircase monomial would overcount, because products
of Schubert polynomials contain basis members indexed outside S_n that
also involve the staircase monomial.  Coefficients of lower classes
follow by Poincare duality: the class of ``w`` pairs with the class of
``w0 . w``.

For a problem on cuts ``alpha``, the coefficient of the point class of
the partial flag manifold equals, after inserting the complementary
rectangle for each missing cut, the coefficient of the point class of
the full flag manifold; that refinement is how the oracle reduces every
problem to a staircase-coefficient computation.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .partitions import fits_in_rectangle, normalize_partition
from .permutations import (
    ValleyPermutation,
    check_permutation,
    descent_set,
    dual,
    grassmannian_permutation,
    identity,
    length,
    longest_with_descents_in,
    swap_positions,
)
from .polynomials import IntPolynomial
from .problems import ProblemError, SchubertProblem, refine_to_full, validate_problem
from .tableaux import SkewShape, enumerate_lr_tableaux

__all__ = [
    "schubert_polynomial",
    "staircase_coefficient",
    "class_coefficient",
    "sum_of_first_variables",
    "oracle_intersection_number",
    "oracle_coefficient",
    "schubert_expand",
    "monk_multiply",
    "iterate_monk",
    "a_bruhat_leq",
    "descent_support_check",
    "restrict_shape",
    "coefficient_identity_check",
]

_schubert_cache: dict[tuple[int, ...], IntPolynomial] = {}


def _staircase_exponents(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def schubert_polynomial(w: Sequence[int]) -> IntPolynomial:
    """The Schubert polynomial of ``w``, homogeneous of degree ``length(w)``.

    Computed by divided differences down from the staircase monomial of
    the longest permutation; independent of the choice of reduced word.
    Exponent tuples have length ``n`` but the last variable never occurs.

    >>> schubert_polynomial((2, 1, 3)).terms()
    {(1, 0, 0): 1}
    """
    w = check_permutation(w)
    if w in _schubert_cache:
        return _schubert_cache[w]
    n = len(w)
    ascent = next((i for i in range(n - 1) if w[i] < w[i + 1]), None)
    if ascent is None:
        poly = IntPolynomial.monomial(_staircase_exponents(n))
    else:
        higher = schubert_polynomial(swap_positions(w, ascent + 1, ascent + 2))
        poly = higher.divided_difference(ascent + 1)
    _schubert_cache[w] = poly
    return poly


def staircase_coefficient(poly: IntPolynomial, n: int) -> int:
    """Coefficient of the point class: the staircase-monomial coefficient
    of the polynomial's image in the span of the S_n Schubert basis.

    Computed by applying divided differences along a reduced word of the
    longest permutation, which kills multiples of positive-degree
    symmetric functions and leaves exactly that coefficient.  The
    polynomial must be homogeneous of the top degree ``n(n-1)/2``.
    """
    top = n * (n - 1) // 2
    if poly.nvars != n:
        raise ValueError(f"polynomial has {poly.nvars} variables, expected {n}")
    if poly.is_zero:
        return 0
    if not poly.is_homogeneous() or poly.total_degree() != top:
        raise ValueError(
            f"expected a homogeneous polynomial of degree {top}, "
            f"got degree {poly.total_degree()}"
        )
    out = poly
    for k in range(1, n):
        for i in range(k, 0, -1):
            out = out.divided_difference(i)
    if out.is_zero:
        return 0
    return out.coefficient((0,) * poly.nvars)


def _class_product(words: Iterable[tuple[int, ...]], n: int) -> IntPolynomial:
    poly = IntPolynomial.one(n)
    for w in words:
        poly = poly * schubert_polynomial(w)
        if poly.is_zero:
            break
    return poly


def sum_of_first_variables(a: int, n: int) -> IntPolynomial:
    """``x1 + ... + xa``: the degree-one class pulled back from the
    ``a``-th Grassmannian."""
    poly = IntPolynomial.zero(n)
    for i in range(1, a + 1):
        poly = poly + IntPolynomial.variable(i, n)
    return poly


def _reduced_word(w: Sequence[int]) -> list[int]:
    """A reduced word for ``w``: repeatedly remove the first descent."""
    word = []
    u = list(w)
    while True:
        i = next((k for k in range(len(u) - 1) if u[k] > u[k + 1]), None)
        if i is None:
            return word
        word.append(i + 1)
        u[i], u[i + 1] = u[i + 1], u[i]


def class_coefficient(poly: IntPolynomial, w: Sequence[int]) -> int:
    """Coefficient of the class of ``w`` in a homogeneous polynomial of
    degree ``length(w)``.

    The divided differences along a reduced word of ``w`` send the basis
    member of ``w`` to 1 and every other basis member of that degree,
    anywhere in the stable basis, to zero, so the answer is the constant
    term of the cascade.
    """
    w = check_permutation(w)
    if poly.nvars != len(w):
        raise ValueError(f"polynomial has {poly.nvars} variables, expected {len(w)}")
    if poly.is_zero:
        return 0
    if not poly.is_homogeneous() or poly.total_degree() != length(w):
        raise ValueError(f"expected a homogeneous polynomial of degree {length(w)}")
    out = poly
    for i in _reduced_word(w):
        out = out.divided_difference(i)
        if out.is_zero:
            return 0
    return out.coefficient((0,) * poly.nvars)


def _term_words(problem: SchubertProblem) -> list[tuple[int, ...]]:
    return [grassmannian_permutation(a, lam, problem.n) for a, lam in problem.terms]


def oracle_intersection_number(
    problem: SchubertProblem, alpha: Sequence[int] | None = None
) -> int:
    """Coefficient of the point class, computed without the tableau rule.

    Default route: refine the problem to the full flag manifold by
    inserting complementary rectangles, multiply the Schubert
    polynomials of its Grassmannian permutations, and read off the
    staircase coefficient.  With an explicit ``alpha`` the coefficient
    of the corresponding point class is extracted by duality instead.
    """
    if alpha is not None:
        chosen = tuple(sorted(set(int(a) for a in alpha)))
        if not set(chosen) >= set(problem.alpha):
            raise ProblemError(
                f"alpha {list(chosen)} does not contain every cut {list(problem.alpha)}"
            )
        return oracle_coefficient(longest_with_descents_in(chosen, problem.n), problem)
    validate_problem(problem)
    full = refine_to_full(problem)
    return staircase_coefficient(_class_product(_term_words(full), full.n), full.n)


def oracle_coefficient(w: Sequence[int], problem: SchubertProblem) -> int:
    """Coefficient of the class of ``w`` in the problem's product.

    Poincare duality: multiply by the Schubert polynomial of ``w0 . w``
    and take the staircase coefficient.  Degree mismatch gives 0.
    """
    w = check_permutation(w)
    n = problem.n
    if len(w) != n:
        raise ProblemError(f"permutation size {len(w)} != problem ambient {n}")
    if length(w) != problem.total_size:
        return 0
    words = _term_words(problem) + [dual(w)]
    return staircase_coefficient(_class_product(words, n), n)


def schubert_expand(poly: IntPolynomial, n: int) -> dict[tuple[int, ...], int]:
    """Expansion of a homogeneous polynomial in the Schubert basis.

    Extracts one coefficient per permutation of the matching length via
    duality; intended for small ``n`` (property tests, prefix checks).
    """
    if poly.is_zero:
        return {}
    if not poly.is_homogeneous():
        raise ValueError("expansion requires a homogeneous polynomial")
    degree = poly.total_degree()
    out: dict[tuple[int, ...], int] = {}
    for w in itertools.permutations(range(1, n + 1)):
        if length(w) != degree:
            continue
        coeff = class_coefficient(poly, w)
        if coeff:
            out[w] = coeff
    return out


def monk_multiply(w: Sequence[int], a: int) -> dict[tuple[int, ...], int]:
    """Monk's formula: the expansion of (class of ``w``) times the
    degree-one class pulled back from the ``a``-th Grassmannian.

    Returns each ``w r_{jk}`` with ``j <= a < k`` and length one higher,
    with coefficient 1.

    >>> sorted(monk_multiply((1, 2, 3), 1))
    [(2, 1, 3)]
    """
    w = check_permutation(w)
    n = len(w)
    if not 1 <= a <= n - 1:
        raise ValueError(f"cut position {a} out of range 1..{n - 1}")
    lw = length(w)
    out: dict[tuple[int, ...], int] = {}
    for j in range(1, a + 1):
        for k in range(a + 1, n + 1):
            cover = swap_positions(w, j, k)
            if length(cover) == lw + 1:
                out[cover] = 1
    return out


def iterate_monk(problem: SchubertProblem) -> int:
    """Iterate Monk's formula over an all-box problem.

    Starting from the identity class, multiply by one box class per term
    and return the coefficient of the longest permutation with descents
    in ``alpha`` (the point class of the partial flag manifold).
    """
    if not problem.is_all_boxes():
        raise ProblemError("iterate_monk requires every content to be a single box")
    validate_problem(problem)
    n = problem.n
    state: dict[tuple[int, ...], int] = {identity(n): 1}
    for a, _ in problem.terms:
        nxt: dict[tuple[int, ...], int] = {}
        for w, coeff in state.items():
            for cover in monk_multiply(w, a):
                nxt[cover] = nxt.get(cover, 0) + coeff
        state = nxt
    return state.get(longest_with_descents_in(problem.alpha, n), 0)


def a_bruhat_leq(v: Sequence[int], w: Sequence[int], a: int) -> bool:
    """The two-part order test governing multiplication by a pullback
    from the ``a``-th Grassmannian.

    (1) ``w(i) >= v(i)`` for ``i <= a`` and ``w(j) <= v(j)`` for ``j > a``;
    (2) within each side of the cut, ``v(i) < v(j)`` implies ``w(i) < w(j)``.
    """
    v = check_permutation(v)
    w = check_permutation(w)
    if len(v) != len(w):
        raise ValueError("permutations must have the same size")
    n = len(v)
    if not 1 <= a <= n - 1:
        raise ValueError(f"cut position {a} out of range 1..{n - 1}")
    for i in range(n):
        if i < a:
            if w[i] < v[i]:
                return False
        elif w[i] > v[i]:
            return False
    for lo, hi in ((0, a), (a, n)):
        for i in range(lo, hi):
            for j in range(i + 1, hi):
                if v[i] < v[j] and w[i] >= w[j]:
                    return False
    return True


def descent_support_check(problem: SchubertProblem, t: int) -> bool:
    """Whether every class in the first ``t`` factors' product has all
    descents at or before the ``t``-th cut.

    Vacuously true for ``t = 0``; used as a property check, not in any
    counting path.
    """
    if not 0 <= t <= len(problem.terms):
        raise ProblemError(f"prefix length {t} out of range 0..{len(problem.terms)}")
    if t == 0:
        return True
    n = problem.n
    prefix = problem.terms[:t]
    words = [grassmannian_permutation(a, lam, n) for a, lam in prefix]
    poly = _class_product(words, n)
    a_t = prefix[-1][0]
    for w, coeff in schubert_expand(poly, n).items():
        if coeff < 0:
            return False
        if coeff and any(d > a_t for d in descent_set(w)):
            return False
    return True


def restrict_shape(nu: Iterable[int], b: int, n: int) -> tuple[int, ...]:
    """Intersection of a shape in the full staircase with the rectangle
    ``b x (n-b)`` anchored at the region's upper-right corner.

    Row ``j`` of the shape spans grid columns ``j .. j + nu_j - 1``; the
    rectangle covers rows ``1..b`` and the last ``n - b`` grid columns,
    so row ``j`` of the restriction has ``nu_j + j - b`` cells, clamped
    to ``[0, n - b]``.

    >>> restrict_shape((5, 3, 2), 3, 6)
    (3, 2, 2)
    >>> restrict_shape((4, 2), 3, 6)
    (2, 1)
    """
    nu = normalize_partition(nu)
    if not 1 <= b <= n - 1:
        raise ValueError(f"cut position {b} out of range 1..{n - 1}")
    if len(nu) > b:
        raise ValueError(f"shape {nu} has more than {b} rows")
    if any(nu[j] <= nu[j + 1] for j in range(len(nu) - 1)) or (nu and nu[0] > n - 1):
        raise ValueError(f"{nu} is not a shape in the full staircase for n={n}")
    rows = [min(max(0, nu[j - 1] + j - b), n - b) for j in range(1, len(nu) + 1)]
    return normalize_partition(rows)


def coefficient_identity_check(
    v: ValleyPermutation, w: ValleyPermutation, lam: Iterable[int]
) -> bool:
    """Compare the oracle coefficient of ``w`` in (class of ``v``) times
    the pullback of ``lam`` with the Littlewood-Richardson count on the
    restricted skew shape.
    """
    lam = normalize_partition(lam)
    if v.n != w.n or v.floor != w.floor:
        raise ValueError("valley permutations must share ambient size and floor")
    a, n = v.floor, v.n
    if not fits_in_rectangle(lam, a, n):
        raise ValueError(f"partition {lam} does not fit in {a} x {n - a}")
    nu, mu = v.mu, w.mu
    if not all(
        (nu[i] if i < len(nu) else 0) <= (mu[i] if i < len(mu) else 0)
        for i in range(max(len(nu), len(mu)))
    ):
        raise ValueError(f"shape {nu} is not contained in {mu}")
    if length(v.word) + sum(lam) != length(w.word):
        lhs = 0
    else:
        words = [v.word, grassmannian_permutation(a, lam, n), dual(w.word)]
        lhs = staircase_coefficient(_class_product(words, n), n)
    skew = SkewShape(restrict_shape(mu, a, n), restrict_shape(nu, a, n))
    rhs = len(enumerate_lr_tableaux(skew, lam))
    return lhs == rhs
