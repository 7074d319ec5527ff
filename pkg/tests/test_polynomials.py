import pytest

from lrflags.polynomials import IntPolynomial


def x(i, n):
    return IntPolynomial.variable(i, n)


def test_constructors_drop_zeros():
    p = IntPolynomial(2, {(1, 0): 0, (0, 1): 3})
    assert p.terms() == {(0, 1): 3}
    assert IntPolynomial.zero(3).is_zero
    assert IntPolynomial.one(3).coefficient((0, 0, 0)) == 1


def test_arity_checked():
    with pytest.raises(ValueError):
        IntPolynomial(2, {(1, 0, 0): 1})
    with pytest.raises(ValueError):
        x(1, 2) + x(1, 3)


def test_ring_operations():
    a, b = x(1, 3), x(2, 3)
    p = (a + b) * (a - b)
    assert p == a * a - b * b
    assert (p - p).is_zero
    assert 2 * (a + b) == a + a + b + b
    assert (a + b) * IntPolynomial.one(3) == a + b


def test_exactness_large_coefficients():
    p = IntPolynomial.monomial((1, 0), 10**30)
    q = p * p
    assert q.coefficient((2, 0)) == 10**60


def test_degree_and_homogeneity():
    a, b = x(1, 2), x(2, 2)
    assert (a * a + a * b).is_homogeneous()
    assert not (a + a * b).is_homogeneous()
    assert (a * a * b).total_degree() == 3
    assert IntPolynomial.zero(2).is_homogeneous()


def test_divided_difference_basics():
    a, b, c = x(1, 3), x(2, 3), x(3, 3)
    # constant and symmetric inputs vanish
    assert IntPolynomial.one(3).divided_difference(1).is_zero
    assert (a + b).divided_difference(1).is_zero
    assert (a * b).divided_difference(1).is_zero
    # simple quotients
    assert a.divided_difference(1) == IntPolynomial.one(3)
    assert (a * a).divided_difference(1) == a + b
    assert (a * a * b).divided_difference(2) == a * a
    # x3 participates in the last difference
    assert (b * b).divided_difference(2) == b + c


def test_divided_difference_leibniz_like_identity():
    # partial(f) * (x_i - x_{i+1}) == f - swap(f)
    a, b = x(1, 3), x(2, 3)
    f = a * a * a + a * b
    lhs = f.divided_difference(1) * (a - b)
    swapped = IntPolynomial(3, {(e[1], e[0], e[2]): c for e, c in f.terms().items()})
    assert lhs == f - swapped


def test_divided_difference_index_bounds():
    with pytest.raises(ValueError):
        x(1, 2).divided_difference(2)
