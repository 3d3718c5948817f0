from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nrspaces.exact_linalg import (Matrix, Q, format_rational, image, kernel, parse_rational, rref,
                                   solve_linear, span)
from conftest import matrices, small_q


@pytest.mark.parametrize("text, value", [("3", 3), ("-7/4", Fraction(-7, 4)), ("6/8", Fraction(3, 4)),
                                         (" 5 ", 5)])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1.5", "x", "1/0", "", "1//2", "2/-3"])
def test_parse_rational_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_rational(bad)


def test_floats_are_not_rationals():
    with pytest.raises((TypeError, ValueError)):
        Q(0.25)


@given(small_q)
def test_format_parse_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


def test_format_is_reduced():
    assert format_rational(Fraction(4, -6)) == "-2/3"
    assert format_rational(Fraction(5)) == "5"


def test_matrix_basics():
    a = Matrix([[1, 2], [3, 4]])
    assert a.det() == -2
    assert a @ a.inverse() == Matrix.identity(2)
    assert a.T == Matrix([[1, 3], [2, 4]])
    assert a @ (1, 1) == (3, 7)
    assert a.column(1) == (2, 4)
    assert a.commutator(a).is_zero()


def test_singular_inverse():
    with pytest.raises(ZeroDivisionError):
        Matrix([[1, 2], [2, 4]]).inverse()


@given(matrices(3), matrices(3))
def test_det_multiplicative(a, b):
    assert (a @ b).det() == a.det() * b.det()


@given(matrices(3, 4))
def test_rank_nullity(a):
    assert a.rank() + kernel(a).dim == 4
    for v in kernel(a).basis:
        assert all(x == 0 for x in a @ v)
    assert image(a).dim == a.rank()


@given(matrices(3, 4))
def test_rref_idempotent(a):
    r, piv = rref(a)
    assert rref(r) == (r, piv)


@given(st.lists(st.lists(small_q, min_size=3, max_size=3), max_size=4), st.randoms(use_true_random=False))
def test_span_is_canonical(vectors, rnd):
    shuffled = list(vectors)
    rnd.shuffle(shuffled)
    doubled = [tuple(2 * x for x in v) for v in shuffled]
    assert span(vectors, 3) == span(doubled, 3)


def test_subspace_operations():
    u = span([(1, 0, 0), (0, 1, 0)], 3)
    v = span([(0, 1, 0), (0, 0, 1)], 3)
    assert (u + v).dim == 3
    assert u.intersect(v) == span([(0, 1, 0)], 3)
    assert u.coordinates((2, 3, 0)) == (2, 3)
    assert u.is_proper() and not (u + v).is_proper()
    with pytest.raises(ValueError):
        u.coordinates((0, 0, 1))


def test_solve_linear():
    a = Matrix([[1, 1], [2, 2]])
    x, ker = solve_linear(a, (1, 2))
    assert a @ x == (1, 2) and ker.dim == 1
    x, _ = solve_linear(a, (1, 3))
    assert x is None
