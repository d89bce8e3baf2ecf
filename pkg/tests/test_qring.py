import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qhowe.qring import (
    InexactDivisionError,
    Laurent,
    gdim_projective,
    is_graded_dimension,
    qbinom,
    qfact,
    qint,
)

q = Laurent.q
one = Laurent.one()
zero = Laurent.zero()


def laurents():
    term = st.tuples(st.integers(-6, 6), st.integers(1, 3))
    return st.dictionaries(term, st.integers(-9, 9), max_size=5).map(
        lambda d: Laurent.from_exponents({Fraction(n, dd): c for (n, dd), c in d.items()})
    )


@settings(max_examples=200, deadline=None)
@given(laurents(), laurents(), laurents())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + zero == a
    assert a * one == a
    assert a - a == zero


@settings(max_examples=200, deadline=None)
@given(laurents(), laurents())
def test_no_zero_divisors(a, b):
    if a and b:
        assert a * b


@settings(max_examples=100, deadline=None)
@given(laurents(), laurents())
def test_bar_is_multiplicative(a, b):
    assert (a * b).bar() == a.bar() * b.bar()
    assert a.bar().bar() == a


@settings(max_examples=100, deadline=None)
@given(laurents(), laurents())
def test_divexact_roundtrip(a, b):
    if b:
        assert (a * b).divexact(b) == a


def test_qint_values():
    assert qint(0) == zero
    assert qint(1) == one
    assert qint(2) == q(-1) + q(1)
    assert qint(-3) == -qint(3)
    assert qint(5).at_one() == 5


def test_qfact_values():
    assert qfact(0) == one
    assert qfact(2) == q(-1) + q(1)
    # product expanded by ordinary multiplication
    assert qfact(3) == (q(-1) + q(1)) * (q(-2) + 1 + q(2))


def test_qbinom_values():
    assert qbinom(2, 1) == qint(2)
    for n in range(6):
        assert qbinom(n, 0) == one
    assert qbinom(4, 2) == q(-4) + q(-2) + 2 + q(2) + q(4)


@pytest.mark.parametrize("n", range(0, 8))
def test_qbinom_symmetry_and_value_at_one(n):
    for k in range(n + 1):
        b = qbinom(n, k)
        assert b == qbinom(n, n - k)
        assert b.at_one() == math.comb(n, k)
        assert is_graded_dimension(b)


@pytest.mark.parametrize("n", range(1, 8))
def test_q_pascal_recursion(n):
    for k in range(1, n):
        lhs = qbinom(n, k)
        rhs = q(-k) * qbinom(n - 1, k) + q(n - k) * qbinom(n - 1, k - 1)
        assert lhs == rhs


def test_gdim_projective():
    assert gdim_projective(0) == one
    assert gdim_projective(1) == q(-1) + q(1)
    assert gdim_projective(3) == q(-3) + q(-1) + q(1) + q(3)
    for n in range(6):
        assert gdim_projective(n) == qint(n + 1)
        assert is_graded_dimension(gdim_projective(n))


def test_qbinom_validates_range():
    with pytest.raises(ValueError):
        qbinom(2, 3)
    with pytest.raises(ValueError):
        qbinom(2, -1)


def test_divexact_failure_is_loud():
    with pytest.raises(InexactDivisionError):
        qint(2).divexact(qint(3))
    with pytest.raises(InexactDivisionError):
        (q(1) + 1).divexact(Laurent.integer(2))
    with pytest.raises(InexactDivisionError):
        one.divexact(zero)


def test_fractional_exponents():
    half = q(1, 2)
    assert half * half == q(1)
    assert half ** 4 == q(2)
    assert (q(1, 2) * q(1, 3)) == q(5, 6)
    assert q(-3, 2).unit_inverse() == q(3, 2)


def test_units():
    assert q(7).is_unit()
    assert (-q(-2, 3)).is_unit()
    assert not (one + q(1)).is_unit()
    assert not Laurent.integer(2).is_unit()


def test_canonical_text():
    assert zero.text() == "0"
    assert (q(-1, 2) - 2 + q(3, 2)).text() == "1*q^(-1/2)-2+1*q^(3/2)"
    assert (-one).text() == "-1"
    assert (3 * q(2)).text() == "3*q^(2)"


def test_hash_and_equality_across_denominators():
    assert q(2, 2) == q(1)
    assert hash(q(2, 2)) == hash(q(1))
    assert q(1, 2) != q(1, 3)
