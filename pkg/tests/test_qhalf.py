from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heckealg.qhalf import QHalf


def scalars(max_terms=4, max_e2=6, max_c=50):
    return st.dictionaries(
        st.integers(-max_e2, max_e2), st.integers(-max_c, max_c), max_size=max_terms
    ).map(QHalf)


def test_constructors_and_canonical_form():
    assert QHalf({2: 0, 1: 3}) == QHalf({1: 3})
    assert QHalf.of_int(0).is_zero()
    assert QHalf.one() == QHalf.of_int(1)
    assert QHalf.q_power(1) * QHalf.q_power(1) == QHalf.q_power(2)


def test_half_exponent_addition():
    # q^(1/2) * q^(1/2) = q
    half = QHalf.q_power(1)
    assert half * half == QHalf.q_power(2)
    assert (half + half) == QHalf.q_power(1, 2)


def test_units_and_inverse():
    u = QHalf.q_power(3, -1)
    assert u.is_unit()
    assert u * u.inverse() == QHalf.one()
    with pytest.raises(ValueError):
        (QHalf.one() + QHalf.q_power(1)).inverse()
    with pytest.raises(ValueError):
        QHalf.of_int(2).inverse()


def test_eval_sqrt():
    # 3*q^(1/2) + q^-1 at q=5: (1/5, 3)
    x = QHalf({1: 3, -2: 1})
    assert x.eval_sqrt(5) == (Fraction(1, 5), Fraction(3))


def test_json_round_trip():
    x = QHalf({-3: 7, 0: -2, 4: 10**40})
    assert QHalf.from_json(x.to_json()) == x


@given(scalars(), scalars(), scalars())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + QHalf.zero() == a
    assert a * QHalf.one() == a
    assert a - a == QHalf.zero()


@given(scalars())
def test_canonical_idempotent(a):
    # re-normalizing the stored terms changes nothing
    assert QHalf(dict(a.items())) == a
