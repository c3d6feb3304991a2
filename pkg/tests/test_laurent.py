import pytest
from hypothesis import given, settings, strategies as st

from heckealg.laurent import Laurent, VariableMismatch
from heckealg.qhalf import QHalf

VARS = ("Y1", "Y2")


def Y(name, power=1, coeff=1):
    return Laurent.variable(VARS, name, power, coeff)


def polys(variables=VARS, max_terms=4):
    n = len(variables)
    coeffs = st.dictionaries(
        st.integers(-3, 3), st.integers(-9, 9), min_size=1, max_size=2
    ).map(QHalf)
    term = st.tuples(st.tuples(*[st.integers(-3, 3)] * n), coeffs)
    return st.lists(term, max_size=max_terms).map(
        lambda items: Laurent(variables, dict(items))
    )


def test_free_module_sum():
    assert Y("Y1") + Y("Y2") == Laurent(VARS, {(1, 0): QHalf.one(), (0, 1): QHalf.one()})


def test_cancellation_to_canonical_form():
    p = (Y("Y1") + Y("Y2")) + Y("Y2", coeff=-1)
    assert p == Y("Y1")
    assert p.num_terms() == 1


def test_like_term_collection():
    half = QHalf.q_power(1)
    p = Y("Y1", coeff=half) + Y("Y1", coeff=half)
    assert p == Laurent(VARS, {(1, 0): QHalf.q_power(1, 2)})


def test_laurent_inverse_monomial():
    assert Y("Y1") * Y("Y1", power=-1) == Laurent.one(VARS)


def test_binomial_square():
    p = (Y("Y1") + Y("Y2")) ** 2
    exp = (
        Y("Y1", 2)
        + Laurent.monomial(VARS, (1, 1), 2)
        + Y("Y2", 2)
    )
    assert p == exp


def test_half_exponents_multiply():
    half = QHalf.q_power(1)
    p = Y("Y1", coeff=half) * Y("Y2", coeff=half)
    assert p == Laurent.monomial(VARS, (1, 1), QHalf.q_power(2))


def test_variable_mismatch():
    other = Laurent.one(("Z1",))
    with pytest.raises(VariableMismatch):
        Laurent.one(VARS) + other
    with pytest.raises(VariableMismatch):
        Laurent.one(VARS) * other


def test_substitute_split_rank_one():
    # Y1+Y2 with {Y1 -> q^(1/2) Z1, Y2 -> q^(-1/2) W1}
    p = Y("Y1") + Y("Y2")
    target = ("W1", "Z1")
    image = p.substitute(
        {
            "Y1": (QHalf.q_power(1), "Z1", 1),
            "Y2": (QHalf.q_power(-1), "W1", 1),
        },
        target,
    )
    expect = Laurent(target, {(0, 1): QHalf.q_power(1), (1, 0): QHalf.q_power(-1)})
    assert image == expect


def test_substitute_base_change_collapse():
    # Y1*Y2 with {Y1 -> X1, Y2 -> X1^-1} -> 1
    p = Laurent.monomial(VARS, (1, 1))
    image = p.substitute(
        {"Y1": (QHalf.one(), "X1", 1), "Y2": (QHalf.one(), "X1", -1)},
        ("X1",),
    )
    assert image == Laurent.one(("X1",))


def test_substitute_identity():
    p = Y("Y1", 3) + Y("Y2", -2, coeff=QHalf.q_power(-1, 4))
    ident = {v: (QHalf.one(), v, 1) for v in VARS}
    assert p.substitute(ident, VARS) == p


def test_substitute_unmapped_variable():
    with pytest.raises(VariableMismatch):
        (Y("Y1") + Y("Y2")).substitute({"Y1": (QHalf.one(), "Z1", 1)}, ("Z1",))


def test_json_round_trip():
    p = Y("Y1", -2, coeff=QHalf({1: 3, -4: 10**30})) + Laurent.one(VARS)
    assert Laurent.from_json(p.to_json()) == p


@settings(max_examples=60)
@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + Laurent.zero(VARS) == a
    assert a * Laurent.one(VARS) == a


@settings(max_examples=40)
@given(polys(), polys())
def test_substitution_is_ring_hom(a, b):
    target = ("U1", "U2")
    sub = {
        "Y1": (QHalf.q_power(1), "U2", -1),
        "Y2": (QHalf.q_power(-3), "U1", 1),
    }
    left = (a * b).substitute(sub, target)
    right = a.substitute(sub, target) * b.substitute(sub, target)
    assert left == right
    assert (a + b).substitute(sub, target) == a.substitute(sub, target) + b.substitute(
        sub, target
    )
