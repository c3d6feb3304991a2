import random
from fractions import Fraction

import pytest

from heckealg.coset import (
    check_convolution_vs_satake,
    classify,
    constant_term,
    convolve,
    enumerate_cosets,
    hnf,
    mat_mul,
    random_unimodular,
    satake_image,
)

F0 = Fraction(0)
F1 = Fraction(1)


def test_classify_identity():
    assert classify(((1, 0), (0, 1)), 5) == (0, 0)
    assert classify(((1, 0, 0), (0, 1, 0), (0, 0, 1)), 3) == (0, 0, 0)


def test_classify_diagonal():
    p = 3
    assert classify(((p * p, 0), (0, p)), p) == (1, 2)


def test_classify_off_diagonal_unit():
    p = 5
    assert classify(((p, 1), (0, 1)), p) == (0, 1)


def test_classify_bi_invariance():
    rng = random.Random(7)
    p = 3
    base = ((p, 1), (0, p * p))
    t = classify(base, p)
    for _ in range(25):
        u = random_unimodular(2, rng)
        v = random_unimodular(2, rng)
        assert classify(mat_mul(mat_mul(u, base), v), p) == t


def test_hnf_canonical_under_right_action():
    rng = random.Random(11)
    base = ((2, 1, 0), (0, 4, 3), (0, 0, 8))
    h = hnf(base)
    for _ in range(20):
        u = random_unimodular(3, rng)
        assert hnf(mat_mul(base, u)) == h


def test_enumerate_line_cosets():
    reps = enumerate_cosets(2, 3, (0, 1))
    assert len(reps) == 4
    assert ((1, 0), (0, 3)) in reps
    assert ((3, 2), (0, 1)) in reps


def test_enumerate_central():
    for p in (2, 3, 5):
        assert enumerate_cosets(2, p, (1, 1)) == [((p, 0), (0, p))]


def test_enumerate_zero_two():
    assert len(enumerate_cosets(2, 3, (0, 2))) == 12  # p^2 + p


def test_enumerate_rejects_negative():
    with pytest.raises(ValueError):
        enumerate_cosets(2, 3, (-1, 0))


def count_subspaces_brute(n, p, k):
    """Independent count of k-dim subspaces of F_p^n by span enumeration."""
    from itertools import product as iproduct

    vectors = [v for v in iproduct(range(p), repeat=n)]

    def span(gens):
        seen = {(0,) * n}
        frontier = [(0,) * n]
        while frontier:
            base = frontier.pop()
            for g in gens:
                for c in range(1, p):
                    w = tuple((x + c * y) % p for x, y in zip(base, g))
                    if w not in seen:
                        seen.add(w)
                        frontier.append(w)
        return frozenset(seen)

    spans = set()
    for gens in iproduct(vectors, repeat=k):
        s = span(gens)
        if len(s) == p**k:
            spans.add(s)
    return len(spans)


@pytest.mark.parametrize("n,p,k", [(2, 2, 1), (2, 3, 1), (3, 2, 1), (3, 2, 2), (3, 3, 1), (3, 3, 2)])
def test_coset_counts_match_subgroup_counts(n, p, k):
    # index-p^k cosets with label (0,..,0,1,..,1) biject with k-dim quotients
    label = (0,) * (n - k) + (1,) * k
    assert len(enumerate_cosets(n, p, label)) == count_subspaces_brute(n, p, k)


def test_convolve_classical_identity():
    for p in (2, 3, 5):
        out = convolve(2, p, (0, 1), (0, 1))
        assert out == {(0, 2): 1, (1, 1): p + 1}


def test_convolve_unit():
    assert convolve(2, 3, (0, 0), (0, 2)) == {(0, 2): 1}
    assert convolve(3, 2, (0, 0, 0), (0, 1, 2)) == {(0, 1, 2): 1}


def test_convolve_central_translation():
    assert convolve(2, 3, (1, 1), (0, 1)) == {(1, 2): 1}


def test_convolve_commutes_sample():
    assert convolve(2, 3, (0, 2), (1, 1)) == convolve(2, 3, (1, 1), (0, 2))
    assert convolve(2, 2, (0, 1), (0, 2)) == convolve(2, 2, (0, 2), (0, 1))


def test_constant_term_line_label():
    for p in (2, 3, 5):
        out = constant_term(2, p, (1, 1), (0, 1))
        assert out == {((1,), (0,)): p, ((0,), (1,)): 1}


def test_constant_term_central():
    out = constant_term(2, 3, (1, 1), (1, 1))
    assert out == {((1,), (1,)): 1}


def test_constant_term_trivial_partition():
    out = constant_term(2, 3, (2,), (0, 1))
    assert out == {((0, 1),): 4}  # all p+1 representatives keep their label


def test_satake_image_line():
    for p in (2, 3, 5):
        img = satake_image(2, p, (0, 1))
        assert img == {(1, 0): (F0, F1), (0, 1): (F0, F1)}  # p^(1/2)(Y1+Y2)


def test_satake_image_square_label():
    for p in (2, 3, 5):
        img = satake_image(2, p, (0, 2))
        expect = {
            (2, 0): (Fraction(p), F0),
            (0, 2): (Fraction(p), F0),
            (1, 1): (Fraction(p - 1), F0),
        }
        assert img == expect


def test_satake_image_unit():
    assert satake_image(3, 3, (0, 0, 0)) == {(0, 0, 0): (F1, F0)}


def test_convolution_vs_satake_small():
    for p in (2, 3):
        res = check_convolution_vs_satake(2, p, (0, 1), (0, 1))
        assert res["ok"]
        assert res["constants"] == {(0, 2): 1, (1, 1): p + 1}
        assert res["pair_total"] == (p + 1) ** 2
