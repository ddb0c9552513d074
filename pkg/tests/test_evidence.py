import math

import pytest
from hypothesis import given, strategies as st

from epl import ONE, ZERO, EvidenceTuple, evidence_product, evidence_sum, truth_value

from conftest import int_tuples, tuples


def close(a, b, rel=1e-9, atol=1e-9):
    return (math.isclose(a.w_pos, b.w_pos, rel_tol=rel, abs_tol=atol)
            and math.isclose(a.w_neg, b.w_neg, rel_tol=rel, abs_tol=atol))


@pytest.mark.parametrize("a, b, expected", [
    ((3, 1), (0, 0), (3, 1)),
    ((2, 1), (3, 2), (5, 3)),
    ((1, 0), (1, 0), (2, 0)),
])
def test_sum_examples(a, b, expected):
    assert evidence_sum(EvidenceTuple(*a), EvidenceTuple(*b)) == EvidenceTuple(*expected)


@pytest.mark.parametrize("a, b, expected", [
    ((1, 0), (4, 7), (4, 7)),
    ((2, 1), (3, 2), (6, 9)),  # 2*2 + 1*3 + 1*2
    ((0, 0), (5, 5), (0, 0)),
])
def test_product_examples(a, b, expected):
    assert evidence_product(EvidenceTuple(*a), EvidenceTuple(*b)) == EvidenceTuple(*expected)


def test_operators_match_functions():
    a, b = EvidenceTuple(2, 1), EvidenceTuple(3, 2)
    assert a + b == evidence_sum(a, b)
    assert a * b == evidence_product(a, b)


@pytest.mark.parametrize("bad", [(-1, 0), (0, -0.5), (math.nan, 0), (0, math.inf)])
def test_invalid_weights_rejected(bad):
    with pytest.raises(ValueError):
        EvidenceTuple(*bad)


def test_zero_is_falsy():
    assert not ZERO
    assert EvidenceTuple(0, 3)
    assert EvidenceTuple(-0.0, 0) == ZERO


def test_truth_hard_truth():
    tv = truth_value(ONE, k=0)
    assert (tv.f, tv.c) == (1.0, 1.0)


def test_truth_no_evidence():
    tv = truth_value(ZERO, k=1)
    assert tv.f is None and not tv.defined
    assert tv.c == 0.0


def test_truth_no_evidence_k_zero_is_zero_confidence():
    assert truth_value(ZERO, k=0).c == 0.0


def test_truth_three_one():
    tv = truth_value(EvidenceTuple(3, 1), k=1)
    assert tv.f == pytest.approx(0.75, abs=1e-12)
    assert tv.c == pytest.approx(0.8, abs=1e-12)


def test_truth_default_k_is_one():
    assert truth_value(EvidenceTuple(1, 0)).c == 0.5


def test_truth_rejects_negative_k():
    with pytest.raises(ValueError):
        truth_value(ONE, k=-1)


@given(int_tuples, int_tuples, int_tuples)
def test_sum_laws_exact_on_integers(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a + ZERO == a


@given(int_tuples, int_tuples, int_tuples)
def test_product_laws_exact_on_integers(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * ONE == ONE * a == a
    assert a * ZERO == ZERO * a == ZERO
    assert a * (b + c) == a * b + a * c


@given(tuples, tuples, tuples)
def test_laws_on_reals(a, b, c):
    # values up to 1e9 after two products: absolute 1e-9 is below double
    # resolution there, so compare at relative 1e-9
    assert close((a + b) + c, a + (b + c))
    assert close((a * b) * c, a * (b * c))
    assert close(a * (b + c), a * b + a * c)
    assert close(a * b, b * a)


@given(tuples)
def test_no_evidence_iff_undefined(a):
    tv = truth_value(a, 1.0)
    assert (tv.f is None) == (a == ZERO)
    assert (tv.c == 0) == (a == ZERO)
    if tv.f is not None:
        assert 0 <= tv.f <= 1
    assert 0 <= tv.c < 1


@given(st.floats(0, 1e3), st.floats(0, 1e3), st.floats(0, 1e3), st.floats(0, 10))
def test_truth_monotonicity(p1, p2, neg, k):
    lo, hi = sorted((p1, p2))
    a, b = truth_value(EvidenceTuple(lo, neg), k), truth_value(EvidenceTuple(hi, neg), k)
    if a.f is not None:
        assert a.f <= b.f + 1e-12
    assert a.c <= b.c + 1e-12
