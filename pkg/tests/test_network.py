import random

import pytest
from hypothesis import given, strategies as st

from epl import (
    DimensionError,
    EvidenceMatrix,
    EvidenceNetwork,
    EvidenceTuple,
    UnknownVertexError,
    deduce,
    identity,
)


def test_intern_idempotent_and_contiguous():
    net = EvidenceNetwork()
    assert net.intern_vertex("a") == 0
    assert net.intern_vertex("b") == 1
    assert net.intern_vertex("a") == 0
    assert net.vertices == ("a", "b")


def test_intern_rejects_empty():
    with pytest.raises(ValueError):
        EvidenceNetwork().intern_vertex("")


def test_assert_revises():
    net = EvidenceNetwork()
    a, b = net.intern_vertex("a"), net.intern_vertex("b")
    net.assert_evidence(a, "isA", b, EvidenceTuple(1, 0))
    net.assert_evidence(a, "isA", b, EvidenceTuple(1, 0))
    assert net.get("a", "isA", "b") == EvidenceTuple(2, 0)


def test_assert_zero_stores_nothing():
    net = EvidenceNetwork()
    a, b = net.intern_vertex("a"), net.intern_vertex("b")
    net.assert_evidence(a, "isA", b, EvidenceTuple())
    assert net.get_slice("isA").nnz == 0
    net.assert_evidence(a, "wrote", b, (4, 4))
    assert net.get_slice("wrote").to_dict() == {(0, 1): EvidenceTuple(4, 4)}


def test_assert_unknown_vertex():
    net = EvidenceNetwork()
    net.intern_vertex("a")
    with pytest.raises(UnknownVertexError):
        net.assert_evidence(0, "isA", 5, (1, 0))
    with pytest.raises(UnknownVertexError):
        net.assert_evidence("a", "isA", "zz", (1, 0))


def test_get_slice_unknown_label(fig1):
    m = fig1.get_slice("nope")
    assert m.n == fig1.n and m.nnz == 0


def test_get_slice_fig1(fig1):
    assert fig1.get_slice("isA").nnz == 4


def test_slice_is_snapshot():
    net = EvidenceNetwork().add("a", "isA", "b")
    snap = net.get_slice("isA")
    net.add("a", "isA", "b").add("c", "isA", "a")
    assert snap.n == 2 and snap.to_dict() == {(0, 1): EvidenceTuple(1, 0)}


def test_slices_grow_with_vertices():
    net = EvidenceNetwork().add("a", "isA", "b")
    net.intern_vertex("c")
    assert net.get_slice("isA").n == 3


def test_merge_modes(fig1):
    before = fig1.get_slice("isA")
    fig1.merge_slice("isA", EvidenceMatrix.zeros(fig1.n), "revise")
    assert fig1.get_slice("isA") == before
    fig1.merge_slice("isA", EvidenceMatrix.zeros(fig1.n), "replace")
    assert fig1.get_slice("isA").nnz == 0


def test_merge_replace_roundtrip(fig1):
    m = EvidenceMatrix(fig1.n, {(0, 0): (2, 0), (1, 3): (0, 1)})
    fig1.merge_slice("x", m, "replace")
    assert fig1.get_slice("x") == m


def test_merge_deduction_gives_eight(fig1):
    fig1.merge_slice("isA", deduce(fig1, "isA").inferred, "revise")
    assert fig1.nnz("isA") == 8


def test_merge_dimension_mismatch(fig1):
    with pytest.raises(DimensionError):
        fig1.merge_slice("isA", identity(fig1.n + 1))


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.sampled_from(["p", "q"]),
                          st.integers(0, 9), st.integers(0, 9)), max_size=30),
       st.randoms())
def test_assert_order_insensitive(assertions, rnd):
    def build(items):
        net = EvidenceNetwork()
        for v in "abcd":
            net.intern_vertex(v)
        for s, o, p, wp, wn in items:
            net.assert_evidence(s, p, o, (wp, wn))
        return net

    shuffled = list(assertions)
    rnd.shuffle(shuffled)
    x, y = build(assertions), build(shuffled)
    assert x == y
    assert all(bool(v) for _, _, _, v in x.triples())
    assert all(x.get_slice(p).n == x.n for p in x.labels)


def test_copy_independent(fig1):
    c = fig1.copy()
    c.add("x", "isA", "y")
    assert "x" not in fig1 and fig1.nnz() == 4
