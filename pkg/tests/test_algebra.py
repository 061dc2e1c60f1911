from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from restricted_range import gfp
from restricted_range.algebra import (
    ALEPH_0,
    Cardinal,
    SetModel,
    VecModel,
    cardinal_arith,
    closure,
    extend_to_basis,
    instance_from_json,
)
from restricted_range.errors import MalformedInputError, PreconditionError

cardinals = st.one_of(
    st.integers(0, 50).map(Cardinal.finite),
    st.integers(0, 5).map(Cardinal.aleph),
)


def test_set_closure_is_identity():
    assert closure(SetModel(3, (0, 1)), [0, 2]).canon == (0, 2)


def test_vec_closure_line_and_empty():
    v = VecModel(2, 2, ((1, 0),))
    line = closure(v, [(1, 0)])
    assert line.dim == 1
    assert v.members(line) == [(0, 0), (1, 0)]
    empty = closure(v, [])
    assert empty.dim == 0 and v.members(empty) == [(0, 0)]


def test_closure_rejects_bad_elements():
    with pytest.raises(MalformedInputError):
        closure(SetModel(3, (0,)), [3])
    with pytest.raises(MalformedInputError):
        closure(VecModel(2, 2, ()), [(1, 0, 0)])


def test_extend_to_basis_examples():
    s = SetModel(3, (0, 1))
    assert extend_to_basis(s, [1]) == [1, 0, 2]
    v = VecModel(2, 2, ((1, 0),))
    assert extend_to_basis(v, [(1, 1)]) == [(1, 1), (1, 0)]
    assert extend_to_basis(v, [], v.closure([])) == []


def test_extend_to_basis_rejects_dependent_input():
    v = VecModel(2, 2, ())
    with pytest.raises(PreconditionError):
        extend_to_basis(v, [(1, 0), (1, 0)])
    with pytest.raises(PreconditionError):
        extend_to_basis(v, [(0, 1)], v.closure([(1, 0)]))


def test_cardinal_examples():
    assert cardinal_arith(Cardinal.finite(3), "add", ALEPH_0) == ALEPH_0
    assert cardinal_arith(Cardinal.aleph(1), "succ") == Cardinal.aleph(2)
    assert cardinal_arith(Cardinal.aleph(2), "min", Cardinal.finite(7)) == Cardinal.finite(7)
    assert cardinal_arith(Cardinal.finite(2), "cmp", Cardinal.finite(2)) == 0
    assert Cardinal.finite(10**6) < ALEPH_0 < Cardinal.aleph(1)


@given(cardinals, cardinals, cardinals)
def test_cardinal_addition_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a + b >= max(a, b)


@given(cardinals, cardinals)
def test_cardinal_order_total_and_succ(a, b):
    assert (a < b) + (a == b) + (a > b) == 1
    assert a.succ() > a
    if a < b:
        assert a.succ() < b.succ()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_exchange_property_gf2(n):
    v = VecModel(2, n, ())
    elems = v.A_elements
    subsets = [list(c) for k in range(n + 1) for c in combinations(elems, k)]
    for X in subsets:
        span_x = v.closure(X)
        for a, b in product(elems, repeat=2):
            if v.contains(v.closure(X + [a]), b) and not v.contains(span_x, b):
                assert v.contains(v.closure(X + [b]), a)


@given(st.sampled_from([2, 3, 5]), st.integers(1, 3), st.data())
def test_vec_closure_size_and_idempotence(p, n, data):
    gens = data.draw(st.lists(st.tuples(*[st.integers(0, p - 1)] * n), max_size=4))
    v = VecModel(p, n, ())
    sub = v.closure(gens)
    assert len(v.members(sub)) == p**sub.dim
    assert v.closure(v.basis(sub)) == sub


@given(st.sampled_from([2, 3, 5]), st.integers(1, 3), st.data())
def test_left_nullspace_matches_brute_force(p, n, data):
    rows = data.draw(st.lists(st.tuples(*[st.integers(0, p - 1)] * n), min_size=n, max_size=n))
    mat = tuple(rows)
    null = gfp.left_nullspace(mat, n, p)
    brute = [x for x in product(range(p), repeat=n) if not any(gfp.vecmat(x, mat, p))]
    assert len(brute) == p ** len(null)
    assert all(gfp.in_span(x, null, p) for x in brute)
    assert gfp.rank(mat, p) + len(null) == n


@given(st.sampled_from([2, 3, 5]), st.integers(1, 3), st.data())
def test_inverse_roundtrip(p, n, data):
    rows = data.draw(st.lists(st.tuples(*[st.integers(0, p - 1)] * n), min_size=n, max_size=n))
    mat = tuple(rows)
    if gfp.rank(mat, p) < n:
        return
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    assert gfp.matmul(mat, gfp.inverse(mat, p), p) == ident


def test_instance_json_roundtrip():
    for inst in (SetModel(4, (1, 3)), VecModel(3, 2, ((2, 0),))):
        assert instance_from_json(inst.to_json()) == inst


def test_instance_json_rejects_garbage():
    for bad in ({}, {"model": "torus"}, {"model": "set"}, {"model": "vector_space", "prime": 4, "dim": 2, "range_basis": []}):
        with pytest.raises(MalformedInputError):
            instance_from_json(bad)


def test_e_and_codim():
    s, v = SetModel(5, (2, 3, 4)), VecModel(2, 3, ((1, 0, 0),))
    assert (s.e, s.codim, s.dim_B) == (1, 2, 3)
    assert (v.e, v.codim, v.dim_B) == (0, 2, 1)
