import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from restricted_range import endo as E
from restricted_range import exgreens as X
from restricted_range import greens as G
from restricted_range.algebra import ALEPH_0, Cardinal, SetModel, VecModel
from restricted_range.semigroup import enumerate_semigroup

from conftest import table_for


def idx(t, *img):
    return t.index_of(E.Endo(t.instance, img))


def maps(t, block):
    return sorted(t.elements[x].data for x in block)


def test_Lstar_is_image_equality(s32):
    Ls = X.rel_Lstar(s32)
    assert maps(s32, Ls.block_of(idx(s32, 0, 0, 1))) == [(0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 0, 1), (1, 1, 0)]
    assert Ls.block_of(idx(s32, 0, 0, 0)) == (idx(s32, 0, 0, 0),)
    assert X.rel_Ltilde(s32) == Ls


def test_Rstar_on_complement_follows_kernel_on_B(s32):
    a, b = idx(s32, 0, 0, 1), idx(s32, 1, 1, 0)
    assert X.Rstar_related(s32, a, b)
    assert not X.Rstar_related(s32, a, idx(s32, 0, 0, 0))


def test_Rtilde_collapses_complement(nonregular):
    t = nonregular
    outside = np.flatnonzero(~t.q_mask)
    Rt = X.rel_Rtilde(t)
    assert len({Rt.labels()[x] for x in outside}) == 1


def test_inclusions(nonregular):
    t = nonregular
    R, L = G.rel_R(t), G.rel_L(t)
    Rs, Ls, Rt, Lt = X.rel_Rstar(t), X.rel_Lstar(t), X.rel_Rtilde(t), X.rel_Ltilde(t)
    assert R.refines(Rs) and Rs.refines(Rt)
    assert L.refines(Ls) and Ls.refines(Lt)
    assert X.rel_Dstar(t).refines(X.rel_Dtilde_Jtilde(t))


def test_starred_agree_with_classical_on_Q(nonregular):
    t = nonregular
    q = np.flatnonzero(t.q_mask)
    for i in q:
        for j in q:
            assert X.Rstar_related(t, i, j) == G.R_related(t, i, j)
            assert X.Lstar_related(t, i, j) == G.L_related(t, i, j)


def test_Dstar_class_counts(any_table):
    t = any_table
    inst = t.instance
    if not t.classification.standing_assumptions:
        return
    n = len(X.rel_Dstar(t))
    if inst.codim >= 2:
        assert n == 2
    elif inst.codim == 1:
        assert n == int(t.rank.max()) - inst.e + 1


def test_Dtilde_blocks(nonregular):
    t = nonregular
    e = t.instance.e
    blocks = {tuple(b) for b in X.rel_Dtilde_Jtilde(t).blocks}
    low = tuple(int(i) for i in np.flatnonzero(t.rank == e))
    high = tuple(int(i) for i in np.flatnonzero(t.rank > e))
    assert blocks == {low, high}
    assert X.rel_Jstar(t) == X.rel_Dstar(t)


def test_noncommuting_composite():
    t = table_for("set_5_3")
    a, b = idx(t, 2, 2, 2, 3, 4), idx(t, 2, 2, 4, 4, 4)
    assert X.composite_LstarRstar(t, a, b)
    assert not X.composite_RstarLstar(t, a, b)


def test_abundance(nonregular):
    rep = X.abundance(nonregular)
    assert rep.right_abundant and rep.right_fountain
    assert not rep.left_abundant and not rep.left_fountain
    w = rep.witnesses["left_abundant"]
    assert not nonregular.q_mask[w]
    assert set(rep.to_json()["witnesses"]) == {"left_abundant", "left_fountain"}


def test_left_congruence_cases():
    assert X.rtilde_left_congruence(table_for("set_4_2")) == (True, True)
    assert X.rtilde_left_congruence(table_for("vec_2_2_1")) == (True, True)
    assert X.rtilde_left_congruence(table_for("vec_2_3_2")) == (False, False)
    assert X.rtilde_left_congruence(table_for("set_4_3")) == (False, False)


def test_left_congruence_prediction_matches(nonregular):
    predicted, observed = X.rtilde_left_congruence(nonregular)
    assert predicted == observed


def test_vector_left_congruence_dim_one_over_gf3():
    t = enumerate_semigroup(VecModel(3, 2, [(1, 0)]))
    assert X.rtilde_left_congruence(t) == (True, True)


# -- cardinal predicates ------------------------------------------------------------

A0, A1 = ALEPH_0, Cardinal.aleph(1)
F = Cardinal.finite


def test_dstar_infinite_examples():
    assert X.dstar_related(F(2), A0, A0, 0)
    assert not X.dstar_related(A1, A0, A0, 0)
    assert X.dstar_related(A1, A1, A0, 0)
    assert not X.dstar_related(F(0), F(3), A0, 0)
    assert X.dstar_related(F(1), A0, A0, 0)
    assert not X.dstar_related(F(1), A0, A0, 1)


def test_dstar_finite_codim():
    assert X.dstar_related(2, 3, 2, 0)
    assert not X.dstar_related(2, A0, 2, 0)
    assert not X.dstar_related(2, 3, 1, 0)
    assert not X.dstar_related(1, 3, 5, 1)


finite_or_aleph = st.one_of(
    st.integers(0, 12).map(F), st.integers(0, 3).map(Cardinal.aleph)
)


@given(finite_or_aleph, finite_or_aleph, finite_or_aleph, st.sampled_from([0, 1]))
def test_dstar_is_symmetric_and_reflexive(a, b, c, e):
    assert X.dstar_related(a, b, c, e) == X.dstar_related(b, a, c, e)
    assert X.dstar_related(a, a, c, e)


@given(finite_or_aleph, finite_or_aleph, finite_or_aleph, finite_or_aleph, st.sampled_from([0, 1]))
def test_dstar_is_transitive(a, b, c, codim, e):
    if X.dstar_related(a, b, codim, e) and X.dstar_related(b, c, codim, e):
        assert X.dstar_related(a, c, codim, e)


@given(st.integers(0, 3), st.integers(0, 3))
def test_same_rank_forced_restricts_composite(k, j):
    # codim finite below an infinite rank: only equal ranks admit a partner
    ra = Cardinal.aleph(k)
    codim = F(3)
    assert X.same_rank_forced(ra, codim, Cardinal.aleph(k + 1))
    for rb in (Cardinal.aleph(j), F(j)):
        if rb != ra:
            assert not X.lstar_rstar_composite(ra, False, rb, rb, codim)


@given(st.integers(0, 2), st.integers(1, 3))
def test_rank_jump_matches_composite(k, gap):
    ra, nu = Cardinal.aleph(k), Cardinal.aleph(k + gap)
    big = Cardinal.aleph(k + 3)
    assert X.rank_jump_target(ra, nu, big, big)
    # a map outside Q with rank_B = ra and rank nu is reachable from rank nu
    assert X.lstar_rstar_composite(nu, False, nu, ra, big)
    assert not X.rank_jump_target(ra, nu, F(5), big)


def test_composite_finite_cases():
    assert X.lstar_rstar_composite(3, True, 3, 3, 2)
    assert not X.lstar_rstar_composite(2, True, 3, 3, 2)
    assert X.lstar_rstar_composite(3, False, 3, 1, 2)
    assert not X.lstar_rstar_composite(4, False, 3, 1, 2)
    assert not X.lstar_rstar_composite(1, False, 3, 1, 2)
    assert X.lstar_rstar_composite(A0, False, A1, A0, F(0))


def test_composite_predicate_matches_table(nonregular):
    t = nonregular
    c = t.instance.codim
    for a in range(0, len(t), max(1, len(t) // 40)):
        for b in range(0, len(t), max(1, len(t) // 40)):
            got = X.composite_LstarRstar(t, a, b)
            want = X.lstar_rstar_composite(
                int(t.rank[a]), bool(t.q_mask[b]), int(t.rank[b]), int(t.rank_B[b]), c
            )
            assert got == want


def test_single_point_B_is_regular():
    t = enumerate_semigroup(SetModel(3, (2,)))
    assert len(X.rel_Dstar(t)) == 1


def test_Dtilde_on_full_transformation_monoid():
    from restricted_range import oracle as O

    t = table_for("set_3_3")
    assert X.rel_Dtilde_Jtilde(t) == O.oracle_Dtilde(t) == G.rel_D(t)
