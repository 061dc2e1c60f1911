import pytest

from restricted_range import endo as E
from restricted_range import ideals as I
from restricted_range import oracle as O
from restricted_range.algebra import Cardinal, SetModel
from restricted_range.errors import PreconditionError
from restricted_range.semigroup import enumerate_semigroup

from conftest import table_for


def idx(t, *img):
    return t.index_of(E.Endo(t.instance, img))


def test_rank_ideals(s32):
    assert len(I.T_k(s32, 2)) == 2
    assert len(I.T_k(s32, Cardinal.finite(3))) == 8
    assert I.Q_r(s32, 2) == I.T_k(s32, 2)
    with pytest.raises(PreconditionError):
        I.T_k(s32, Cardinal.aleph(0))


def test_r_of_S(s32):
    assert I.r_of_S(s32, [idx(s32, 0, 0, 1)]) == Cardinal.finite(2)
    assert I.r_of_S(s32, [idx(s32, 0, 1, 1)]) == Cardinal.finite(3)
    with pytest.raises(PreconditionError):
        I.r_of_S(s32, [])


def test_K_of_S(s32):
    K = I.K_of_S(s32, [idx(s32, 0, 0, 1)])
    assert sorted(s32.elements[x].data for x in K) == [(0, 0, 0), (0, 0, 1), (1, 1, 0), (1, 1, 1)]


def test_K_routes_agree(nonregular):
    t = nonregular
    for a in range(0, len(t), max(1, len(t) // 25)):
        assert I.K_of_S(t, [a]) == I.K_of_S_products(t, [a])
    assert I.K_of_S_products(t, []) == ()


def test_theorem_forms_on_eight_elements(s32):
    ideals = O.oracle_ideals(s32)
    checks = [I.theorem_form_check(s32, i) for i in ideals]
    assert all(c.passed for c in checks)
    assert checks[1].matches[0].S_choice == "I\\Q"
    with pytest.raises(PreconditionError):
        I.theorem_form_check(s32, [0])


@pytest.mark.parametrize("name", ["set_4_2", "set_4_3", "vec_2_2_1", "vec_2_3_1", "vec_3_2_1"])
def test_theorem_forms_on_corpus(name):
    t = table_for(name)
    for ideal in O.oracle_ideals(t, max_principal=16):
        assert I.theorem_form_check(t, ideal).passed, ideal


def test_form_ideal_descriptor(s32):
    d = I.form_ideal(s32, [idx(s32, 0, 0, 1)], successor=True)
    assert len(d.extension) == 8
    assert d.to_json()["successor"] is True
    assert "r(S)+" in d.describe()


def test_Q_chain(nonregular):
    chain = I.Q_ideal_chain(nonregular)
    assert I.is_chain([c.extension for c in chain])
    assert all(c.kind == "Q" for c in chain)


def test_incomparable_pair_set_4_2():
    t = enumerate_semigroup(SetModel(4, (2, 3)))
    pair = I.incomparable_pair(t)
    a, b = set(pair.I_alpha.extension), set(pair.I_beta.extension)
    assert not a <= b and not b <= a
    assert O.is_ideal(t, a) and O.is_ideal(t, b)
    assert pair.to_json()["alpha"]


def test_incomparable_pair_not_applicable(s32):
    res = I.incomparable_pair(s32)
    assert isinstance(res, I.NotApplicable) and not res
    assert I.is_chain(O.oracle_ideals(s32))


def test_incomparable_pair_vectors():
    res = I.incomparable_pair(table_for("vec_2_3_1"))
    a, b = set(res.I_alpha.extension), set(res.I_beta.extension)
    assert not a <= b and not b <= a
    assert not I.incomparable_pair(table_for("vec_3_2_1"))


def test_hasse_and_dot(s32):
    ideals = O.oracle_ideals(s32)
    assert I.hasse_edges(ideals) == [(0, 1), (1, 2)]
    dot = I.lattice_dot(ideals)
    assert dot.startswith("digraph") and "i0 -> i1" in dot
