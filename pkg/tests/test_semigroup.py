import numpy as np
import pytest

from restricted_range import endo as E
from restricted_range import semigroup as SG
from restricted_range.algebra import SetModel, VecModel
from restricted_range.errors import SizeLimitError
from conftest import table_of


def test_eight_element_example(s32):
    assert len(s32) == 8
    assert int(s32.q_mask.sum()) == 6


def test_vector_example(v221):
    assert len(v221) == 4 and int(v221.q_mask.sum()) == 3
    outside = [E.label(a) for a, q in zip(v221.elements, v221.q_mask) if not q]
    assert outside == ["[[0,0],[1,0]]"]


def test_enumeration_is_lexicographic(s32):
    assert [a.data for a in s32.elements] == sorted(a.data for a in s32.elements)


@pytest.mark.parametrize(
    "inst,count",
    [(SetModel(4, (0, 1)), 16), (SetModel(5, (2, 3, 4)), 243), (VecModel(2, 3, ((1, 0, 0), (0, 1, 0))), 64), (VecModel(3, 2, ((1, 0),)), 9)],
)
def test_element_counts(inst, count):
    assert SG.count_elements(inst) == count == len(table_of(inst))


def test_cap_reports_exact_count():
    with pytest.raises(SizeLimitError) as exc:
        SG.enumerate_semigroup(SetModel(5, (2, 3, 4)), cap=200)
    assert exc.value.count == 243 and exc.value.cap == 200


def test_product_table_matches_composition(any_table):
    t = any_table
    rng = np.random.default_rng(0)
    for i, j in rng.integers(0, len(t), size=(200, 2)):
        assert t.elements[t.product[i, j]] == E.compose(t.elements[i], t.elements[j])


def test_associativity(any_table):
    t = any_table
    if len(t) <= 100:
        assert SG.is_associative(t)
    else:
        assert SG.is_associative(t, samples=100_000)


def test_masks_match_per_element_predicates(any_table):
    t = any_table
    assert [E.is_regular_Q(a) for a in t.elements] == t.q_mask.tolist()
    assert [E.is_idempotent(a) for a in t.elements] == t.idem_mask.tolist()


def test_virtual_identity(s32):
    one = s32.one
    assert s32.mul(one, 3) == 3 and s32.mul(5, one) == 5 and s32.mul(one, one) == one


@pytest.mark.parametrize(
    "inst,monoid,regular",
    [
        (SetModel(3, (0, 1, 2)), True, True),
        (SetModel(4, (0,)), True, True),
        (SetModel(3, (0, 1)), False, False),
        (SetModel(3, (1,)), True, True),
        (VecModel(2, 2, ((1, 0),)), False, False),
        (VecModel(2, 2, ()), True, True),
        (VecModel(2, 2, ((1, 0), (0, 1))), True, True),
    ],
)
def test_classification_examples(inst, monoid, regular):
    c = SG.classify_instance(inst)
    assert (c.monoid, c.regular, c.standing_assumptions) == (monoid, regular, not regular)


def test_single_point_range_is_monoid():
    # |B| = 1 gives a single constant map, which is trivially a monoid
    c = SG.classify_instance(SetModel(4, (3,)))
    assert c.instance_class == "Monoid"


def test_classification_matches_table(any_table):
    t = any_table
    assert (SG.identity_element(t) is not None) == t.classification.monoid
    assert bool(SG.regular_mask(t).all()) == t.classification.regular


def test_three_definitions_of_Q(any_table):
    t = any_table
    for mask in (SG.regular_mask(t), SG.left_identity_mask(t), SG.idempotent_left_identity_mask(t), SG.values_q_mask(t)):
        assert np.array_equal(mask, t.q_mask)


def test_Q_structure(nonregular):
    rep = SG.check_Q_structure(nonregular)
    assert rep.passed
    assert rep.left_ideal_failure is not None
    lam, beta = rep.left_ideal_failure
    assert nonregular.q_mask[beta] and not nonregular.q_mask[nonregular.product[lam, beta]]


def test_no_inner_inverse_outside_Q(s32):
    b = s32.index_of(E.Endo(s32.instance, (0, 0, 1)))
    assert not any(s32.product[s32.product[b, g], b] == b for g in range(8))


def test_left_ideal_failure_on_four_points():
    t = table_of(SetModel(4, (0, 1)))
    assert SG.check_Q_structure(t).left_ideal_failure is not None


def test_product_regularity_criterion(nonregular):
    assert SG.check_product_regularity(nonregular) == []


def test_product_regularity_example(s32):
    a = s32.index_of(E.Endo(s32.instance, (0, 1, 1)))
    b = s32.index_of(E.Endo(s32.instance, (0, 0, 1)))
    assert SG.product_regularity_criterion(s32, a, b)
    assert s32.elements[s32.product[a, b]].data == (0, 0, 0)
    for i in np.flatnonzero(s32.idem_mask & s32.q_mask):
        assert SG.product_regularity_criterion(s32, i, i)


def test_table_json(s32):
    data = s32.to_json()
    assert data["schema"] == "restricted-range/1"
    assert data["size"] == 8 and sum(data["q_mask"]) == 6
    assert data["classification"]["instance_class"] == "NonRegular"
