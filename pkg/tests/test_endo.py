import numpy as np
import pytest

from restricted_range import endo as E
from restricted_range.algebra import SetModel, VecModel
from restricted_range.errors import MalformedInputError

S3 = SetModel(3, (0, 1))
V2 = VecModel(2, 2, ((1, 0),))


def m(*img):
    return E.Endo(S3, img)


def vrows(*rows):
    return E.Endo(V2, rows)


def test_compose_examples():
    assert E.compose(m(0, 0, 1), m(1, 1, 0)) == m(1, 1, 1)
    assert E.compose(vrows((1, 0), (0, 0)), vrows((1, 0), (1, 0))) == vrows((1, 0), (0, 0))
    for a in [m(0, 0, 1), m(1, 0, 1)]:
        assert E.compose(a, E.constant_map(S3, 1)) == E.constant_map(S3, 1)


def test_compose_acts_on_the_right():
    a, b = m(0, 0, 1), m(1, 1, 0)
    ab = E.compose(a, b)
    assert all(E.apply(ab, x) == E.apply(b, E.apply(a, x)) for x in range(3))


def test_compose_rejects_mixed_instances():
    with pytest.raises(MalformedInputError):
        E.compose(m(0, 0, 1), E.Endo(SetModel(3, (0, 2)), (0, 0, 2)))


def test_construction_rejects_image_outside_B():
    with pytest.raises(MalformedInputError):
        m(0, 2, 1)
    with pytest.raises(MalformedInputError):
        vrows((0, 1), (0, 0))


def test_image_examples():
    a = m(0, 0, 1)
    assert E.image(a).canon == (0, 1) and E.image_on_B(a).canon == (0,)
    b = m(0, 1, 1)
    assert E.image(b) == E.image_on_B(b)
    c = vrows((0, 0), (1, 0))
    assert E.image(c).dim == 1 and E.image_on_B(c).dim == 0


def test_kernel_examples():
    a = m(0, 0, 1)
    assert E.kernel(a).canon == ((0, 1), (2,))
    assert E.kernel_on_B(a).canon == ((0, 1),)
    assert E.kernel(E.constant_map(S3, 0)).canon == ((0, 1, 2),)
    c = vrows((1, 0), (1, 0))
    assert E.kernel(c).canon == ((1, 1),)
    assert E.kernel_on_B(c).canon == ()


def test_regular_Q_examples():
    assert not E.is_regular_Q(m(0, 0, 1))
    assert E.is_regular_Q(m(0, 1, 1))
    assert E.is_regular_Q(E.constant_map(S3, 1))
    assert not E.is_regular_Q(vrows((0, 0), (1, 0)))


def test_rank_and_idempotent_examples():
    a = m(0, 1, 0)
    assert (E.rank(a).value, E.rank_on_B(a).value, E.is_idempotent(a)) == (2, 2, True)
    z = E.zero_map(V2)
    assert E.rank(z).value == 0 and E.is_idempotent(z)
    b = m(1, 1, 0)
    assert (E.rank(b).value, E.rank_on_B(b).value, E.is_idempotent(b)) == (2, 1, False)


def test_from_basis_images_uses_the_given_basis():
    a = E.from_basis_images(V2, [(1, 1), (1, 0)], [(1, 0), (0, 0)])
    assert E.apply(a, (1, 1)) == (1, 0) and E.apply(a, (1, 0)) == (0, 0)


def test_json_roundtrip_and_labels():
    a, c = m(0, 0, 1), vrows((1, 0), (0, 0))
    assert E.endo_from_json(S3, a.to_json()) == a
    assert E.endo_from_json(V2, c.to_json()) == c
    assert E.label(a) == "(0,0,1)" and E.label(c) == "[[1,0],[0,0]]"
    with pytest.raises(MalformedInputError):
        E.endo_from_json(S3, {"rows": [[0]]})


def test_rank_inequality_on_all_products(any_table):
    t = any_table
    assert np.all(t.rank[t.product] <= np.minimum(t.rank[:, None], t.rank[None, :]))


def test_outside_Q_rank_drops_on_B(any_table):
    t = any_table
    out = ~t.q_mask
    assert np.all(t.rank_B[out] < t.rank[out])


def test_idempotents_lie_in_Q(any_table):
    assert np.all(any_table.q_mask[any_table.idem_mask])


def test_kernel_and_image_under_composition(nonregular):
    t = nonregular
    rng = np.random.default_rng(1)
    inst = t.instance
    for i, j in rng.integers(0, len(t), size=(300, 2)):
        a, b = t.elements[i], t.elements[j]
        ab = t.elements[t.product[i, j]]
        assert E.kernel_contained(a, ab)
        assert all(inst.contains(E.image(b), y) for y in E.image(ab).canon)
