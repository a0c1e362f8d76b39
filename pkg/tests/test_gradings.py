import pytest

from finegrad.abelian import isomorphic
from finegrad.errors import CollidingLabels, NotAGrading
from finegrad.gradings import (
    Grading,
    Into,
    Zero,
    eigenlabel_certificate,
    is_refinement,
    product_table,
    universal_group_of,
    verify_direct_sum,
)
from finegrad.maps import Automorphism
from finegrad.mat import E, Mat4, bracket
from finegrad.subspace import Subspace, sl4

CLAIMS = {
    "gamma1": "Z^3", "gamma2": "Z_4^2", "gamma3": "Z_2^4", "gamma4": "Z x Z_2^2",
    "gamma5": "Z^2 x Z_2", "gamma6": "Z x Z_2^3", "gamma7": "Z_2^5", "gamma8": "Z_4 x Z_2^2",
}


@pytest.mark.parametrize("name", sorted(CLAIMS))
def test_grading_certificates(cat, name):
    spec = cat.grading(name)
    g = spec.grading()
    assert verify_direct_sum(g).ok and sum(g.dims) == 15
    table = product_table(g)
    eigenlabel_certificate(g, cat.mad(spec.mad).generators())
    u = universal_group_of(g, table)
    assert isomorphic(u.group, CLAIMS[name]) and u.is_group_grading


def test_part_dimensions(cat):
    assert cat.grading("gamma1").grading().dims == [1] * 12 + [3]
    assert cat.grading("gamma2").grading().dims == [1] * 15
    assert sorted(cat.grading("gamma5").grading().dims) == [1] * 13 + [2]


def test_corrupted_direct_sum(cat):
    g = cat.grading("gamma1").grading()
    parts = list(g.parts)
    parts[1] = Subspace([parts[0].basis[0]])
    bad = Grading(g.parent, parts, "bad")
    assert not verify_direct_sum(bad).ok


def test_product_table_entries(cat):
    g1 = cat.grading("gamma1").grading()
    j = next(k for k, p in enumerate(g1.parts) if p.contains(E(1, 2)))
    k = next(k for k, p in enumerate(g1.parts) if p.contains(E(2, 3)))
    m = next(k for k, p in enumerate(g1.parts) if p.contains(E(1, 3)))
    assert product_table(g1)[j, k] == Into(m)
    g7 = cat.grading("gamma7").grading()
    assert product_table(g7)[12, 12] is Zero()
    g2 = cat.grading("gamma2").grading()
    t = product_table(g2)
    x3, x4 = g2.part("L3").basis[0], g2.part("L4").basis[0]
    target = t[2, 3]
    assert isinstance(target, Into) and g2.parts[target.m].contains(bracket(x3, x4))


def test_not_a_grading():
    g = Grading(sl4(), [Subspace([E(1, 2)]), Subspace([E(2, 1)]), Subspace([E(1, 1) - E(2, 2) + E(1, 3)])])
    with pytest.raises(NotAGrading):
        product_table(g)


def test_colliding_labels(cat):
    g1 = cat.grading("gamma1").grading()
    with pytest.raises(CollidingLabels):
        eigenlabel_certificate(g1, [Automorphism.inner(Mat4.diag(2, 1, 1, 1))])


def test_eigenlabels_gamma2(cat):
    g2 = cat.grading("gamma2").grading()
    rep = eigenlabel_certificate(g2, cat.mad("g2").generators())
    assert len(set(map(tuple, rep.details["labels"].values()))) == 15


def test_refinement(cat):
    g1 = cat.grading("gamma1").grading()
    g2 = cat.grading("gamma2").grading()
    assert is_refinement(g1, g1)
    assert not is_refinement(g2, g1)
