import pytest

from finegrad.displayed import (
    certify_nongroup_refinement,
    displayed_subgrading,
    form_subalgebra,
    out_k_sign,
    split_part,
)
from finegrad.errors import NotInvariant, PartSplitByForm
from finegrad.gradings import is_refinement
from finegrad.mat import I4, E, Mat4
from finegrad.subspace import Subspace


@pytest.mark.parametrize("grading, k, expected", [
    ("gamma5", "J", {"L14", "L2", "L11", "L3", "L10", "L9", "L5", "L12", "L8"}),
    ("gamma3", "K1", {"L2", "L4", "L6", "L8", "L10", "L12"}),
    ("gamma6", "K3", {"L1", "L2", "L10", "L4", "L5", "L12"}),
])
def test_examples(cat, grading, k, expected):
    sub = displayed_subgrading(cat.grading(grading).grading(), cat.matrices[k])
    assert set(sub.labels) == expected


def test_all_rows(cat):
    for d in cat.displayed:
        sub = displayed_subgrading(cat.grading(d.grading).grading(), d.k)
        assert set(sub.labels) == set(d.selected_parts)
        assert sum(sub.dims) == {"sp": 10, "o": 6}[d.algebra] == form_subalgebra(d.k).dim


def test_part_not_invariant(cat):
    g1 = cat.grading("gamma1").grading()
    k = Mat4.from_rows([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    with pytest.raises(NotInvariant):
        displayed_subgrading(g1, k)


def test_part_split_by_form():
    mixed = Subspace([E(1, 2) - E(2, 1), E(1, 4) + E(4, 1)])
    with pytest.raises(PartSplitByForm) as err:
        out_k_sign(mixed, I4)
    assert err.value.part == 1
    assert out_k_sign(Subspace([E(1, 2) - E(2, 1)]), I4) == 1


def test_nongroup_refinement(cat):
    rep = certify_nongroup_refinement(cat)
    assert rep.ok
    assert rep.details["coarse_is_group_grading"] and not rep.details["fine_is_group_grading"]
    assert rep.details["shared_images"] == [("L14^1", "L14^2")]


def test_split_is_refinement(cat):
    coarse = displayed_subgrading(cat.grading("gamma5").grading(), cat.matrices["K3"])
    assert is_refinement(split_part(coarse, "L14"), coarse)
