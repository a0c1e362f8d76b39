import pytest

from finegrad.abelian import AbelianGroup, det, invariant_factors, isomorphic, quotient_by_relations, smith_normal_form


def _mul(p, q):
    return [[sum(p[i][k] * q[k][j] for k in range(len(q))) for j in range(len(q[0]))] for i in range(len(p))]


@pytest.mark.parametrize("m, diag", [
    ([[2, 0], [0, 3]], [1, 6]),
    ([[0, 0], [0, 0]], [0, 0]),
    ([[1, 0], [0, 1]], [1, 1]),
    ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], [2, 6, 12]),
])
def test_smith_normal_form(m, diag):
    u, d, v = smith_normal_form(m)
    assert _mul(_mul(u, m), v) == d
    assert [d[k][k] for k in range(len(diag))] == diag
    assert abs(det(u)) == 1 and abs(det(v)) == 1


def test_quotients():
    g, images = quotient_by_relations(2, [[4, 0], [0, 4]])
    assert str(g) == "Z_4^2"
    assert images[0] != images[1] and not images[0].is_zero()
    g, _ = quotient_by_relations(3, [])
    assert str(g) == "Z^3"
    g, images = quotient_by_relations(2, [[1, -1]])
    assert str(g) == "Z" and images[0] == images[1]


def test_isomorphism():
    assert isomorphic("Z_2^5", AbelianGroup.from_cyclic(0, (2, 2, 2, 2, 2)))
    assert isomorphic("Z x Z_2^2", AbelianGroup.from_cyclic(1, (2, 2)))
    assert not isomorphic("Z_4", "Z_2^2")
    assert isomorphic(AbelianGroup.from_cyclic(0, (4, 2, 3)), "Z_2 x Z_12")


def test_parse_and_render():
    for text in ("Z^3", "Z_4^2", "Z_2^4", "Z x Z_2^2", "Z^2 x Z_2", "Z x Z_2^3", "Z_2^5", "Z_2^2 x Z_4"):
        assert AbelianGroup.parse(text) == AbelianGroup.parse(str(AbelianGroup.parse(text)))
    assert AbelianGroup.parse("Z4xZ2^2") == AbelianGroup.parse("Z_4 x Z_2^2")
    assert AbelianGroup.parse("Z_4 x Z_2^2").order == 16
    assert invariant_factors([4, 6]) == (2, 12)


def test_group_element_arithmetic():
    g, images = quotient_by_relations(2, [[4, 0], [0, 4]])
    x = images[0]
    assert (x + x + x + x).is_zero()
    assert (x - x).is_zero()
