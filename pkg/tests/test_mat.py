from fractions import Fraction

import pytest

from finegrad.errors import NotHermitian, SingularMatrix
from finegrad.exact import GQ, I
from finegrad.mat import I4, SIGMA, E, Mat2, Mat4, Signature, bracket, dagger, format_matrix, parse_matrix, signature, tensor


def test_bracket_examples():
    assert bracket(E(1, 2), E(2, 3)) == E(1, 3)
    assert bracket(E(1, 1) - E(2, 2), E(1, 2)) == E(1, 2) * 2


def test_pauli_pair_relations(cat):
    p, q = cat.matrices["P"], cat.matrices["Q"]
    # Q P = -i P Q, hence [P, Q] = (1+i) P Q
    assert q @ p == (p @ q) * (-I)
    assert bracket(p, q) == (p @ q) * (1 + I)
    assert not bracket(p, q).is_zero()
    assert q.inverse() @ p @ q == p * I


def test_tensor_examples():
    s0, s1, s2, s3 = SIGMA
    assert tensor(s0, s0) == I4
    assert tensor(s1, s0) == Mat4.from_rows([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
    assert tensor(s3, s3) == Mat4.diag(1, -1, -1, 1)
    assert s2 == s1 @ s3


def test_dagger(cat):
    assert dagger(I4 * I) == I4 * (-I)
    assert dagger(E(1, 2)) == E(2, 1)
    e = cat.matrices["E22_4"]
    assert dagger(e) == e


def test_signatures(cat):
    assert signature(I4) == Signature(4, 0, 0)
    assert signature(Mat4.diag(1, 1, -1, -1)) == Signature(2, 0, 2)
    assert signature(cat.matrices["E31_3"]) == Signature(3, 0, 1)
    assert signature(Mat4.diag(1, 0, 0, -2)) == Signature(1, 2, 1)
    # zero diagonal: needs a hyperbolic pivot
    assert signature(E(1, 2) + E(2, 1) + E(3, 4) + E(4, 3)) == Signature(2, 0, 2)
    with pytest.raises(NotHermitian):
        signature(E(1, 2))


def test_inverse_and_det():
    m = Mat4.from_rows([[1, 2, 0, 0], [0, 1, 0, 0], [0, 0, I, 0], [0, 0, 0, 2]])
    assert m @ m.inverse() == I4
    assert m.det() == 2 * I
    with pytest.raises(SingularMatrix):
        E(1, 1).inverse()


def test_powers_and_scaling():
    m = Mat4.diag(2, 1, 1, Fraction(1, 2))
    assert m ** -1 == m.inverse()
    assert m ** 0 == I4
    assert (I4 * 3).proportional_to(I4) == 3
    assert E(1, 2).proportional_to(E(2, 1)) is None
    assert (E(1, 2) * (2 * I)).normalized() == E(1, 2)


def test_parse_format_round_trip():
    text = "1 0 0 1/2*i; 0 -1 0 0; 0 0 1+i 0; 0 0 0 -1-i"
    m = parse_matrix(text)
    assert parse_matrix(format_matrix(m)) == m
    assert Mat2.from_rows([[1, 2], [3, 4]]).det() == -2


def test_immutable():
    with pytest.raises(AttributeError):
        I4._e = ()
