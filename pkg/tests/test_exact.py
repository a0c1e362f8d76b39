from fractions import Fraction

import pytest

from finegrad.errors import DivisionByZero
from finegrad.exact import GQ, I, ONE, format_scalar, gq_inv, gq_mul, parse_scalar, phase_ratio, unit_root


def test_products():
    assert gq_mul(ONE + I, ONE - I) == 2
    assert gq_mul(I, I) == -1
    assert gq_mul(Fraction(1, 2), Fraction(2, 3)) == Fraction(1, 3)


def test_inverses():
    assert gq_inv(I) == -I
    assert gq_inv(ONE + I) == GQ(Fraction(1, 2), Fraction(-1, 2))
    assert gq_inv(2) == Fraction(1, 2)
    with pytest.raises(DivisionByZero):
        gq_inv(0)


def test_phase_ratio():
    assert phase_ratio(ONE - I) == I
    assert phase_ratio(1) == 1
    assert phase_ratio(I) == -1
    with pytest.raises(DivisionByZero):
        phase_ratio(0)


@pytest.mark.parametrize("z", [ONE, -ONE, I, -I, GQ(Fraction(3, 5), Fraction(4, 5))])
def test_unit_root_inverts_phase_ratio(z):
    assert phase_ratio(unit_root(z)) == z


def test_unit_root_table():
    assert [unit_root(z) for z in (1, -1, I, -I)] == [ONE, I, ONE - I, ONE + I]
    with pytest.raises(ValueError):
        unit_root(2)


@pytest.mark.parametrize("text", ["0", "-3", "1/2", "i", "-i", "2/3*i", "1+i", "1/2-1/2*i", "-3-4*i"])
def test_scalar_round_trip(text):
    z = parse_scalar(text)
    assert parse_scalar(format_scalar(z)) == z


def test_parse_values():
    assert parse_scalar("1/2-1/2*i") == GQ(Fraction(1, 2), Fraction(-1, 2))
    assert parse_scalar("-3*i") == GQ(0, -3)
    with pytest.raises(ValueError):
        parse_scalar("1+")


def test_real_values_hash_like_fractions():
    assert hash(GQ(Fraction(1, 3))) == hash(Fraction(1, 3))
    assert GQ(2) == 2 and GQ(0, 1) != 1


def test_conj_norm():
    z = GQ(3, -4)
    assert z.conj() == GQ(3, 4)
    assert z.norm() == 25
    assert (z * z.conj()).is_real()


def test_format_unit_imaginary():
    assert format_scalar(I) == "i"
    assert format_scalar(GQ(1, -1)) == "1-i"
    assert format_scalar(GQ(0, -2)) == "-2*i"
