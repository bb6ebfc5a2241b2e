from fractions import Fraction

import pytest

from stalg import ComplexScalar, EXACT, FLOAT, ModeMismatchError
from stalg.scalars import as_real, scalar_from_json, scalar_to_json


def test_exact_arithmetic_is_lossless():
    a = ComplexScalar.exact(Fraction(1, 3), Fraction(2, 7))
    b = ComplexScalar.exact(Fraction(1, 7), Fraction(-1, 3))
    total = (a + b) * 21
    assert total == ComplexScalar.exact(10, -1)
    back = total / 21 - b
    assert back == a


def test_exact_multiplication_and_division():
    i = ComplexScalar.i(EXACT)
    assert i * i == ComplexScalar.exact(-1)
    z = ComplexScalar.exact(3, 4)
    assert z * z.conjugate() == ComplexScalar.exact(25)
    assert z / z == ComplexScalar.exact(1)
    assert z.inverse() == ComplexScalar.exact(Fraction(3, 25), Fraction(-4, 25))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ComplexScalar.exact(0).inverse()


def test_conjugation_is_an_involution():
    z = ComplexScalar.exact(Fraction(-2, 5), Fraction(7, 3))
    assert z.conjugate().conjugate() == z
    assert ComplexScalar.exact(4).conjugate() == ComplexScalar.exact(4)


def test_mode_mixing_is_an_error():
    e = ComplexScalar.exact(1)
    f = ComplexScalar.floating(1.0)
    with pytest.raises(ModeMismatchError):
        e + f
    with pytest.raises(ModeMismatchError):
        e * f
    with pytest.raises(ModeMismatchError):
        e * 0.5  # float literal cannot enter exact mode
    with pytest.raises(ModeMismatchError):
        f * Fraction(1, 3)  # and a Fraction cannot silently become a float


def test_int_embeds_in_both_modes():
    assert ComplexScalar.exact(2) * 3 == ComplexScalar.exact(6)
    assert ComplexScalar.floating(2.0) * 3 == ComplexScalar.floating(6.0)


def test_as_real_parsing():
    assert as_real("3/5", EXACT) == Fraction(3, 5)
    assert as_real(4, EXACT) == Fraction(4)
    assert as_real("1/2", FLOAT) == 0.5
    with pytest.raises(ModeMismatchError):
        as_real(0.25, EXACT)


def test_json_round_trip_exact():
    z = ComplexScalar.exact(Fraction(-3, 7), Fraction(5, 1))
    pair = scalar_to_json(z)
    assert pair == ["-3/7", "5/1"]
    assert scalar_from_json(pair, EXACT) == z


def test_json_round_trip_float():
    z = ComplexScalar.floating(0.5, -2.25)
    pair = scalar_to_json(z)
    assert pair == [0.5, -2.25]
    assert scalar_from_json(pair, FLOAT) == z


def test_json_rejects_wrong_number_kind():
    with pytest.raises(ValueError):
        scalar_from_json([1, 2], EXACT)
    with pytest.raises(ValueError):
        scalar_from_json(["1/2", "0/1"], FLOAT)
