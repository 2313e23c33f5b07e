"""Tests for exact scalars: rationals, prime fields and their serialized forms."""

from fractions import Fraction

import pytest

from hopfkit.exceptions import AlgebraFileError, FieldMismatchError
from hopfkit.field import QQ, PrimeField, Residue, field_from_tag, format_scalar, parse_field_option

pytestmark = pytest.mark.fast


def test_rational_parse_and_format() -> None:
    assert QQ.parse("3/4") == Fraction(3, 4)
    assert QQ.parse(" -6/8 ") == Fraction(-3, 4)
    assert QQ.parse(5) == Fraction(5)
    assert QQ.format(Fraction(3, 4)) == "3/4"
    assert QQ.format(Fraction(2)) == "2/1"


@pytest.mark.parametrize("token", ["1/0", "one half", "0.5", "1e3", True, 0.5, None])
def test_rational_parse_rejects(token: object) -> None:
    with pytest.raises(AlgebraFileError):
        QQ.parse(token)


def test_rationals_refuse_floats() -> None:
    with pytest.raises(FieldMismatchError):
        QQ.element(1.5)


def test_prime_field_arithmetic() -> None:
    F = PrimeField(5)
    assert F.parse(7) == Residue(2, 5)
    assert F.parse("1/2") == Residue(3, 5)
    assert F.format(F.parse(-1)) == 4
    assert Residue(3, 5) * Residue(2, 5) == Residue(1, 5)
    assert Residue(3, 5).inverse() == Residue(2, 5)
    assert Residue(4, 5) + 1 == 0
    assert 1 - Residue(3, 5) == Residue(3, 5)
    assert Residue(2, 5) ** -1 == Residue(3, 5)
    assert not Residue(5, 5)


def test_prime_field_rejects_composites_and_mixing() -> None:
    with pytest.raises(ValueError):
        PrimeField(9)
    with pytest.raises(ValueError):
        PrimeField(1)
    with pytest.raises(FieldMismatchError):
        Residue(2, 5) + Residue(1, 7)
    with pytest.raises(FieldMismatchError):
        QQ.element(Residue(1, 3))
    with pytest.raises(ZeroDivisionError):
        PrimeField(3).element(Fraction(1, 3))
    with pytest.raises(ZeroDivisionError):
        Residue(0, 7).inverse()


def test_field_tags() -> None:
    assert field_from_tag({"kind": "rational"}) == QQ
    assert field_from_tag({"kind": "prime", "p": 7}) == PrimeField(7)
    assert PrimeField(7).tag == {"kind": "prime", "p": 7}
    assert PrimeField(7).characteristic == 7
    assert QQ.characteristic == 0
    assert PrimeField(3) != QQ
    for bad in ({"kind": "real"}, {"kind": "prime", "p": 9}, {"kind": "prime"}, "rational"):
        with pytest.raises(AlgebraFileError):
            field_from_tag(bad)


def test_field_option() -> None:
    assert parse_field_option("rational") == QQ
    assert parse_field_option("prime:3") == PrimeField(3)
    for bad in ("prime:4", "prime:x", "complex"):
        with pytest.raises(ValueError):
            parse_field_option(bad)


def test_format_scalar() -> None:
    assert format_scalar(Fraction(1, 2)) == "1/2"
    assert format_scalar(3) == "3/1"
    assert format_scalar(Residue(4, 5)) == 4


def test_identity_and_zeros() -> None:
    F = PrimeField(3)
    eye = F.identity(2)
    assert eye[0, 0] == Residue(1, 3) and eye[0, 1] == Residue(0, 3)
    assert F.zeros((2, 3)).shape == (2, 3)
    assert all(x == 0 for x in QQ.zeros((4,)))
