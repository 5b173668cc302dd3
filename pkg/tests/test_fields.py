from fractions import Fraction

import pytest

from slackmat import GF, QQ, FieldError, parse_field


def test_rational_coercion():
    assert QQ.coerce("3/4") == Fraction(3, 4)
    assert QQ.coerce(Fraction(4, 2)) == 2
    assert isinstance(QQ.coerce(Fraction(4, 2)), int)
    assert QQ.inv(Fraction(2, 3)) == Fraction(3, 2)
    assert QQ.inv(2) == Fraction(1, 2)


def test_gf_basics():
    F = GF(7)
    assert F.add(5, 4) == 2
    assert F.sub(1, 5) == 3
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.neg(0) == 0
    assert F.coerce(Fraction(1, 2)) == 4  # 2*4 = 1 mod 7


def test_gf_rejects_nonprime_and_big():
    with pytest.raises(FieldError):
        GF(6)
    with pytest.raises(FieldError):
        GF((1 << 31) + 11)
    GF(2147483647)  # largest signed-32 prime is fine


def test_parse_field():
    assert parse_field("Q") is QQ
    assert parse_field("GF(5)").char == 5
    with pytest.raises(FieldError):
        parse_field("R")


def test_inv_zero_raises():
    with pytest.raises(ZeroDivisionError):
        QQ.inv(0)
    with pytest.raises(ZeroDivisionError):
        GF(5).inv(0)
