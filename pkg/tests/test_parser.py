from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import field_elems
from hitchin3.errors import ParseError
from hitchin3.field import ALPHA, FieldElem, I
from hitchin3.parser import parse_coeff


@pytest.mark.parametrize(
    "text, value",
    [
        ("3/4*c2", ALPHA * Fraction(3, 4)),
        ("i^2", -1),
        ("c2^3", 2),
        ("c2^-1", ALPHA**2 / 2),
        ("c2 ^ - 1", ALPHA**2 / 2),
        ("-i", -I),
        ("--2", 2),
        ("2 - -3", 5),
        ("(1 + i)^2", 2 * I),
        ("1/2*(c2 + c2^2)", (ALPHA + ALPHA**2) / 2),
        ("0", 0),
        ("2^-2", Fraction(1, 4)),
    ],
)
def test_examples(text, value):
    assert parse_coeff(text) == FieldElem.coerce(value)


def test_round_trip_thousand():
    import random

    rng = random.Random(12345)
    for _ in range(1000):
        parts = [
            Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(6)
        ]
        from hitchin3.field import GaussianRational

        x = FieldElem(*(GaussianRational(parts[2 * k], parts[2 * k + 1]) for k in range(3)))
        assert parse_coeff(x.render()) == x


@settings(max_examples=100)
@given(field_elems())
def test_round_trip_property(x):
    assert parse_coeff(x.render()) == x


@pytest.mark.parametrize(
    "text, offset, expected",
    [
        ("", 0, "integer"),
        ("1 +", 3, "integer"),
        ("(1", 2, ")"),
        ("1/0", 2, "positive integer"),
        ("3 4", 2, "end of input"),
        ("c3", 0, "c2"),
        ("é+1", 0, "c2"),
        ("1+é", 2, "c2"),
        ("2^x", 2, "integer"),
        ("0^-1", 2, "nonzero base"),
    ],
)
def test_errors(text, offset, expected):
    with pytest.raises(ParseError) as info:
        parse_coeff(text)
    assert info.value.offset == offset
    assert expected in info.value.expected


def test_error_offset_counts_bytes():
    with pytest.raises(ParseError) as info:
        parse_coeff("é é")
    assert info.value.offset == 0
    with pytest.raises(ParseError) as info:
        parse_coeff("(1 + 2) é")
    assert info.value.offset == 8
