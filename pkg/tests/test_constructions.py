from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import field_elems
from hitchin3.constructions import (
    EXPECTED_DEGREES,
    SpecialConstruction,
    special_degrees,
    verify_special_construction,
)
from hitchin3.errors import MalformedInput
from hitchin3.field import ALPHA, I


@pytest.mark.parametrize("b", [1, 2])
def test_log_passes(b):
    log = verify_special_construction(b, 1)
    assert log.ok, log.failures()
    assert log["C(u1,u2) = i"].ok
    assert log["C(u3,u3) = -1"].ok


@settings(max_examples=10)
@given(field_elems(nonzero=True))
def test_random_a(a):
    for b in (1, 2):
        assert verify_special_construction(b, a).ok


def test_degrees():
    assert special_degrees(2)["E2"] == special_degrees(2)["E4"] == -1
    assert special_degrees(1)["E2"] == special_degrees(1)["E4"] == Fraction(-1, 2)
    for b in (1, 2):
        d = special_degrees(b)
        assert d["E"] == 0 and d["E1"] < 0 and d["E3"] < 0
        assert d["E2"] == EXPECTED_DEGREES[b]


def test_bad_arguments():
    with pytest.raises(MalformedInput):
        verify_special_construction(3, 1)
    with pytest.raises(MalformedInput):
        verify_special_construction(1, 0)


def test_tags():
    assert SpecialConstruction(2).tag == "SpecialConstruction(2)"
    assert SpecialConstruction(1, True).tag == "Symmetry(SpecialConstruction(1))"


def test_named_checks_present():
    names = verify_special_construction(2, ALPHA + I).names()
    assert any(n.startswith("psi(u1)") for n in names)
    assert "deg P_*E2 = -1" in names
