from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import C2, field_elems, gaussian, sym_zero, to_sympy
from hitchin3.errors import DivisionByZero
from hitchin3.field import (
    ALPHA,
    I,
    ONE,
    ZERO,
    FieldElem,
    GaussianRational,
    field_add,
    field_cbrt,
    field_inv,
    field_mul,
    gaussian_cbrt,
    two_pow_third,
)


def test_defining_relations():
    assert ALPHA**3 == 2
    assert ALPHA**4 == 2 * ALPHA
    assert I * I == -1
    assert (ALPHA / 4) ** 3 == Fraction(1, 32)


def test_negative_power_of_alpha():
    # 2^(-1/3) = alpha^2 / 2
    assert ALPHA ** -1 == FieldElem(0, 0, Fraction(1, 2))
    assert two_pow_third(-5) == ALPHA / 4
    assert two_pow_third(2) == ALPHA**2


@settings(max_examples=40)
@given(field_elems(), field_elems())
def test_mul_matches_sympy(a, b):
    assert sym_zero(to_sympy(field_mul(a, b)) - to_sympy(a) * to_sympy(b))
    assert sym_zero(to_sympy(field_add(a, b)) - to_sympy(a) - to_sympy(b))


@given(field_elems(), field_elems(), field_elems())
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@settings(max_examples=40)
@given(field_elems(nonzero=True))
def test_inverse(a):
    assert a * field_inv(a) == ONE
    assert sym_zero(to_sympy(field_inv(a)) * to_sympy(a) - 1)


def test_inverse_of_zero_raises():
    with pytest.raises(DivisionByZero):
        field_inv(ZERO)
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


@given(gaussian(nonzero=True), st.integers(-4, 4), st.sampled_from([0, 1, 2]))
def test_cbrt_of_cube_of_monomial(g, m, j):
    x = FieldElem.coerce(g) * ALPHA**j * ALPHA**m
    root = field_cbrt(x**3)
    assert root is not None
    assert root**3 == x**3


@pytest.mark.parametrize(
    "value, root",
    [(8, 2), (2, ALPHA), (Fraction(1, 32), ALPHA / 4), (-27, -3), (I, -I), (0, 0)],
)
def test_cbrt_examples(value, root):
    assert field_cbrt(FieldElem.coerce(value)) == root


@pytest.mark.parametrize("value", [3, ALPHA, 1 + ALPHA, FieldElem(1, 1)])
def test_cbrt_missing(value):
    assert field_cbrt(FieldElem.coerce(value)) is None


def test_gaussian_cbrt_oracle():
    for a in range(-5, 6):
        for b in range(-5, 6):
            w = GaussianRational(a, b)
            r = gaussian_cbrt(w**3)
            assert r is not None and r**3 == w**3
    assert gaussian_cbrt(GaussianRational(2, 1)) is None


@pytest.mark.parametrize(
    "elem, text",
    [
        (ZERO, "0"),
        (FieldElem(Fraction(3, 4)), "3/4"),
        (FieldElem(0, Fraction(3, 4)), "(3/4)*c2"),
        (FieldElem(GaussianRational(1, -2)), "(1 - 2*i)"),
        (FieldElem(0, 0, GaussianRational(0, 1)), "(i)*c2^2"),
        (FieldElem(5, 0, -1), "5 + (-1)*c2^2"),
    ],
)
def test_render(elem, text):
    assert elem.render() == text


@settings(max_examples=50)
@given(field_elems())
def test_approx_matches_sympy(a):
    assert abs(a.approx() - complex(sympy.N(to_sympy(a), 20))) < 1e-9


def test_hash_consistent_with_int():
    assert hash(FieldElem(3)) == hash(3)
    assert {FieldElem(3): 1}[3] == 1
    assert C2**3 == 2
