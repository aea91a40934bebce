"""Shared strategies and the sympy oracle."""

from fractions import Fraction

import sympy
from hypothesis import settings
from hypothesis import strategies as st

from hitchin3.field import FieldElem, GaussianRational
from hitchin3.laurent import LaurentPoly

SMALL = st.fractions(min_value=-6, max_value=6, max_denominator=6)


@st.composite
def gaussian(draw, nonzero=False):
    g = GaussianRational(draw(SMALL), draw(SMALL))
    if nonzero and not g:
        g = GaussianRational(1)
    return g


@st.composite
def field_elems(draw, nonzero=False):
    x = FieldElem(draw(gaussian()), draw(gaussian()), draw(gaussian()))
    if nonzero and not x:
        x = FieldElem(1)
    return x


@st.composite
def laurent_polys(draw, lo=-3, hi=4, nonzero=False, max_terms=4):
    keys = draw(st.lists(st.integers(lo, hi), max_size=max_terms, unique=True))
    p = LaurentPoly({k: draw(field_elems()) for k in keys})
    if nonzero and not p:
        p = LaurentPoly({max(lo, 0): 1})
    return p


C2 = sympy.cbrt(2)


def to_sympy(x):
    """Independent symbolic image of a FieldElem or Fraction."""
    if isinstance(x, (int, Fraction)):
        return sympy.Rational(x.numerator, x.denominator)
    if isinstance(x, GaussianRational):
        return to_sympy(x.re) + sympy.I * to_sympy(x.im)
    return sum((to_sympy(g) * C2**k for k, g in enumerate(x.c)), sympy.Integer(0))


def poly_to_sympy(p, var):
    return sum((to_sympy(c) * var**k for k, c in p.terms.items()), sympy.Integer(0))


def sym_zero(expr) -> bool:
    return sympy.expand(expr) == 0


settings.register_profile("default", max_examples=50, deadline=None)
settings.load_profile("default")
