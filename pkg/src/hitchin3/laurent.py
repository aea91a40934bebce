"""Sparse Laurent polynomials over Q(i, 2^(1/3)).

A :class:`LaurentPoly` is an immutable map ``exponent -> nonzero FieldElem``.
Orders at 0 and infinity are read straight off the exponent range; nothing
here ever factors or finds roots.
"""

from __future__ import annotations

import math
from enum import Enum

from .errors import DivisionByZero, ZeroPolynomial
from .field import ONE as F_ONE
from .field import FieldElem, field_cbrt
from .surface import SurfaceKind

__all__ = [
    "NEG_INF",
    "LaurentPoly",
    "RationalFunction",
    "ArithOp",
    "lp_arith",
    "lp_ord_low",
    "lp_deg_high",
    "lp_cbrt",
    "lp_zero_count",
    "lp_invert",
    "z",
]

NEG_INF = -math.inf


class LaurentPoly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for k, v in (terms or {}).items():
            v = FieldElem.coerce(v)
            if v:
                clean[int(k)] = v
        self.terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def coerce(cls, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        return cls({0: FieldElem.coerce(x)})

    @classmethod
    def monomial(cls, coeff, exponent: int) -> LaurentPoly:
        return cls({exponent: coeff})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def ord_low(self):
        return min(self.terms) if self.terms else NEG_INF

    def deg_high(self):
        return max(self.terms) if self.terms else NEG_INF

    def coeff(self, k: int) -> FieldElem:
        return self.terms.get(k, FieldElem(0))

    def leading(self) -> FieldElem:
        return self.terms[max(self.terms)]

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    def __eq__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self.terms.items()))
        return self._hash

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return LaurentPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[int, FieldElem] = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                k = i + j
                out[k] = out[k] + a * b if k in out else a * b
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (k, c), = self.terms.items()
            return LaurentPoly({-k * (-n): c ** n})
        result, base = LaurentPoly({0: F_ONE}), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by z^k."""
        return LaurentPoly({e + k: v for e, v in self.terms.items()})

    def scale(self, c) -> LaurentPoly:
        c = FieldElem.coerce(c)
        return LaurentPoly({e: v * c for e, v in self.terms.items()})

    def div_monomial(self, other: LaurentPoly) -> LaurentPoly:
        if not other.is_monomial():
            raise ValueError("exact division only by monomials")
        (k, c), = other.terms.items()
        inv = c.inverse()
        return LaurentPoly({e - k: v * inv for e, v in self.terms.items()})

    def term_list(self) -> list[list]:
        """``[[exponent, coeff text], ...]`` in ascending exponent order."""
        return [[k, v.render()] for k, v in self.terms.items()]

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = f"({self.terms[k].render()})"
            if k == 0:
                parts.append(c)
            elif k == 1:
                parts.append(f"{c}*z")
            else:
                parts.append(f"{c}*z^{k}")
        return " + ".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LaurentPoly({self.render()})"


z = LaurentPoly({1: 1})


class ArithOp(Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"


def lp_arith(a: LaurentPoly, b: LaurentPoly, op) -> LaurentPoly:
    op = ArithOp(op) if not isinstance(op, ArithOp) else op
    if op is ArithOp.ADD:
        return a + b
    if op is ArithOp.SUB:
        return a - b
    return a * b


def lp_ord_low(a: LaurentPoly):
    return a.ord_low()


def lp_deg_high(a: LaurentPoly):
    return a.deg_high()


def lp_cbrt(q: LaurentPoly) -> LaurentPoly | None:
    """Exact cube root of ``q`` with coefficients in the field, or None.

    The leading coefficient goes through :func:`field_cbrt`; the remaining
    ones follow from matching descending coefficients of ``f^3``.  The
    result is multiplied back out before it is returned.
    """
    if not q:
        return LaurentPoly()
    lo, hi = q.ord_low(), q.deg_high()
    if (hi - lo) % 3 or lo % 3:
        return None
    lead = field_cbrt(q.leading())
    if lead is None:
        return None
    top, n_terms = hi // 3, (hi - lo) // 3
    denom = (3 * lead * lead).inverse()
    f = LaurentPoly({top: lead})
    for k in range(1, n_terms + 1):
        e = 3 * top - k
        resid = q.coeff(e) - (f * f * f).coeff(e)
        if resid:
            f = f + LaurentPoly({top - k: resid * denom})
    if f * f * f != q:
        return None
    return f


def lp_zero_count(f: LaurentPoly, surface: SurfaceKind) -> int:
    """Zeros of ``f`` on the open surface, with multiplicity."""
    if not f:
        raise ZeroPolynomial("zero count of the zero polynomial")
    if surface is SurfaceKind.AFFINE_LINE:
        if f.ord_low() < 0:
            raise ValueError("affine-line functions must be polynomials")
        return f.deg_high()
    return f.deg_high() - f.ord_low()


def lp_invert(f: LaurentPoly) -> LaurentPoly:
    """Substitute z -> 1/z."""
    return LaurentPoly({-k: v for k, v in f.terms.items()})


class RationalFunction:
    """``num/den`` with Laurent numerator and denominator.

    No gcd is ever taken; equality is decided by cross-multiplying.  A
    monomial denominator is divided out so Laurent results stay Laurent.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly({0: 1}) if den is None else LaurentPoly.coerce(den)
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if den.is_monomial():
            num, den = num.div_monomial(den), LaurentPoly({0: 1})
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, x) -> RationalFunction:
        if isinstance(x, RationalFunction):
            return x
        return cls(LaurentPoly.coerce(x))

    def __bool__(self):
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def is_laurent(self) -> bool:
        return self.den == 1

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError("not a Laurent polynomial")
        return self.num

    def __eq__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __add__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunction.coerce(other)
        if not other:
            raise DivisionByZero("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def ord_at_zero(self):
        if not self.num:
            return math.inf
        return self.num.ord_low() - self.den.ord_low()

    def ord_at_infinity(self):
        if not self.num:
            return math.inf
        return self.den.deg_high() - self.num.deg_high()

    def simplified(self) -> RationalFunction:
        """Collapse ``num = c * den`` to the constant ``c``."""
        if self.is_laurent() or not self.num:
            return self
        c = self.num.leading() / self.den.leading()
        if self.num == self.den.scale(c):
            return RationalFunction(LaurentPoly({0: c}))
        return self

    def render(self) -> str:
        r = self.simplified()
        if r.is_laurent():
            return r.num.render()
        return f"[{r.num.render()}] / [{r.den.render()}]"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"RationalFunction({self.render()})"
