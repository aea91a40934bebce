"""Exact arithmetic in Q(i, 2^(1/3)).

Elements are stored as ``c0 + c1*a + c2*a^2`` with ``a = 2^(1/3)`` and
coordinates in the Gaussian rationals Q(i).  Every constant that shows up in
the rank-3 Hitchin section frames (2^(2/3), 2^(-5/3), sqrt(-1), ...) lives
here, so nothing is ever approximated.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational

from .errors import DivisionByZero

__all__ = [
    "GaussianRational",
    "FieldElem",
    "ZERO",
    "ONE",
    "I",
    "ALPHA",
    "two_pow_third",
    "field_add",
    "field_mul",
    "field_inv",
    "field_cbrt",
    "gaussian_cbrt",
]


def _frac_str(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class GaussianRational:
    """An element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, x) -> GaussianRational:
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Rational)):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> GaussianRational:
        n = self.norm()
        if not n:
            raise DivisionByZero("inverse of 0 in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = GaussianRational(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def render(self) -> str:
        """Canonical text: ``a/b``, ``c/d*i`` or ``a/b + c/d*i``."""
        if not self.im:
            return _frac_str(self.re)
        if self.im == 1:
            im_part = "i"
        elif self.im == -1:
            im_part = "-i"
        else:
            im_part = f"{_frac_str(self.im)}*i"
        if not self.re:
            return im_part
        if self.im < 0:
            mag = -self.im
            tail = "i" if mag == 1 else f"{_frac_str(mag)}*i"
            return f"{_frac_str(self.re)} - {tail}"
        return f"{_frac_str(self.re)} + {im_part}"

    def __repr__(self):
        return f"GaussianRational({self.render()})"

    def approx(self) -> complex:
        return complex(float(self.re), float(self.im))


_G0 = GaussianRational(0)
_G1 = GaussianRational(1)


def _iroot3(n: int) -> int | None:
    """Exact integer cube root of ``n`` (any sign), or None."""
    if n < 0:
        r = _iroot3(-n)
        return None if r is None else -r
    if n < 2:
        return n
    lo, hi = 0, 1 << (n.bit_length() // 3 + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid * mid * mid <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo * lo * lo == n else None


def _monotone_integer_root(g, lo: int, hi: int, increasing: bool) -> int | None:
    if lo > hi:
        return None
    sign = 1 if increasing else -1
    while lo < hi:
        mid = (lo + hi) // 2
        if sign * g(mid) < 0:
            lo = mid + 1
        else:
            hi = mid
    return lo if g(lo) == 0 else None


def _gaussian_integer_cbrt(a: int, b: int) -> tuple[int, int] | None:
    """Find integers (x, y) with (x + y*i)^3 = a + b*i."""
    if a == 0 and b == 0:
        return (0, 0)
    r = _iroot3(a * a + b * b)
    if r is None:
        return None
    # x = Re(cube root) is an integer root of 4x^3 - 3rx - a, |x| <= sqrt(r)
    def g(x):
        return 4 * x * x * x - 3 * r * x - a

    s, m = isqrt(r), isqrt(r) // 2
    candidates = {
        _monotone_integer_root(g, -s - 1, -m - 1, True),
        _monotone_integer_root(g, -m, m, False),
        _monotone_integer_root(g, m + 1, s + 1, True),
    }
    for x in sorted(c for c in candidates if c is not None):
        y2 = r - x * x
        if y2 < 0:
            continue
        y = isqrt(y2)
        if y * y != y2:
            continue
        for yy in {y, -y}:
            if x**3 - 3 * x * yy * yy == a and 3 * x * x * yy - yy**3 == b:
                return (x, yy)
    return None


def gaussian_cbrt(u: GaussianRational) -> GaussianRational | None:
    """The cube root of ``u`` inside Q(i), or None if there is none.

    Q(i) has no primitive cube roots of unity, so the answer is unique.
    """
    u = GaussianRational.coerce(u)
    d = u.re.denominator * u.im.denominator // gcd(u.re.denominator, u.im.denominator)
    # cbrt(n/d) = cbrt(n*d^2)/d with n*d^2 a Gaussian integer
    a = int(u.re * d) * d * d
    b = int(u.im * d) * d * d
    root = _gaussian_integer_cbrt(a, b)
    if root is None:
        return None
    return GaussianRational(Fraction(root[0], d), Fraction(root[1], d))


class FieldElem:
    """``c0 + c1*a + c2*a^2`` with ``a^3 = 2`` and ``c_k`` in Q(i).

    Internally the six rational parts (real and imaginary for each power
    of ``a``) share one positive denominator and the seven integers are
    kept coprime, so equality is tuple comparison and products stay in
    integer arithmetic.
    """

    __slots__ = ("_n", "_d")

    def __init__(self, c0=0, c1=0, c2=0):
        parts = []
        for c in (c0, c1, c2):
            g = GaussianRational.coerce(c)
            parts += (g.re, g.im)
        d = 1
        for q in parts:
            d = d * q.denominator // gcd(d, q.denominator)
        self._n = tuple(q.numerator * (d // q.denominator) for q in parts)
        self._d = d

    @classmethod
    def _raw(cls, n, d) -> FieldElem:
        g = gcd(d, *n)
        if d < 0:
            g = -g
        self = object.__new__(cls)
        if g != 1:
            n = tuple(x // g for x in n)
            d //= g
        self._n = n
        self._d = d
        return self

    @property
    def c(self) -> tuple[GaussianRational, GaussianRational, GaussianRational]:
        n, d = self._n, self._d
        return tuple(
            GaussianRational(Fraction(n[2 * k], d), Fraction(n[2 * k + 1], d)) for k in range(3)
        )

    @classmethod
    def coerce(cls, x) -> FieldElem:
        if isinstance(x, FieldElem):
            return x
        if isinstance(x, int):
            return cls._raw((x, 0, 0, 0, 0, 0), 1)
        if isinstance(x, (Rational, GaussianRational)):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to FieldElem")

    def __bool__(self):
        return any(self._n)

    def is_zero(self) -> bool:
        return not self

    def __eq__(self, other):
        try:
            other = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self._n == other._n and self._d == other._d

    def __hash__(self):
        n = self._n
        if not any(n[2:]):
            return hash(self.c[0])
        return hash((n, self._d))

    def __neg__(self):
        return FieldElem._raw(tuple(-x for x in self._n), self._d)

    def __add__(self, other):
        try:
            other = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == d2:
            return FieldElem._raw(tuple(x + y for x, y in zip(self._n, other._n)), d1)
        return FieldElem._raw(
            tuple(x * d2 + y * d1 for x, y in zip(self._n, other._n)), d1 * d2
        )

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return FieldElem.coerce(other) - self

    def __mul__(self, other):
        try:
            other = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        ar0, ai0, ar1, ai1, ar2, ai2 = self._n
        br0, bi0, br1, bi1, br2, bi2 = other._n

        def gm(ar, ai, br, bi):
            return ar * br - ai * bi, ar * bi + ai * br

        p00 = gm(ar0, ai0, br0, bi0)
        p01 = gm(ar0, ai0, br1, bi1)
        p10 = gm(ar1, ai1, br0, bi0)
        p02 = gm(ar0, ai0, br2, bi2)
        p11 = gm(ar1, ai1, br1, bi1)
        p20 = gm(ar2, ai2, br0, bi0)
        p12 = gm(ar1, ai1, br2, bi2)
        p21 = gm(ar2, ai2, br1, bi1)
        p22 = gm(ar2, ai2, br2, bi2)
        # a^3 = 2, a^4 = 2a
        return FieldElem._raw(
            (
                p00[0] + 2 * (p12[0] + p21[0]),
                p00[1] + 2 * (p12[1] + p21[1]),
                p01[0] + p10[0] + 2 * p22[0],
                p01[1] + p10[1] + 2 * p22[1],
                p02[0] + p11[0] + p20[0],
                p02[1] + p11[1] + p20[1],
            ),
            self._d * other._d,
        )

    __rmul__ = __mul__

    def inverse(self) -> FieldElem:
        return field_inv(self)

    def __truediv__(self, other):
        try:
            other = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self * field_inv(other)

    def __rtruediv__(self, other):
        return FieldElem.coerce(other) * field_inv(self)

    def __pow__(self, n: int):
        if n < 0:
            return field_inv(self) ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monomial_degree(self) -> int | None:
        """``j`` if the element is ``u * a^j`` with u in Q(i), else None."""
        nonzero = [k for k in range(3) if self.c[k]]
        return nonzero[0] if len(nonzero) == 1 else None

    def render(self) -> str:
        if not self:
            return "0"
        parts = []
        for k, g in enumerate(self.c):
            if not g:
                continue
            text = g.render()
            if k == 0:
                parts.append(f"({text})" if " " in text else text)
            elif k == 1:
                parts.append(f"({text})*c2")
            else:
                parts.append(f"({text})*c2^2")
        return " + ".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"FieldElem({self.render()})"

    def approx(self) -> complex:
        """Complex embedding with real 2^(1/3); diagnostics only."""
        a = 2.0 ** (1.0 / 3.0)
        return self.c[0].approx() + self.c[1].approx() * a + self.c[2].approx() * a * a


ZERO = FieldElem(0)
ONE = FieldElem(1)
I = FieldElem(GaussianRational(0, 1))
ALPHA = FieldElem(0, 1)


def field_add(a: FieldElem, b: FieldElem) -> FieldElem:
    return FieldElem.coerce(a) + b


def field_mul(a: FieldElem, b: FieldElem) -> FieldElem:
    return FieldElem.coerce(a) * b


def _solve3(m: list[list[GaussianRational]], rhs: list[GaussianRational]):
    """Gauss-Jordan elimination over Q(i); ``m`` is assumed invertible."""
    rows = [list(m[r]) + [rhs[r]] for r in range(3)]
    for col in range(3):
        pivot = next(r for r in range(col, 3) if rows[r][col])
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = rows[col][col].inverse()
        rows[col] = [x * inv for x in rows[col]]
        for r in range(3):
            if r != col and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return [rows[r][3] for r in range(3)]


def field_inv(a: FieldElem) -> FieldElem:
    """Inverse via the 3x3 system of multiplication-by-``a`` in (1, a, a^2)."""
    a = FieldElem.coerce(a)
    if not a:
        raise DivisionByZero("inverse of 0 in Q(i, 2^(1/3))")
    a0, a1, a2 = a.c
    # columns: a*1, a*alpha, a*alpha^2
    m = [
        [a0, 2 * a2, 2 * a1],
        [a1, a0, 2 * a2],
        [a2, a1, a0],
    ]
    x = _solve3(m, [_G1, _G0, _G0])
    return FieldElem(*x)


def two_pow_third(k: int) -> FieldElem:
    """Exact 2^(k/3)."""
    q, r = divmod(k, 3)
    coords = [0, 0, 0]
    coords[r] = Fraction(2) ** q
    return FieldElem(*coords)


def field_cbrt(a: FieldElem) -> FieldElem | None:
    """Cube root of ``a`` restricted to the monomial class ``u * a^m``.

    Only elements lying in Q(i) can have such a cube root: ``(w a^m)^3 =
    w^3 2^m``.  Anything else (including ``2^(1/3)`` itself, whose cube root
    would be ``2^(1/9)``) is reported as absent.
    """
    a = FieldElem.coerce(a)
    if not a:
        return ZERO
    if a.monomial_degree() != 0:
        return None
    u = a.c[0]
    for m in range(3):
        w = gaussian_cbrt(u / (2**m))
        if w is not None:
            coords = [0, 0, 0]
            coords[m] = w
            return FieldElem(*coords)
    return None
