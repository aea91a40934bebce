"""Hitchin-section Higgs data in rank 3 and its degenerate spectral covers.

Everything is written in coordinates against the frame (dz_p, 1, dz_p^-1)
(or its dz/z analogue on the punctured line), where the Higgs field is the
companion-like matrix::

    [[0, q2, q3],
     [1, 0,  q2],
     [0, 1,  0 ]]

and the canonical symmetric pairing is antidiagonal.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import FieldTooSmall, IdentityViolated, InvalidPuncture, MalformedInput
from .field import two_pow_third
from .laurent import LaurentPoly, RationalFunction, lp_cbrt, lp_zero_count
from .surface import Puncture, SurfaceKind
from .verification import VerificationLog

__all__ = [
    "SurfaceKind",
    "Puncture",
    "HiggsInput",
    "SpectralClassification",
    "FrameVector",
    "Orthogonalization",
    "Q2_FACTOR",
    "LAMBDA1_FACTOR",
    "LAMBDA2_FACTOR",
    "q2_q3_from_f",
    "build_theta_matrix",
    "char_poly_coefficients",
    "discriminant",
    "classify_spectral",
    "sections_frame",
    "verify_jordan_frame",
    "pairing",
    "orthogonalize",
    "ord_omega_at_puncture",
    "global_degree",
    "verify_frame_identities",
]

# q2 = 3 * 2^(-5/3) * f^2, lambda1 = 2^(2/3) f, lambda2 = -2^(-1/3) f
Q2_FACTOR = 3 * two_pow_third(-5)
LAMBDA1_FACTOR = two_pow_third(2)
LAMBDA2_FACTOR = -two_pow_third(-1)


@dataclass(frozen=True)
class HiggsInput:
    """Either ``f`` (the coefficient of omega) or the pair ``(q2, q3)``."""

    surface: SurfaceKind
    f: LaurentPoly | None = None
    q2: LaurentPoly | None = None
    q3: LaurentPoly | None = None

    def __post_init__(self):
        has_f = self.f is not None
        has_q = self.q2 is not None or self.q3 is not None
        if has_f == has_q:
            raise MalformedInput("give exactly one of f or (q2, q3)")
        if has_q and (self.q2 is None or self.q3 is None):
            raise MalformedInput("q2 and q3 must be given together")
        if self.surface is SurfaceKind.AFFINE_LINE:
            for name in ("f", "q2", "q3"):
                p = getattr(self, name)
                if p is not None and p and p.ord_low() < 0:
                    raise MalformedInput(f"{name} has negative exponents on the affine line")

    def differentials(self) -> tuple[LaurentPoly, LaurentPoly]:
        if self.f is not None:
            return q2_q3_from_f(self.f)
        return self.q2, self.q3


@dataclass(frozen=True)
class SpectralClassification:
    sheets: int
    q2: LaurentPoly
    q3: LaurentPoly
    f: LaurentPoly | None = None
    lambda1_coeff: LaurentPoly | None = None
    lambda2_coeff: LaurentPoly | None = None


@dataclass(frozen=True)
class FrameVector:
    """Coordinates against (dz_p, 1, dz_p^-1); entries may be rational."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "coords", tuple(RationalFunction.coerce(c) for c in self.coords)
        )

    @classmethod
    def of(cls, *coords) -> FrameVector:
        return cls(tuple(coords))

    def __add__(self, other: FrameVector) -> FrameVector:
        return FrameVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: FrameVector) -> FrameVector:
        return FrameVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, c) -> FrameVector:
        c = RationalFunction.coerce(c)
        return FrameVector(tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(not a for a in self.coords)

    def __bool__(self):
        return not self.is_zero()

    def render(self) -> str:
        return "(" + ", ".join(c.render() for c in self.coords) + ")"


def q2_q3_from_f(f: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    return (f * f).scale(Q2_FACTOR), f * f * f


def build_theta_matrix(q2: LaurentPoly, q3: LaurentPoly):
    zero, one = LaurentPoly(), LaurentPoly({0: 1})
    return (
        (zero, q2, q3),
        (one, zero, q2),
        (zero, one, zero),
    )


def char_poly_coefficients(m) -> tuple:
    """(e1, e2, e3) with det(tI - M) = t^3 - e1 t^2 + e2 t - e3."""
    e1 = m[0][0] + m[1][1] + m[2][2]
    e2 = (
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
        + m[0][0] * m[2][2] - m[0][2] * m[2][0]
        + m[1][1] * m[2][2] - m[1][2] * m[2][1]
    )
    e3 = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    return e1, e2, e3


def _apply(m, v: FrameVector) -> FrameVector:
    return FrameVector(
        tuple(
            sum((RationalFunction(m[r][c]) * v.coords[c] for c in range(3)),
                RationalFunction(0))
            for r in range(3)
        )
    )


def discriminant(q2: LaurentPoly, q3: LaurentPoly) -> LaurentPoly:
    """-4(-2 q2)^3 - 27 q3^2 = 32 q2^3 - 27 q3^2."""
    return (q2 * q2 * q2).scale(32) - (q3 * q3).scale(27)


def classify_spectral(inp: HiggsInput) -> SpectralClassification:
    """Sheet count of the spectral cover, plus f when it has at most 2 sheets."""
    q2, q3 = inp.differentials()
    if discriminant(q2, q3):
        return SpectralClassification(3, q2, q3)
    if not q3:
        # discriminant 0 and q3 = 0 force q2 = 0: theta is nilpotent
        zero = LaurentPoly()
        return SpectralClassification(1, q2, q3, zero, zero, zero)
    f = inp.f if inp.f is not None else lp_cbrt(q3)
    if f is None:
        raise FieldTooSmall("q3 has no cube root with coefficients in Q(i, 2^(1/3))")
    if (f * f).scale(Q2_FACTOR) != q2:
        raise FieldTooSmall(
            "the cube root of q3 in the field is inconsistent with q2; "
            "the true f needs a primitive cube root of unity"
        )
    return SpectralClassification(
        2, q2, q3, f, f.scale(LAMBDA1_FACTOR), f.scale(LAMBDA2_FACTOR)
    )


def sections_frame(f: LaurentPoly) -> tuple[FrameVector, FrameVector, FrameVector]:
    f2 = f * f
    s1 = FrameVector.of(f2.scale(5 * two_pow_third(-5)), f.scale(two_pow_third(2)), 1)
    s2 = FrameVector.of(f2.scale(-two_pow_third(-5)), f.scale(-two_pow_third(-1)), 1)
    s3 = FrameVector.of(f.scale(-two_pow_third(2)), 1, 0)
    return s1, s2, s3


def _require_nonzero(f: LaurentPoly) -> None:
    if not f:
        raise MalformedInput("the frame identities need f != 0 (a two-sheeted cover)")


def verify_jordan_frame(f: LaurentPoly) -> VerificationLog:
    """Check M s1 = l1 s1, M s2 = l2 s2 and M s3 = l2 s3 + s2 exactly."""
    _require_nonzero(f)
    q2, q3 = q2_q3_from_f(f)
    m = build_theta_matrix(q2, q3)
    s1, s2, s3 = sections_frame(f)
    l1, l2 = f.scale(LAMBDA1_FACTOR), f.scale(LAMBDA2_FACTOR)
    log = VerificationLog()
    log.residual("jordan: M*s1 - lambda1*s1", (_apply(m, s1) - s1.scale(l1)).coords)
    log.residual("jordan: M*s2 - lambda2*s2", (_apply(m, s2) - s2.scale(l2)).coords)
    log.residual(
        "jordan: M*s3 - lambda2*s3 - s2",
        (_apply(m, s3) - s3.scale(l2) - s2).coords,
    )
    return log.require()


def pairing(u: FrameVector, w: FrameVector) -> RationalFunction:
    """C(u, w) = u1 w3 + u2 w2 + u3 w1."""
    a, b = u.coords, w.coords
    return a[0] * b[2] + a[1] * b[1] + a[2] * b[0]


@dataclass
class Orthogonalization:
    v2: FrameVector
    v3: FrameVector
    coefficient: RationalFunction
    displayed_coefficient: RationalFunction
    isotropic: bool
    displayed_isotropic: bool
    displayed_residual: RationalFunction
    log: VerificationLog = field(default_factory=VerificationLog)


def orthogonalize(f: LaurentPoly) -> Orthogonalization:
    """Isotropic frame v2 = s2, v3 = s3 - t s2 of the generalized eigenplane.

    ``t`` is solved from C(v3, v3) = 0, which is linear because
    C(s2, s2) = 0.  The alternative coefficient 2 C(s3,s3)/C(s2,s3) is
    evaluated alongside; it leaves C(v3, v3) = -3 C(s3, s3).
    """
    _require_nonzero(f)
    _, s2, s3 = sections_frame(f)
    c22, c23, c33 = pairing(s2, s2), pairing(s2, s3), pairing(s3, s3)
    if c22:
        raise IdentityViolated("C(s2, s2) = 0", c22.render())
    if not c23:
        raise IdentityViolated("C(s2, s3) != 0", "0")
    t = c33 / (c23 * 2)
    t_alt = (c33 * 2) / c23
    v2 = s2
    v3 = s3 - s2.scale(t)
    v3_alt = s3 - s2.scale(t_alt)
    iso = pairing(v3, v3)
    iso_alt = pairing(v3_alt, v3_alt)

    log = VerificationLog()
    log.residual("isotropy: C(v2,v2) = 0", pairing(v2, v2))
    log.residual(
        "isotropy: C(v3,v3) = 0 [solved coefficient C(s3,s3)/(2C(s2,s3))]",
        iso,
        detail=f"coefficient {t.render()}",
    )
    log.residual(
        "isotropy: C(v3,v3) = 0 [displayed coefficient 2C(s3,s3)/C(s2,s3)]",
        iso_alt,
        expected=False,
        detail=f"coefficient {t_alt.render()}",
    )
    log.equal(
        "displayed coefficient residual = -3*C(s3,s3)", iso_alt, c33 * (-3)
    )
    q2, q3 = q2_q3_from_f(f)
    m = build_theta_matrix(q2, q3)
    l2 = RationalFunction(f.scale(LAMBDA2_FACTOR))
    log.equal("nilpotent part: (M - lambda2)*v3 = v2", _apply(m, v3) - v3.scale(l2), v2)
    log.require()
    return Orthogonalization(
        v2, v3, t, t_alt, not iso, not iso_alt, iso_alt, log
    )


def ord_omega_at_puncture(f: LaurentPoly, surface: SurfaceKind, puncture) -> int:
    """Order of omega at a puncture against the local coordinate differential."""
    puncture = Puncture(puncture)
    if not f:
        raise MalformedInput("ord of the zero form is undefined")
    if surface is SurfaceKind.AFFINE_LINE:
        if puncture is not Puncture.INFINITY:
            raise InvalidPuncture("the affine line is only punctured at infinity")
        # dz = -dw/w^2 with w = 1/z
        return -(f.deg_high() + 2)
    # dz/z = dz_p / z_p at 0 and -dw/w at infinity
    if puncture is Puncture.ZERO:
        return f.ord_low() - 1
    return -f.deg_high() - 1


def global_degree(f: LaurentPoly, surface: SurfaceKind) -> int:
    """Degree of the divisor of omega on P^1 (always 2g - 2 = -2)."""
    total = lp_zero_count(f, surface)
    for p in surface.punctures:
        total += ord_omega_at_puncture(f, surface, p)
    return total


def verify_frame_identities(f: LaurentPoly, surface: SurfaceKind | None = None) -> VerificationLog:
    """Full exact identity suite for a nonzero ``f``.

    Covers the discriminant factorisation, the eigenvalue symmetric
    functions, the Jordan frame, the pairing table, isotropy and the
    order bookkeeping at 0 and infinity.
    """
    _require_nonzero(f)
    log = VerificationLog()
    q2, q3 = q2_q3_from_f(f)
    l1, l2 = f.scale(LAMBDA1_FACTOR), f.scale(LAMBDA2_FACTOR)
    log.residual("discriminant(3*2^(-5/3) f^2, f^3) = 0", discriminant(q2, q3))
    log.residual("eigen: lambda1 + 2*lambda2 = 0", l1 + l2 + l2)
    log.equal("eigen: 2*lambda1*lambda2 + lambda2^2 = -2*q2", l1 * l2 * 2 + l2 * l2, -q2 - q2)
    log.equal("eigen: lambda1*lambda2^2 = q3", l1 * l2 * l2, q3)
    e1, e2, e3 = char_poly_coefficients(build_theta_matrix(q2, q3))
    log.residual("charpoly: trace = 0", e1)
    log.equal("charpoly: e2 = -2*q2", e2, -q2 - q2)
    log.equal("charpoly: e3 = q3", e3, q3)
    log.extend(verify_jordan_frame(f))

    s1, s2, s3 = sections_frame(f)
    log.residual("pairing: C(s2,s2) = 0", pairing(s2, s2))
    log.equal(
        "pairing: C(s2,s3) = -3*2^(-1/3)*f",
        pairing(s2, s3),
        f.scale(-3 * two_pow_third(-1)),
    )
    log.equal("pairing: C(s3,s3) = 1", pairing(s3, s3), 1)
    log.equal(
        "pairing: C(s1,s1) = 18*2^(-5/3)*f^2",
        pairing(s1, s1),
        (f * f).scale(18 * two_pow_third(-5)),
    )
    log.residual("pairing: C(s1,s2) = 0", pairing(s1, s2))
    log.residual("pairing: C(s1,s3) = 0", pairing(s1, s3))

    orth = orthogonalize(f)
    log.extend(orth.log)
    c23 = pairing(orth.v2, orth.v3)
    fr = RationalFunction(f)
    log.condition(
        "order: ord_0 C(v2,v3) = ord_0 f",
        c23.ord_at_zero() == fr.ord_at_zero(),
        detail=f"{c23.ord_at_zero()} vs {fr.ord_at_zero()}",
    )
    log.condition(
        "order: ord_inf C(v2,v3) = ord_inf f",
        c23.ord_at_infinity() == fr.ord_at_infinity(),
        detail=f"{c23.ord_at_infinity()} vs {fr.ord_at_infinity()}",
    )
    if surface is not None:
        deg = global_degree(f, surface)
        log.condition("global degree of omega = -2", deg == -2, detail=str(deg))
    return log
