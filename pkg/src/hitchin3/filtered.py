"""Parabolic-weight calculus for the two-sheeted case, and the final verdict.

A weight assignment gives every puncture a pair ``(d2, d3)``: the weights
of the isotropic sections v2 and v3.  Goodness, perfectness and stability
are linear conditions on these numbers. After perfectness eliminates d3,
the feasible set is a product of half-lines cut by one strict inequality
on the sum of the d2's:

    d2_p <= (1 - ord_p) / 2                  for every puncture p
    sum_p d2_p > (-Z + sum_p(-ord_p) + 2 - 2g) / 2

Everything is exact; weights are Fractions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .constructions import SpecialConstruction, special_degrees, verify_special_construction
from .errors import HypothesisViolated, MalformedInput
from .laurent import LaurentPoly, lp_invert, lp_zero_count
from .spectral import HiggsInput, SpectralClassification, classify_spectral, ord_omega_at_puncture
from .surface import Puncture, SurfaceKind
from .verification import VerificationLog

__all__ = [
    "PunctureSpec",
    "FilteredSpec",
    "WeightAssignment",
    "PredicateResult",
    "Degrees",
    "WeightRegion",
    "Existence",
    "Reason",
    "Verdict",
    "check_good",
    "check_perfect",
    "degrees",
    "check_stable",
    "solve_weight_system",
    "decide_feasible",
    "filtered_spec_from_f",
    "full_verdict",
]


@dataclass(frozen=True)
class PunctureSpec:
    id: Puncture
    ord_omega: int


@dataclass(frozen=True)
class FilteredSpec:
    genus: int
    punctures: tuple[PunctureSpec, ...]
    interior_zero_total: int

    def __post_init__(self):
        object.__setattr__(self, "punctures", tuple(self.punctures))
        if self.genus < 0 or self.interior_zero_total < 0:
            raise MalformedInput("genus and zero count must be nonnegative")

    @property
    def Z(self) -> int:
        return self.interior_zero_total


@dataclass(frozen=True)
class WeightAssignment:
    """``(d2, d3)`` per puncture, in the order of ``FilteredSpec.punctures``."""

    pairs: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "pairs",
            tuple((Fraction(d2), Fraction(d3)) for d2, d3 in self.pairs),
        )

    @classmethod
    def of(cls, *pairs) -> WeightAssignment:
        return cls(tuple(pairs))

    def as_dict(self, spec: FilteredSpec) -> dict:
        return {
            p.id.value: {"d2": str(d2), "d3": str(d3)}
            for p, (d2, d3) in zip(spec.punctures, self.pairs)
        }


class PredicateResult:
    """A boolean that remembers the first puncture where it failed."""

    __slots__ = ("holds", "witness")

    def __init__(self, holds: bool, witness: Puncture | None = None):
        self.holds = holds
        self.witness = witness

    def __bool__(self):
        return self.holds

    def __repr__(self):
        return f"PredicateResult({self.holds}, witness={self.witness})"


def _zip(spec: FilteredSpec, w: WeightAssignment):
    if len(spec.punctures) != len(w.pairs):
        raise MalformedInput("one weight pair per puncture is required")
    return zip(spec.punctures, w.pairs)


def check_good(spec: FilteredSpec, w: WeightAssignment) -> PredicateResult:
    for p, (d2, d3) in _zip(spec, w):
        if d2 - 1 > d3:
            return PredicateResult(False, p.id)
    return PredicateResult(True)


def check_perfect(spec: FilteredSpec, w: WeightAssignment) -> PredicateResult:
    for p, (d2, d3) in _zip(spec, w):
        if d2 + d3 != -p.ord_omega:
            return PredicateResult(False, p.id)
    return PredicateResult(True)


@dataclass(frozen=True)
class Degrees:
    E1: Fraction
    E2: Fraction
    E3: Fraction
    E4: Fraction

    def as_tuple(self) -> tuple[Fraction, ...]:
        return (self.E1, self.E2, self.E3, self.E4)

    def as_dict(self) -> dict:
        return {"E1": str(self.E1), "E2": str(self.E2), "E3": str(self.E3), "E4": str(self.E4)}


def degrees(spec: FilteredSpec, w: WeightAssignment) -> Degrees:
    e13 = Fraction(-spec.Z)
    spread = sum((d3 - d2 for _, (d2, d3) in _zip(spec, w)), Fraction(0))
    e24 = (-spec.Z + spread + 2 - 2 * spec.genus) / 2
    return Degrees(e13, e24, e13, e24)


def check_stable(spec: FilteredSpec, w: WeightAssignment) -> bool:
    if spec.Z == 0:
        raise HypothesisViolated("stability test needs q2 to have a zero (Z >= 1)")
    d = degrees(spec, w)
    return d.E2 < 0 and d.E4 < 0


@dataclass(frozen=True)
class WeightRegion:
    """Feasible d2 values; d3 is then fixed at ``-ord_p - d2``."""

    spec: FilteredSpec
    upper: tuple[Fraction, ...]
    sum_lower: Fraction

    @property
    def slack(self) -> Fraction:
        return sum(self.upper, Fraction(0)) - self.sum_lower

    def is_empty(self) -> bool:
        return self.slack <= 0

    def contains(self, w: WeightAssignment) -> bool:
        total = Fraction(0)
        for p, u, (d2, d3) in zip(self.spec.punctures, self.upper, w.pairs):
            if d2 > u or d3 != -p.ord_omega - d2:
                return False
            total += d2
        return total > self.sum_lower

    def point(self, d2s) -> WeightAssignment:
        return WeightAssignment(
            tuple((Fraction(d2), -p.ord_omega - Fraction(d2)) for p, d2 in zip(self.spec.punctures, d2s))
        )

    def canonical(self) -> WeightAssignment:
        return self.point(self.upper)

    def sample(self, rng: random.Random, n: int) -> list[WeightAssignment]:
        """``n`` rational points of the region, drawn by rejection on a grid."""
        k = len(self.upper)
        if k == 0:
            return [WeightAssignment(())] * n
        grid = 16 * k
        out = []
        while len(out) < n:
            steps = [rng.randrange(grid) for _ in range(k)]
            if sum(steps) >= grid:
                continue
            denom = rng.randint(1, 7)
            out.append(
                self.point(u - self.slack * Fraction(s * denom, grid * denom + 1) for u, s in zip(self.upper, steps))
            )
        return out

    def render(self) -> str:
        if len(self.upper) == 1:
            return f"({self.sum_lower}, {self.upper[0]}]"
        names = [f"d2({p.id.value})" for p in self.spec.punctures]
        parts = [f"{n} <= {u}" for n, u in zip(names, self.upper)]
        lhs = " + ".join(names) if names else "0"
        parts.append(f"{lhs} > {self.sum_lower}")
        return "; ".join(parts)


def solve_weight_system(spec: FilteredSpec) -> WeightRegion | None:
    """The good+perfect+stable region with no hypothesis on Z.

    Eliminating d3 turns stability into a lower bound on the sum of the
    d2's and goodness into an upper bound on each one, so the region is
    nonempty iff ``Z + |D| + 2g - 2 > 0``.
    """
    upper = tuple(Fraction(1 - p.ord_omega, 2) for p in spec.punctures)
    lower = Fraction(
        -spec.Z + sum(-p.ord_omega for p in spec.punctures) + 2 - 2 * spec.genus, 2
    )
    region = WeightRegion(spec, upper, lower)
    return None if region.is_empty() else region


def decide_feasible(spec: FilteredSpec) -> WeightRegion | None:
    if spec.Z == 0:
        raise HypothesisViolated("the diagonal weight family needs Z >= 1")
    return solve_weight_system(spec)


def filtered_spec_from_f(f: LaurentPoly, surface: SurfaceKind) -> FilteredSpec:
    punctures = tuple(
        PunctureSpec(p, ord_omega_at_puncture(f, surface, p)) for p in surface.punctures
    )
    return FilteredSpec(surface.genus, punctures, lp_zero_count(f, surface))


class Existence(Enum):
    YES = "Yes"
    NO = "No"
    YES_BY_REGULAR_SEMISIMPLE = "YesByRegularSemisimple"

    @property
    def is_yes(self) -> bool:
        return self is not Existence.NO


class Reason(Enum):
    REGULAR_SEMISIMPLE = "RegularSemisimple"
    NILPOTENT = "Nilpotent"
    NILPOTENT_SUMMAND = "NilpotentSummand"
    CLASSIFICATION_EXCLUDES = "ClassificationExcludes"
    FEASIBLE = "Feasible(Z>=1)"
    REDUCTION = "Reduction(|b|>=3)"
    SPECIAL_CONSTRUCTION = "SpecialConstruction"


@dataclass
class Verdict:
    sheets: int
    exists: Existence
    reason: Reason
    classification: SpectralClassification | None = None
    spec: FilteredSpec | None = None
    region: WeightRegion | None = None
    canonical_weights: WeightAssignment | None = None
    degrees: Degrees | None = None
    construction: SpecialConstruction | None = None
    reduced_f: LaurentPoly | None = None
    log: VerificationLog = field(default_factory=VerificationLog)

    @property
    def route(self) -> str:
        if self.construction is not None:
            return self.construction.tag
        return self.reason.value


def _feasible_verdict(
    cls: SpectralClassification, spec: FilteredSpec, region: WeightRegion, reason: Reason, log: VerificationLog
) -> Verdict:
    w = region.canonical()
    log.condition("canonical weights lie in the region", region.contains(w))
    log.condition("canonical weights are good", bool(check_good(spec, w)))
    log.condition("canonical weights are perfect", bool(check_perfect(spec, w)))
    log.condition("canonical weights are stable", check_stable(spec, w))
    d = degrees(spec, w)
    log.equal("deg E2 = deg E4", d.E2, d.E4)
    return Verdict(2, Existence.YES, reason, cls, spec, region, w, d, log=log)


def _monomial_exponent(f: LaurentPoly) -> int | None:
    if f.is_monomial():
        (b,) = f.terms
        return b
    return None


def _note_infeasible(spec: FilteredSpec, log: VerificationLog) -> None:
    n = spec.Z + len(spec.punctures) + 2 * spec.genus - 2
    log.condition(
        "diagonal weight family is infeasible",
        solve_weight_system(spec) is None,
        detail=f"Z + |D| + 2g - 2 = {n}",
    )


def full_verdict(inp: HiggsInput) -> Verdict:
    cls = classify_spectral(inp)
    if cls.sheets == 3:
        return Verdict(3, Existence.YES_BY_REGULAR_SEMISIMPLE, Reason.REGULAR_SEMISIMPLE, cls)
    if cls.sheets == 1:
        return Verdict(1, Existence.NO, Reason.NILPOTENT, cls)

    f, surface = cls.f, inp.surface
    spec = filtered_spec_from_f(f, surface)
    log = VerificationLog()
    no = lambda reason: Verdict(2, Existence.NO, reason, cls, spec, log=log)  # noqa: E731

    if surface is SurfaceKind.AFFINE_LINE:
        deg = f.deg_high()
        if deg == 0:
            _note_infeasible(spec, log)
            return no(Reason.NILPOTENT_SUMMAND)
        region = decide_feasible(spec)
        if region is None:
            _note_infeasible(spec, log)
            return no(Reason.CLASSIFICATION_EXCLUDES)
        return _feasible_verdict(cls, spec, region, Reason.FEASIBLE, log)

    if f.is_constant():
        _note_infeasible(spec, log)
        return no(Reason.NILPOTENT_SUMMAND)
    b = _monomial_exponent(f)
    if b is None:
        # not a monomial, so f vanishes somewhere on C*
        region = decide_feasible(spec)
        return _feasible_verdict(cls, spec, region, Reason.FEASIBLE, log)

    a = f.terms[b]
    if abs(b) >= 3:
        # a z^b dz/z = a z^(b-1) dz; for b < 0 pass to w = 1/z first,
        # where dz/z = -dw/w
        g = f if b > 0 else lp_invert(f).scale(-1)
        reduced = LaurentPoly({abs(b) - 1: g.terms[abs(b)]})
        rspec = filtered_spec_from_f(reduced, SurfaceKind.AFFINE_LINE)
        region = decide_feasible(rspec)
        out = _feasible_verdict(cls, rspec, region, Reason.REDUCTION, log)
        out.reduced_f = reduced
        return out

    symmetric = b < 0
    b_eff, a_eff = (-b, -a) if symmetric else (b, a)
    _note_infeasible(spec, log)
    log.extend(verify_special_construction(b_eff, a_eff).require(), prefix=f"special({b_eff}): ")
    d = special_degrees(b_eff)
    return Verdict(
        2,
        Existence.YES,
        Reason.SPECIAL_CONSTRUCTION,
        cls,
        spec,
        degrees=Degrees(d["E1"], d["E2"], d["E3"], d["E4"]),
        construction=SpecialConstruction(b_eff, symmetric),
        log=log,
    )
