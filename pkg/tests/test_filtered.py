import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hitchin3.errors import HypothesisViolated, MalformedInput
from hitchin3.field import ALPHA, FieldElem
from hitchin3.filtered import (
    Existence,
    FilteredSpec,
    PunctureSpec,
    Reason,
    WeightAssignment,
    check_good,
    check_perfect,
    check_stable,
    decide_feasible,
    degrees,
    filtered_spec_from_f,
    full_verdict,
    solve_weight_system,
)
from hitchin3.laurent import LaurentPoly, z
from hitchin3.spectral import HiggsInput
from hitchin3.surface import Puncture, SurfaceKind

A, P = SurfaceKind.AFFINE_LINE, SurfaceKind.PUNCTURED_LINE
INF, ZERO = Puncture.INFINITY, Puncture.ZERO
F = Fraction


def one(ord_, Z, g=0):
    return FilteredSpec(g, (PunctureSpec(INF, ord_),), Z)


def w(*pairs):
    return WeightAssignment.of(*pairs)


def test_good_examples():
    spec = filtered_spec_from_f(z**2, A)
    assert check_good(spec, w((F(5, 2), F(3, 2))))
    bad = check_good(spec, w((3, 1)))
    assert not bad and bad.witness is INF
    assert check_good(spec, w((1, 0)))


def test_perfect_examples():
    spec = filtered_spec_from_f(z**2, A)
    assert spec.punctures[0].ord_omega == -4
    assert check_perfect(spec, w((F(5, 2), F(3, 2))))
    assert not check_perfect(one(-1, 1), w((0, 0)))
    for o in range(-8, 3):
        assert check_perfect(one(o, 1), w((F(1 - o, 2), F(-o - 1, 2))))


def test_degree_examples():
    spec = filtered_spec_from_f(z**2, A)
    d = degrees(spec, w((F(5, 2), F(3, 2))))
    assert d.as_tuple() == (-2, F(-1, 2), -2, F(-1, 2))
    assert degrees(one(-1, 0), w((1, 0))).E2 == F(1, 2)
    assert degrees(FilteredSpec(1, (), 0), WeightAssignment(())).E2 == 0


def test_stable_examples():
    spec = filtered_spec_from_f(z**2, A)
    assert check_stable(spec, w((F(5, 2), F(3, 2))))
    lin = filtered_spec_from_f(z, A)
    # the best good+perfect choice has d3 - d2 = -1, giving degE2 = 0
    assert not check_stable(lin, w((F(2), F(1))))
    with pytest.raises(HypothesisViolated):
        check_stable(one(-2, 0), w((1, 1)))


def test_mismatched_weights():
    with pytest.raises(MalformedInput):
        check_good(one(-2, 1), WeightAssignment(()))


def test_decide_examples():
    r = decide_feasible(filtered_spec_from_f(z**2, A))
    assert r.render() == "(2, 5/2]"
    assert decide_feasible(filtered_spec_from_f(z, A)) is None
    spec = filtered_spec_from_f(z - 1, P)
    r = decide_feasible(spec)
    assert r is not None
    assert r.canonical().pairs == ((1, 0), (F(3, 2), F(1, 2)))
    with pytest.raises(HypothesisViolated):
        decide_feasible(filtered_spec_from_f(LaurentPoly({0: 1}), A))


@given(
    st.integers(1, 6),
    st.lists(st.integers(-8, 2), min_size=1, max_size=2),
    st.integers(0, 1),
    st.integers(0, 2**32),
)
def test_soundness(Z, ords, g, seed):
    ids = (ZERO, INF)[: len(ords)] if len(ords) == 2 else (INF,)
    spec = FilteredSpec(g, tuple(PunctureSpec(p, o) for p, o in zip(ids, ords)), Z)
    region = decide_feasible(spec)
    feasible = Z + len(ords) + 2 * g - 2 > 0
    assert (region is not None) == feasible
    if region is None:
        return
    rng = random.Random(seed)
    for pt in [region.canonical()] + region.sample(rng, 20):
        assert region.contains(pt)
        assert check_good(spec, pt) and check_perfect(spec, pt) and check_stable(spec, pt)
    for _ in range(20):
        d2s = [u + F(rng.randint(-40, 40), 4) for u in region.upper]
        d3s = [-p.ord_omega - d for p, d in zip(spec.punctures, d2s)]
        if rng.random() < 0.3:
            d3s[0] += F(1, rng.randint(1, 5))
        pt = WeightAssignment(tuple(zip(d2s, d3s)))
        passes = bool(check_good(spec, pt) and check_perfect(spec, pt) and check_stable(spec, pt))
        assert passes == region.contains(pt)


@given(st.integers(0, 6), st.integers(-8, 2), st.fractions(-5, 5), st.fractions(-5, 5))
def test_degE2_equals_degE4(Z, o, d2, d3):
    d = degrees(one(o, Z), w((d2, d3)))
    assert d.E2 == d.E4 and d.E1 == d.E3 == -Z


def test_solve_weight_system_without_hypothesis():
    assert solve_weight_system(one(-2, 0)) is None
    # two punctures with Z = 0 sit exactly on the boundary
    assert solve_weight_system(FilteredSpec(0, (PunctureSpec(ZERO, -1), PunctureSpec(INF, -1)), 0)) is None
    assert solve_weight_system(FilteredSpec(1, (PunctureSpec(INF, -1),), 0)) is not None


@given(st.integers(0, 6), st.lists(st.sampled_from([FieldElem(1), ALPHA, FieldElem(-3), FieldElem(0, 0, 5)]), min_size=7, max_size=7))
def test_theorem_affine(deg, coeffs):
    f = LaurentPoly({k: coeffs[k] for k in range(deg + 1)})
    if f.deg_high() != deg:
        f = f + LaurentPoly({deg: 1})
    v = full_verdict(HiggsInput(A, f=f))
    assert (v.exists is Existence.YES) == (deg >= 2)
    if deg >= 2:
        assert v.region.render() == f"(2, {F(deg + 3, 2)}]"
        w0 = v.canonical_weights
        assert check_good(v.spec, w0) and check_perfect(v.spec, w0) and check_stable(v.spec, w0)


@pytest.mark.parametrize(
    "f, exists, route",
    [
        (LaurentPoly({0: 1}), "No", "NilpotentSummand"),
        (z, "Yes", "SpecialConstruction(1)"),
        (z**2, "Yes", "SpecialConstruction(2)"),
        (z**3, "Yes", "Reduction(|b|>=3)"),
        (z**-1, "Yes", "Symmetry(SpecialConstruction(1))"),
        (z**-2, "Yes", "Symmetry(SpecialConstruction(2))"),
        (z**-3, "Yes", "Reduction(|b|>=3)"),
        (z - 1, "Yes", "Feasible(Z>=1)"),
        (z + z**-1, "Yes", "Feasible(Z>=1)"),
    ],
)
def test_theorem_punctured(f, exists, route):
    v = full_verdict(HiggsInput(P, f=f))
    assert v.exists.value == exists and v.route == route
    assert v.log.ok


def test_reduction_of_negative_exponent():
    v = full_verdict(HiggsInput(P, f=z.__pow__(-4).scale(ALPHA)))
    # a z^-4 dz/z becomes -a w^4 dw/w = -a w^3 dw
    assert v.reduced_f == LaurentPoly({3: -ALPHA})
    assert v.region.render() == "(2, 3]"


def test_non_two_sheet_verdicts():
    v = full_verdict(HiggsInput(A, q2=z, q3=LaurentPoly()))
    assert v.exists is Existence.YES_BY_REGULAR_SEMISIMPLE and v.construction is None
    v = full_verdict(HiggsInput(A, q2=LaurentPoly(), q3=LaurentPoly()))
    assert v.exists is Existence.NO and v.reason is Reason.NILPOTENT


def test_affine_degree_one_reason():
    v = full_verdict(HiggsInput(A, f=z + 1))
    assert v.reason is Reason.CLASSIFICATION_EXCLUDES
    assert v.log["diagonal weight family is infeasible"].ok
