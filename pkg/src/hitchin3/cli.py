"""Command line entry point: ``hitchin3 analyze`` and ``hitchin3 selfcheck``."""

from __future__ import annotations

import argparse
import dataclasses
import sys

from .constructions import verify_special_construction
from .errors import HitchinError
from .field import ALPHA, I, FieldElem
from .filtered import full_verdict
from .laurent import LaurentPoly
from .parser import parse_coeff
from .report import EXIT_IDENTITY, EXIT_INPUT, dumps, load_jobs, run_batch
from .spectral import HiggsInput, verify_frame_identities
from .surface import SurfaceKind

_AFFINE_TABLE = [
    ({0: 1}, "No"),
    ({1: 1}, "No"),
    ({1: 1, 0: 1}, "No"),
    ({2: 1}, "Yes"),
    ({2: 1, 1: 1}, "Yes"),
    ({3: 1}, "Yes"),
    ({6: 1, 0: 1}, "Yes"),
]
_PUNCTURED_TABLE = [
    ({0: 1}, "No", "NilpotentSummand"),
    ({1: 1}, "Yes", "SpecialConstruction(1)"),
    ({2: 1}, "Yes", "SpecialConstruction(2)"),
    ({3: 1}, "Yes", "Reduction(|b|>=3)"),
    ({-1: 1}, "Yes", "Symmetry(SpecialConstruction(1))"),
    ({-2: 1}, "Yes", "Symmetry(SpecialConstruction(2))"),
    ({-3: 1}, "Yes", "Reduction(|b|>=3)"),
    ({1: 1, 0: -1}, "Yes", "Feasible(Z>=1)"),
    ({1: 1, -1: 1}, "Yes", "Feasible(Z>=1)"),
]
_FRAME_SAMPLES = [
    {0: 1},
    {2: 1, 0: -1},
    {3: FieldElem(0, 1), 1: I, 0: 5},
    {4: FieldElem(1, 0, 2), -2: FieldElem(0, -3)},
]


def selfcheck(out=None) -> int:
    out = out or sys.stdout
    results: list[tuple[str, bool]] = []

    for terms in _FRAME_SAMPLES:
        f = LaurentPoly(terms)
        for surface in SurfaceKind:
            if surface is SurfaceKind.AFFINE_LINE and f.ord_low() < 0:
                continue
            try:
                ok = verify_frame_identities(f, surface).ok
            except HitchinError:
                ok = False
            results.append((f"frame identities, f = {f.render()}, {surface.value}", ok))

    for b in (1, 2):
        for a in (FieldElem(1), FieldElem(-2, 3), ALPHA + I):
            try:
                ok = verify_special_construction(b, a).ok
            except HitchinError:
                ok = False
            results.append((f"special construction b = {b}, a = {a.render()}", ok))

    for text in ("3/4*c2", "i^2", "c2^3", "c2^-1", "(1/2 - 3/4*i)*c2^2 + 5"):
        value = parse_coeff(text)
        results.append((f"parser round trip: {text}", parse_coeff(value.render()) == value))

    for terms, want in _AFFINE_TABLE:
        v = full_verdict(HiggsInput(SurfaceKind.AFFINE_LINE, f=LaurentPoly(terms)))
        results.append((f"affine verdict {LaurentPoly(terms).render()}", v.exists.value == want))
    for terms, want, route in _PUNCTURED_TABLE:
        v = full_verdict(HiggsInput(SurfaceKind.PUNCTURED_LINE, f=LaurentPoly(terms)))
        ok = v.exists.value == want and v.route == route
        results.append((f"punctured verdict {LaurentPoly(terms).render()}", ok))

    for name, ok in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}", file=out)
    failed = sum(not ok for _, ok in results)
    print(f"{len(results) - failed}/{len(results)} checks passed", file=out)
    return 0 if not failed else EXIT_IDENTITY


def analyze(args) -> int:
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        jobs, is_array = load_jobs(text)
    except (OSError, HitchinError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    overrides = {}
    if args.verify_identities:
        overrides["verify_identities"] = True
    if args.region_samples is not None:
        overrides["region_samples"] = args.region_samples
    if args.seed is not None:
        overrides["seed"] = args.seed
    if overrides:
        try:
            jobs = [
                dataclasses.replace(j, options=dataclasses.replace(j.options, **overrides))
                for j in jobs
            ]
        except HitchinError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT

    bodies, code = run_batch(jobs)
    text = dumps(bodies if is_array else bodies[0])
    if args.report:
        with open(args.report, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hitchin3",
        description="Decide existence of compatible harmonic metrics for rank-3 Hitchin-section Higgs bundles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", help="run a job file and write a report")
    a.add_argument("--input", required=True, help="job document (JSON), or - for stdin")
    a.add_argument("--report", help="write the report here instead of stdout")
    a.add_argument("--verify-identities", action="store_true", help="run the full identity suite")
    a.add_argument("--region-samples", type=int, help="random region points to test")
    a.add_argument("--seed", type=int, help="seed for region sampling")
    sub.add_parser("selfcheck", help="run the built-in identity suite")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "selfcheck":
        return selfcheck()
    return analyze(args)


if __name__ == "__main__":
    sys.exit(main())
