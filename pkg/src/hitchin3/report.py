"""Job specifications in, deterministic JSON reports out."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from . import __version__
from .errors import FieldTooSmall, HitchinError, IdentityViolated, MalformedInput
from .filtered import Existence, Verdict, check_good, check_perfect, check_stable, full_verdict
from .laurent import LaurentPoly
from .parser import parse_coeff
from .spectral import HiggsInput, orthogonalize, verify_frame_identities
from .surface import SurfaceKind
from .verification import VerificationLog

__all__ = [
    "JobOptions",
    "JobSpec",
    "Report",
    "parse_terms",
    "load_jobs",
    "run_job",
    "run_batch",
    "exit_code_for",
    "dumps",
    "EXIT_YES",
    "EXIT_NO",
    "EXIT_INPUT",
    "EXIT_IDENTITY",
]

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_IDENTITY = 0, 1, 2, 3
_U64 = 2**64


@dataclass(frozen=True)
class JobOptions:
    verify_identities: bool = False
    region_samples: int = 0
    seed: int = 0

    def __post_init__(self):
        if not isinstance(self.verify_identities, bool):
            raise MalformedInput("verify_identities must be a boolean")
        for name, bound in (("region_samples", None), ("seed", _U64)):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 0 or (bound and v >= bound):
                raise MalformedInput(f"{name} must be a nonnegative integer below {bound or 'any bound'}")

    def as_dict(self) -> dict:
        return {
            "verify_identities": self.verify_identities,
            "region_samples": self.region_samples,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class JobSpec:
    surface: SurfaceKind
    f: tuple | None = None
    q2: tuple | None = None
    q3: tuple | None = None
    options: JobOptions = field(default_factory=JobOptions)

    @classmethod
    def from_dict(cls, doc) -> JobSpec:
        if not isinstance(doc, dict):
            raise MalformedInput("a job must be a JSON object")
        unknown = set(doc) - {"surface", "f", "q2", "q3", "options"}
        if unknown:
            raise MalformedInput(f"unknown job keys: {', '.join(sorted(unknown))}")
        try:
            surface = SurfaceKind(doc.get("surface"))
        except ValueError:
            raise MalformedInput("surface must be 'affine_line' or 'punctured_line'") from None
        opts = doc.get("options", {})
        if not isinstance(opts, dict):
            raise MalformedInput("options must be an object")
        unknown = set(opts) - {"verify_identities", "region_samples", "seed"}
        if unknown:
            raise MalformedInput(f"unknown option keys: {', '.join(sorted(unknown))}")
        lists = {k: _term_pairs(doc[k], k) for k in ("f", "q2", "q3") if k in doc}
        return cls(surface, options=JobOptions(**opts), **lists)

    def higgs_input(self) -> HiggsInput:
        polys = {k: parse_terms(v) for k in ("f", "q2", "q3") if (v := getattr(self, k)) is not None}
        return HiggsInput(self.surface, **polys)

    def echo(self) -> dict:
        out = {"surface": self.surface.value}
        for k in ("f", "q2", "q3"):
            v = getattr(self, k)
            if v is not None:
                out[k] = [list(t) for t in v]
        out["options"] = self.options.as_dict()
        return out


def _term_pairs(raw, name: str) -> tuple:
    if not isinstance(raw, list):
        raise MalformedInput(f"{name} must be a list of [exponent, coefficient] pairs")
    out = []
    for t in raw:
        if (
            not isinstance(t, list)
            or len(t) != 2
            or not isinstance(t[0], int)
            or isinstance(t[0], bool)
            or not isinstance(t[1], str)
        ):
            raise MalformedInput(f"bad term in {name}: {t!r}")
        out.append((t[0], t[1]))
    return tuple(out)


def parse_terms(pairs) -> LaurentPoly:
    """Sum the terms; repeated exponents add up."""
    out = LaurentPoly()
    for k, text in pairs:
        out = out + LaurentPoly({k: parse_coeff(text)})
    return out


def load_jobs(text: str) -> tuple[list[JobSpec], bool]:
    """Parse a document holding one job or an array of jobs.

    Returns the jobs and whether the document was an array.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"not valid JSON: {exc}") from None
    if isinstance(doc, list):
        return [JobSpec.from_dict(d) for d in doc], True
    return [JobSpec.from_dict(doc)], False


@dataclass
class Report:
    body: dict
    exit_code: int

    def dumps(self) -> str:
        return dumps(self.body)


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _render(p) -> str | None:
    return None if p is None else p.render()


def _approx(p: LaurentPoly | None) -> dict | None:
    if not p:
        return None
    return {str(k): _complex_text(v.approx()) for k, v in p.terms.items()}


def _complex_text(c: complex) -> str:
    return f"{c.real:.12g}{c.imag:+.12g}i"


def exit_code_for(verdict: Verdict) -> int:
    return EXIT_NO if verdict.exists is Existence.NO else EXIT_YES


def _sample_region(verdict: Verdict, n: int, seed: int, log: VerificationLog) -> None:
    region, spec = verdict.region, verdict.spec
    rng = random.Random(seed)
    for j, w in enumerate(region.sample(rng, n)):
        ok = region.contains(w) and check_good(spec, w) and check_perfect(spec, w) and check_stable(spec, w)
        d2s = ", ".join(str(d2) for d2, _ in w.pairs)
        log.condition(f"region sample {j}: good, perfect and stable", bool(ok), detail=f"d2 = ({d2s})")


def run_job(job: JobSpec) -> Report:
    inp = job.higgs_input()
    verdict = full_verdict(inp)
    cls = verdict.classification
    log = VerificationLog()
    log.extend(verdict.log)
    if cls.sheets == 2:
        if job.options.verify_identities:
            log.extend(verify_frame_identities(cls.f, inp.surface))
        else:
            log.extend(orthogonalize(cls.f).log)
        if verdict.region is not None and job.options.region_samples:
            _sample_region(verdict, job.options.region_samples, job.options.seed, log)

    code = exit_code_for(verdict)
    if not log.ok:
        code = EXIT_IDENTITY
    body = {
        "classification": {
            "sheets": cls.sheets,
            "q2": cls.q2.term_list(),
            "q3": cls.q3.term_list(),
            "f": _render(cls.f) if cls.sheets < 3 else None,
            "lambda1_coeff": _render(cls.lambda1_coeff),
            "lambda2_coeff": _render(cls.lambda2_coeff),
            "approx": {"f": _approx(cls.f), "note": "non-normative decimal aid"},
        },
        "verdict": {
            "exists": verdict.exists.value,
            "reason": verdict.reason.value,
            "route": verdict.route,
            "construction": verdict.construction.tag if verdict.construction else None,
            "reduced_f": _render(verdict.reduced_f),
            "region": verdict.region.render() if verdict.region else None,
            "canonical_weights": (
                verdict.canonical_weights.as_dict(verdict.spec) if verdict.canonical_weights else None
            ),
            "degrees": verdict.degrees.as_dict() if verdict.degrees else None,
        },
        "log": log.as_list(),
        "provenance": {
            "artifact": "hitchin3",
            "version": __version__,
            "input": job.echo(),
            "seed": job.options.seed,
        },
    }
    return Report(body, code)


def _error_entry(job: JobSpec | None, exc: HitchinError) -> tuple[dict, int]:
    code = EXIT_IDENTITY if isinstance(exc, IdentityViolated) else EXIT_INPUT
    body = {"error": {"kind": type(exc).__name__, "message": str(exc)}}
    if isinstance(exc, FieldTooSmall):
        body["error"]["hint"] = "coefficients must lie in Q(i, 2^(1/3))"
    if job is not None:
        body["provenance"] = {
            "artifact": "hitchin3",
            "version": __version__,
            "input": job.echo(),
            "seed": job.options.seed,
        }
    return body, code


def run_batch(jobs: list[JobSpec]) -> tuple[list[dict], int]:
    """Run every job in input order; the exit code is the worst one seen."""
    bodies, worst = [], EXIT_YES
    for job in jobs:
        try:
            rep = run_job(job)
            body, code = rep.body, rep.exit_code
        except HitchinError as exc:
            body, code = _error_entry(job, exc)
        bodies.append(body)
        worst = max(worst, code)
    return bodies, worst
