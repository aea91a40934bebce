"""Exact decision procedure for compatible harmonic metrics on rank-3
Hitchin-section Higgs bundles over the affine and punctured lines."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    DivisionByZero,
    FieldTooSmall,
    HitchinError,
    HypothesisViolated,
    IdentityViolated,
    InvalidPuncture,
    MalformedInput,
    ParseError,
    ZeroPolynomial,
)
from .field import ALPHA, I, FieldElem, GaussianRational, field_cbrt  # noqa: E402
from .filtered import (  # noqa: E402
    Existence,
    FilteredSpec,
    PunctureSpec,
    Reason,
    Verdict,
    WeightAssignment,
    check_good,
    check_perfect,
    check_stable,
    decide_feasible,
    degrees,
    full_verdict,
)
from .laurent import LaurentPoly, RationalFunction, lp_cbrt, z  # noqa: E402
from .parser import parse_coeff  # noqa: E402
from .spectral import HiggsInput, classify_spectral, verify_frame_identities  # noqa: E402
from .constructions import verify_special_construction  # noqa: E402
from .surface import Puncture, SurfaceKind  # noqa: E402

__all__ = [
    "__version__",
    "ALPHA",
    "check_good",
    "check_perfect",
    "check_stable",
    "classify_spectral",
    "decide_feasible",
    "degrees",
    "DivisionByZero",
    "Existence",
    "field_cbrt",
    "FieldElem",
    "FieldTooSmall",
    "FilteredSpec",
    "full_verdict",
    "GaussianRational",
    "HiggsInput",
    "HitchinError",
    "HypothesisViolated",
    "I",
    "IdentityViolated",
    "InvalidPuncture",
    "LaurentPoly",
    "lp_cbrt",
    "MalformedInput",
    "parse_coeff",
    "ParseError",
    "Puncture",
    "PunctureSpec",
    "RationalFunction",
    "Reason",
    "SurfaceKind",
    "Verdict",
    "verify_frame_identities",
    "verify_special_construction",
    "WeightAssignment",
    "z",
    "ZeroPolynomial",
]
