"""Exception hierarchy shared by every module of the package."""


class HitchinError(Exception):
    """Base class for all errors raised by :mod:`hitchin3`."""


class DivisionByZero(HitchinError, ZeroDivisionError):
    pass


class ZeroPolynomial(HitchinError, ValueError):
    pass


class MalformedInput(HitchinError, ValueError):
    pass


class FieldTooSmall(HitchinError):
    """The degenerate spectral data needs constants outside Q(i, 2^(1/3))."""


class IdentityViolated(HitchinError):
    """An identity that must hold exactly came out with a nonzero residual.

    These identities are theorems, so seeing this means an arithmetic bug.
    """

    def __init__(self, name, residual=None):
        self.name = name
        self.residual = residual
        msg = f"identity {name!r} violated"
        if residual is not None:
            msg += f" (residual {residual})"
        super().__init__(msg)


class InvalidPuncture(HitchinError, ValueError):
    pass


class HypothesisViolated(HitchinError, ValueError):
    pass


class ParseError(HitchinError, ValueError):
    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)
