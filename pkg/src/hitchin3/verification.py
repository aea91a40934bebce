"""Structured log of exact identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import IdentityViolated


def _is_zero(value) -> bool:
    if isinstance(value, (list, tuple)):
        return all(_is_zero(v) for v in value)
    return not value


def _render(value) -> str:
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_render(v) for v in value) + ")"
    if hasattr(value, "render"):
        return value.render()
    return str(value)


@dataclass(frozen=True)
class Check:
    name: str
    holds: bool
    expected: bool = True
    residual: str | None = None
    detail: str | None = None

    @property
    def ok(self) -> bool:
        return self.holds == self.expected

    @property
    def status(self) -> str:
        if self.holds:
            return "pass"
        return "fail (expected)" if not self.expected else "fail"

    def as_dict(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.residual is not None:
            out["residual"] = self.residual
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass
class VerificationLog:
    checks: list[Check] = field(default_factory=list)

    def residual(self, name: str, value, *, expected: bool = True, detail=None) -> bool:
        """Record that ``value`` (a scalar or vector residual) should vanish."""
        holds = _is_zero(value)
        self.checks.append(
            Check(name, holds, expected, None if holds else _render(value), detail)
        )
        return holds

    def equal(self, name: str, lhs, rhs, *, expected: bool = True, detail=None) -> bool:
        if isinstance(lhs, (list, tuple)):
            diff = [a - b for a, b in zip(lhs, rhs)]
        else:
            diff = lhs - rhs
        return self.residual(name, diff, expected=expected, detail=detail)

    def condition(self, name: str, holds: bool, *, detail=None) -> bool:
        self.checks.append(Check(name, bool(holds), True, None, detail))
        return bool(holds)

    def extend(self, other: VerificationLog, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(
                Check(prefix + c.name, c.holds, c.expected, c.residual, c.detail)
            )

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def require(self) -> VerificationLog:
        bad = self.failures()
        if bad:
            raise IdentityViolated(bad[0].name, bad[0].residual)
        return self

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def as_list(self) -> list[dict]:
        return [c.as_dict() for c in self.checks]
