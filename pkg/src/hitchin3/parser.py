"""Recursive-descent parser for field coefficients.

Grammar (whitespace between tokens is ignored)::

    expr     := term (('+' | '-') term)*
    term     := unary ('*' unary)*
    unary    := '-' unary | power
    power    := atom ('^' signed_int)*
    atom     := rational | 'i' | 'c2' | '(' expr ')'
    rational := integer ('/' positive_integer)?

``c2`` is the real cube root of 2.  Error offsets count UTF-8 bytes.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, ParseError
from .field import ALPHA, I, FieldElem

__all__ = ["parse_coeff"]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def offset(self, pos: int | None = None) -> int:
        return len(self.text[: self.pos if pos is None else pos].encode("utf-8"))

    def fail(self, message: str, expected, pos: int | None = None):
        raise ParseError(message, self.offset(pos), expected)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, token: str) -> bool:
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def digits(self, expected) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            self.fail("expected a number", expected)
        return int(self.text[start : self.pos])

    def expr(self) -> FieldElem:
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> FieldElem:
        value = self.unary()
        while self.accept("*"):
            value = value * self.unary()
        return value

    def unary(self) -> FieldElem:
        if self.accept("-"):
            return -self.unary()
        return self.power()

    def power(self) -> FieldElem:
        value = self.atom()
        while self.accept("^"):
            at = self.pos
            sign = -1 if self.accept("-") else 1
            n = sign * self.digits(["integer", "-"])
            try:
                value = value**n
            except DivisionByZero:
                self.fail("negative power of zero", ["nonzero base"], at)
        return value

    def atom(self) -> FieldElem:
        c = self.peek()
        if c == "(":
            self.pos += 1
            value = self.expr()
            if not self.accept(")"):
                self.fail("unbalanced parenthesis", [")", "+", "-", "*", "^"])
            return value
        if self.accept("c2"):
            return ALPHA
        if self.accept("i"):
            return I
        if c and c in "0123456789":
            num = self.digits(["integer"])
            if self.accept("/"):
                at = self.pos
                den = self.digits(["positive integer"])
                if den == 0:
                    self.fail("zero denominator", ["positive integer"], at)
                return FieldElem(Fraction(num, den))
            return FieldElem(num)
        self.fail("unexpected input" if c else "unexpected end of input", ["(", "c2", "i", "integer", "-"])


def parse_coeff(expr: str) -> FieldElem:
    p = _Parser(expr)
    value = p.expr()
    if p.peek():
        p.fail("trailing input", ["+", "-", "*", "^", "end of input"])
    return value
