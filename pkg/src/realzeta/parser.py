"""Exact parsing of polynomial expressions in x and y.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := INT ("/" INT)? | "x" | "y" | "(" expr ")"

Juxtaposition is not multiplication, so "2x" is rejected.
"""

from __future__ import annotations

from fractions import Fraction

from .polys import BiPoly


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def offset(self, pos: int | None = None) -> int:
        return len(self.text[: self.pos if pos is None else pos].encode("utf-8"))

    def fail(self, message: str, pos: int | None = None):
        raise ParseError(message, self.offset(pos))

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected a nonnegative integer")
        return int(self.text[start:self.pos])

    def expr(self) -> BiPoly:
        out = self.term()
        while True:
            if self.take("+"):
                out = out + self.term()
            elif self.take("-"):
                out = out - self.term()
            else:
                return out

    def term(self) -> BiPoly:
        out = self.unary()
        while self.take("*"):
            out = out * self.unary()
        return out

    def unary(self) -> BiPoly:
        if self.take("-"):
            return -self.unary()
        if self.take("+"):
            return self.unary()
        return self.power()

    def power(self) -> BiPoly:
        base = self.atom()
        if self.take("^"):
            if self.peek() in ("+", "-"):
                self.fail("exponent must be a nonnegative integer")
            base = base ** self.integer()
        return base

    def atom(self) -> BiPoly:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if not self.take(")"):
                self.fail("expected ')'")
            return inner
        if ch.isdigit():
            value = Fraction(self.integer())
            if self.take("/"):
                den = self.integer()
                if den == 0:
                    self.fail("division by zero", self.pos - 1)
                value /= den
            return BiPoly.const(value)
        if ch.isalpha() or ch == "_":
            start = self.pos
            while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
                self.pos += 1
            name = self.text[start:self.pos]
            if name == "x":
                return BiPoly.x()
            if name == "y":
                return BiPoly.y()
            self.fail(f"unknown identifier {name!r}", start)
        if not ch:
            self.fail("unexpected end of input")
        self.fail(f"unexpected character {ch!r}")

    def parse(self) -> BiPoly:
        out = self.expr()
        if self.peek():
            self.fail(f"unexpected character {self.peek()!r}")
        return out


def parse_polynomial(text: str) -> BiPoly:
    return _Parser(text).parse()


def parse_factored(text: str) -> list[tuple[BiPoly, int]]:
    """Factors separated by ';', each optionally followed by ':exponent'."""
    out = []
    base = 0
    for chunk in text.split(";"):
        body, _, exp = chunk.partition(":")
        if not body.strip():
            raise ParseError("empty factor", len(text[:base].encode("utf-8")))
        try:
            poly = parse_polynomial(body)
        except ParseError as exc:
            raise ParseError(str(exc).rsplit(" at byte", 1)[0], len(text[:base].encode("utf-8")) + exc.offset) from None
        e = 1
        if exp.strip():
            if not exp.strip().isdigit() or int(exp) < 1:
                raise ParseError("exponent must be a positive integer", len(text[: base + len(body) + 1].encode("utf-8")))
            e = int(exp)
        out.append((poly, e))
        base += len(chunk) + 1
    return out
