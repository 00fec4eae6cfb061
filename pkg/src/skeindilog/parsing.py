"""Recursive-descent parser shared by scalar input and ``expand`` expressions.

Grammar (whitespace-insensitive)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" ["-" | "+"] INT | "^" "(" ["-"] INT ")")?
    atom   := INT | "s" | "q" | NAME "[" INT "," INT "]" | "(" expr ")"

``q`` stands for ``s^2``.  Generator atoms (``P[1,0]`` ...) are only legal
when a ``generators`` callback is supplied.
"""

from __future__ import annotations

import re
from typing import Callable

from .scalars import LaurentPoly, Scalar


class ParseError(ValueError):
    """Malformed input; ``position`` is the 0-based character offset."""

    def __init__(self, message: str, text: str, position: int):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}: {text!r}")


class SemanticError(ValueError):
    """Well-formed input that cannot be evaluated (e.g. Q of a bad direction)."""


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")

GeneratorFn = Callable[[str, int, int], object]


class _Parser:
    def __init__(self, text: str, generators: GeneratorFn | None):
        self.text = text
        self.generators = generators
        self.tokens: list[tuple[str, str, int]] = []
        for m in _TOKEN.finditer(text):
            if m.group(1) is not None:
                self.tokens.append(("int", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.tokens.append(("name", m.group(2), m.start(2)))
            elif m.group(3) is not None:
                self.tokens.append(("op", m.group(3), m.start(3)))
        self.pos = 0

    def error(self, message: str, at: int | None = None):
        if at is None:
            at = self.tokens[self.pos][2] if self.pos < len(self.tokens) else len(self.text)
        raise ParseError(message, self.text, at)

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def accept(self, op: str) -> bool:
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == op:
            self.pos += 1
            return True
        return False

    def expect(self, op: str):
        if not self.accept(op):
            self.error(f"expected {op!r}")

    def integer(self) -> int:
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        tok = self.peek()
        if tok is None or tok[0] != "int":
            self.error("expected integer")
        self.pos += 1
        return sign * int(tok[1])

    def parse(self):
        if not self.tokens:
            self.error("empty expression", 0)
        value = self.expr()
        if self.pos != len(self.tokens):
            self.error("unexpected token")
        return value

    def expr(self):
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            if self.accept("*"):
                value = value * self.unary()
            elif self.accept("/"):
                at = self.peek()[2] if self.peek() else len(self.text)
                divisor = self.unary()
                if not isinstance(divisor, Scalar):
                    raise SemanticError(f"division by a non-scalar at position {at}")
                if divisor.is_zero():
                    raise SemanticError(f"division by zero at position {at}")
                value = value * divisor.inv()
            else:
                return value

    def unary(self):
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self):
        value = self.atom()
        if self.accept("^"):
            at = self.peek()[2] if self.peek() else len(self.text)
            if self.accept("("):
                k = self.integer()
                self.expect(")")
            else:
                k = self.integer()
            if isinstance(value, Scalar):
                if k < 0 and value.is_zero():
                    raise SemanticError(f"zero raised to a negative power at position {at}")
                return value ** k
            if k < 0:
                raise SemanticError(f"negative power of a non-scalar at position {at}")
            return value ** k
        return value

    def atom(self):
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of input")
        kind, text, at = tok
        if kind == "int":
            self.pos += 1
            return Scalar.coerce(int(text))
        if kind == "op" and text == "(":
            self.pos += 1
            value = self.expr()
            self.expect(")")
            return value
        if kind == "name":
            self.pos += 1
            if text == "s":
                return Scalar(LaurentPoly.monomial(1))
            if text == "q":
                return Scalar(LaurentPoly.monomial(2))
            if self.generators is None:
                self.error(f"unknown symbol {text!r}", at)
            self.expect("[")
            i = self.integer()
            self.expect(",")
            j = self.integer()
            self.expect("]")
            return self.generators(text, i, j)
        self.error(f"unexpected {text!r}")


def parse_expression(text: str, generators: GeneratorFn | None = None):
    """Parse and evaluate ``text``; scalars come back as :class:`Scalar`."""
    return _Parser(text, generators).parse()
