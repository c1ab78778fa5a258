"""Text grammar for polynomials.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INTEGER)?
    atom   := INTEGER | NAME | '(' expr ')'

Division is only allowed by a nonzero constant.  Names match
``[A-Za-z][A-Za-z0-9_]*``.
"""

from __future__ import annotations

import re

from ..errors import PolySyntaxError
from .poly import MultiPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    stop = len(text.rstrip())
    while pos < stop:
        m = _TOKEN.match(text, pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise PolySyntaxError(f"unexpected character {ch!r}", text, start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise PolySyntaxError(message, self.text, tok[2])

    def parse(self) -> MultiPoly:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.take()
            q = self.unary()
            if op[0] == "*":
                p = p * q
            else:
                if not q.is_constant():
                    self.fail("division by a non-constant", op)
                if q.is_zero():
                    self.fail("division by zero", op)
                p = p / q
        return p

    def unary(self):
        kind = self.peek()[0]
        if kind in ("+", "-"):
            self.take()
            p = self.unary()
            return -p if kind == "-" else p
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                self.fail("expected a non-negative integer exponent")
            self.take()
            return base ** tok[1]
        return base

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            return MultiPoly.const(tok[1])
        if tok[0] == "name":
            self.take()
            return MultiPoly.var(tok[1])
        if tok[0] == "(":
            self.take()
            p = self.expr()
            if self.peek()[0] != ")":
                self.fail("expected ')'")
            self.take()
            return p
        if tok[0] == "end":
            self.fail("unexpected end of input")
        self.fail(f"unexpected {tok[1]!r}")


def parse_poly(text: str) -> MultiPoly:
    """Parse ``text`` into a :class:`MultiPoly`; raises :class:`PolySyntaxError`."""
    return _Parser(text).parse()


def P(text: str) -> MultiPoly:
    """Short alias used throughout the package for literal polynomials."""
    return parse_poly(text)
