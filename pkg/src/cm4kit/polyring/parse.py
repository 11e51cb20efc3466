"""Text format for polynomials.

Grammar (whitespace insignificant)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ('+' | '-') factor | atom ('^' INT)?
    atom   := INT ('/' INT)? | NAME | '(' expr ')'

Parentheses are accepted on input; output never uses them.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .ring import PolyRing, Polynomial, TermOrder

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class PolynomialParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class _Parser:
    def __init__(self, text: str, ring: PolyRing, line: int):
        self.text = text
        self.ring = ring
        self.line = line
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            mo = _TOKEN.match(text, pos)
            if mo is None or mo.end() == pos:
                break
            num, name, sym = mo.groups()
            col = mo.start(mo.lastindex) + 1
            if num is not None:
                self.tokens.append(("int", num, col))
            elif name is not None:
                self.tokens.append(("name", name, col))
            else:
                self.tokens.append(("sym", sym, col))
            pos = mo.end()
        self.tokens.append(("end", "", len(text.rstrip()) + 1))
        self.i = 0

    def error(self, message: str, col: int | None = None):
        if col is None:
            col = self.tokens[self.i][2]
        raise PolynomialParseError(message, self.line, col)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_sym(self, s: str):
        kind, val, col = self.take()
        if kind != "sym" or val != s:
            self.error(f"expected {s!r}, found {val or 'end of input'!r}", col)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.error("empty polynomial")
        p = self.expr()
        kind, val, col = self.peek()
        if kind != "end":
            self.error(f"unexpected {val!r}", col)
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "sym" and val in "+-":
                self.take()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "sym" and val == "*":
                self.take()
                p = p * self.factor()
            else:
                return p

    def factor(self) -> Polynomial:
        kind, val, _ = self.peek()
        if kind == "sym" and val in "+-":
            self.take()
            f = self.factor()
            return -f if val == "-" else f
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "sym" and val == "^":
            self.take()
            k, v, c = self.take()
            if k != "int":
                self.error("exponent must be a non-negative integer", c)
            base = base ** int(v)
        return base

    def atom(self) -> Polynomial:
        kind, val, col = self.take()
        if kind == "int":
            num = int(val)
            k, v, _ = self.peek()
            if k == "sym" and v == "/":
                self.take()
                k2, v2, c2 = self.take()
                if k2 != "int":
                    self.error("invalid rational literal: denominator must be an integer", c2)
                if int(v2) == 0:
                    self.error("invalid rational literal: zero denominator", c2)
                return self.ring.const(Fraction(num, int(v2)))
            return self.ring.const(num)
        if kind == "name":
            try:
                return self.ring.var(val)
            except KeyError:
                self.error(f"unknown variable {val!r}", col)
        if kind == "sym" and val == "(":
            p = self.expr()
            self.expect_sym(")")
            return p
        self.error(f"unexpected {val or 'end of input'!r}", col)


def parse_polynomial(text: str, ring: PolyRing, line: int = 1) -> Polynomial:
    return _Parser(text, ring, line).parse()


def parse_polynomial_lines(text: str, ring: PolyRing) -> list[Polynomial]:
    """One polynomial per line; blank lines and ``#`` comments are skipped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append(parse_polynomial(raw, ring, line=lineno))
    return out


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(ring: PolyRing, m) -> str:
    parts = []
    for name, e in zip(ring.names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial, order: TermOrder | None = None) -> str:
    """Deterministic export form: terms in decreasing order, no parentheses."""
    if p.is_zero():
        return "0"
    pieces = []
    for m, c in p.sorted_terms(order):
        mono = format_monomial(p.ring, m)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
