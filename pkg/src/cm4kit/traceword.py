"""Cyclic words in x, y, the necklace bracket, and trace polynomials evaluated on matrix pairs.

A :class:`CyclicWord` stands for the trace function Tr(w(X, Y)). A
:class:`WordSum` is a rational combination of such traces, and a
:class:`TraceExpr` is a polynomial in them (products of traces), which is
what the generators a_i become once A = X - Tr(X)/n and B = Y - Tr(Y)/n are
multiplied out.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence, Union

from .exactmat import RationalMatrix, as_fraction, traceless

LETTERS = ("x", "y")


def _omega(a: str, b: str) -> int:
    if a == b:
        return 0
    return 1 if a == "x" else -1


@lru_cache(maxsize=4096)
def canonical_rotation(letters: str) -> str:
    if not letters:
        return ""
    return min(letters[i:] + letters[:i] for i in range(len(letters)))


@dataclass(frozen=True, order=True)
class CyclicWord:
    letters: str

    def __post_init__(self):
        if set(self.letters) - set(LETTERS):
            raise ValueError(f"words use only x and y, got {self.letters!r}")
        object.__setattr__(self, "letters", canonical_rotation(self.letters))

    def __len__(self):
        return len(self.letters)

    def bidegree(self) -> tuple[int, int]:
        return self.letters.count("x"), self.letters.count("y")

    def swap(self) -> CyclicWord:
        return CyclicWord(self.letters.translate(str.maketrans("xy", "yx")))

    def __str__(self):
        return self.letters or "1"


EMPTY = CyclicWord("")


def word(letters: str) -> CyclicWord:
    return CyclicWord("" if letters == "1" else letters)


class WordSum:
    """Finite rational combination of cyclic words (a linear trace function)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[CyclicWord, Fraction] | None = None):
        self.terms = {w: as_fraction(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def of(cls, *words: str | CyclicWord) -> WordSum:
        out: dict = {}
        for w in words:
            w = w if isinstance(w, CyclicWord) else word(w)
            out[w] = out.get(w, 0) + 1
        return cls(out)

    def __eq__(self, other):
        return isinstance(other, WordSum) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: WordSum) -> WordSum:
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return WordSum(out)

    def __neg__(self):
        return WordSum({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: WordSum) -> WordSum:
        return self + (-other)

    def scale(self, c) -> WordSum:
        c = as_fraction(c)
        return WordSum({w: c * v for w, v in self.terms.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda wc: (-len(wc[0]), wc[0].letters)):
            mag = abs(c)
            coeff = "" if mag == 1 and w.letters else f"{mag}*" if w.letters else f"{mag}"
            body = coeff + (w.letters if w.letters else "")
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    __repr__ = __str__


_WS_TERM = re.compile(r"^(?:(\d+(?:/\d+)?)\*?)?([xy]*)$")


def parse_wordsum(text: str) -> WordSum:
    """Parse e.g. ``3/2*xxyy - xy + 1``; a bare number c means c times the empty word."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty word sum")
    out: dict = {}
    for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
        mo = _WS_TERM.match(body)
        if mo is None or not body:
            raise ValueError(f"cannot parse word-sum term {body!r}")
        coeff, letters = mo.groups()
        if coeff is None and not letters:
            raise ValueError(f"cannot parse word-sum term {body!r}")
        c = Fraction(coeff) if coeff else Fraction(1)
        w = CyclicWord(letters)
        out[w] = out.get(w, 0) + (-c if sign == "-" else c)
    return WordSum(out)


def necklace_bracket(u: CyclicWord | WordSum, v: CyclicWord | WordSum) -> WordSum:
    """{u, v} = sum_ij omega(u_i, v_j) u_{i+1}..u_{i-1} v_{j+1}..v_{j-1}; bilinear on WordSums."""
    if isinstance(u, WordSum) or isinstance(v, WordSum):
        us = u if isinstance(u, WordSum) else WordSum({u: 1})
        vs = v if isinstance(v, WordSum) else WordSum({v: 1})
        out = WordSum()
        for wu, cu in us.terms.items():
            for wv, cv in vs.terms.items():
                out = out + _bracket_words(wu.letters, wv.letters).scale(cu * cv)
        return out
    return _bracket_words(u.letters, v.letters)


@lru_cache(maxsize=65536)
def _bracket_words(u: str, v: str) -> WordSum:
    out: dict = {}
    for i, a in enumerate(u):
        for j, b in enumerate(v):
            s = _omega(a, b)
            if s:
                w = CyclicWord(u[i + 1:] + u[:i] + v[j + 1:] + v[:j])
                out[w] = out.get(w, 0) + s
    return WordSum(out)


def _cuts(letters: str, letter: str) -> list[str]:
    return [letters[i + 1:] + letters[:i] for i, a in enumerate(letters) if a == letter]


def cyclic_gradient(ws: WordSum | CyclicWord, letter: str) -> dict[str, Fraction]:
    """Formal sum of linear words: cut each cyclic word at every occurrence of ``letter``."""
    if letter not in LETTERS:
        raise ValueError("letter must be 'x' or 'y'")
    if isinstance(ws, CyclicWord):
        ws = WordSum({ws: 1})
    out: dict[str, Fraction] = {}
    for w, c in ws.terms.items():
        for cut in _cuts(w.letters, letter):
            out[cut] = out.get(cut, 0) + c
    return {k: v for k, v in out.items() if v}


# evaluation ----------------------------------------------------------------

class _WordEvaluator:
    """Caches matrix products of prefixes for one (X, Y) pair."""

    def __init__(self, X: RationalMatrix, Y: RationalMatrix):
        if not (X.is_square and (X.rows, X.cols) == (Y.rows, Y.cols)):
            raise ValueError("X and Y must be square of equal size")
        self.n = X.rows
        self.mats = {"x": X, "y": Y}
        self.cache: dict[str, RationalMatrix] = {"": RationalMatrix.identity(self.n)}
        self.traces: dict[str, Fraction] = {}

    def matrix(self, letters: str) -> RationalMatrix:
        m = self.cache.get(letters)
        if m is None:
            m = self.matrix(letters[:-1]) @ self.mats[letters[-1]]
            self.cache[letters] = m
        return m

    def trace(self, w: CyclicWord) -> Fraction:
        t = self.traces.get(w.letters)
        if t is None:
            t = self.matrix(w.letters).trace()
            self.traces[w.letters] = t
        return t


def eval_word(w: CyclicWord | str, X: RationalMatrix, Y: RationalMatrix) -> Fraction:
    w = w if isinstance(w, CyclicWord) else word(w)
    return _WordEvaluator(X, Y).trace(w)


def eval_wordsum(ws: WordSum, X: RationalMatrix, Y: RationalMatrix) -> Fraction:
    ev = _WordEvaluator(X, Y)
    return sum((c * ev.trace(w) for w, c in ws.terms.items()), Fraction(0))


# trace polynomials -------------------------------------------------------------

Factors = tuple  # sorted tuple of CyclicWords, a product of traces


def _mul_factors(a: Factors, b: Factors) -> Factors:
    return tuple(sorted(a + b))


class TraceExpr:
    """Polynomial in traces of words: maps sorted factor tuples to coefficients.

    The empty factor tuple is the constant 1; the empty *word* is Tr(I).
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Factors, Fraction] | None = None):
        self.terms = {tuple(sorted(k)): as_fraction(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, c) -> TraceExpr:
        return cls({(): as_fraction(c)})

    @classmethod
    def trace(cls, w: CyclicWord | str) -> TraceExpr:
        w = w if isinstance(w, CyclicWord) else word(w)
        return cls({(w,): Fraction(1)})

    @classmethod
    def from_wordsum(cls, ws: WordSum) -> TraceExpr:
        return cls({(w,): c for w, c in ws.terms.items()})

    def __eq__(self, other):
        return isinstance(other, TraceExpr) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _coerce(self, other) -> TraceExpr:
        if isinstance(other, TraceExpr):
            return other
        if isinstance(other, WordSum):
            return TraceExpr.from_wordsum(other)
        return TraceExpr.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TraceExpr(out)

    __radd__ = __add__

    def __neg__(self):
        return TraceExpr({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, str)):
            c = as_fraction(other)
            return TraceExpr({k: c * v for k, v in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = _mul_factors(k1, k2)
                out[k] = out.get(k, 0) + c1 * c2
        return TraceExpr(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = TraceExpr.const(1)
        for _ in range(k):
            out = out * self
        return out

    def substitute_identity_trace(self, n: int) -> TraceExpr:
        """Replace every factor Tr(I) (the empty word) by n."""
        out: dict = {}
        for k, c in self.terms.items():
            nempty = sum(1 for w in k if not w.letters)
            rest = tuple(w for w in k if w.letters)
            out[rest] = out.get(rest, 0) + c * n ** nempty
        return TraceExpr(out)

    def swap(self) -> TraceExpr:
        """Exchange the letters x and y."""
        return TraceExpr({tuple(w.swap() for w in k): c for k, c in self.terms.items()})

    def evaluate(self, X: RationalMatrix, Y: RationalMatrix) -> Fraction:
        ev = _WordEvaluator(X, Y)
        total = Fraction(0)
        for k, c in self.terms.items():
            t = c
            for w in k:
                t *= ev.trace(w)
            total += t
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in sorted(self.terms.items(), key=lambda kc: (-sum(len(w) for w in kc[0]), kc[0])):
            body = "*".join(f"Tr({w.letters})" if w.letters else "Tr(1)" for w in k)
            mag = abs(c)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    __repr__ = __str__


def parse_trace_expr(text: str) -> TraceExpr:
    """Parse products of traces: words are trace factors, numbers are scalars.

    Example: ``1/2*xx*xxyy + 1/3*xxx*xyy - 6``.
    """
    from .polyring.parse import PolynomialParseError  # noqa: F401  (shared error type)
    tokens = re.findall(r"\d+(?:/\d+)?|[xy]+|[()*+^-]|\S", text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr():
        e = term()
        while peek() in ("+", "-"):
            op = take()
            t = term()
            e = e + t if op == "+" else e - t
        return e

    def term():
        t = factor()
        while peek() == "*":
            take()
            t = t * factor()
        return t

    def factor():
        if peek() in ("+", "-"):
            op = take()
            f = factor()
            return -f if op == "-" else f
        tok = take()
        if tok is None:
            raise ValueError("unexpected end of trace expression")
        if tok == "(":
            e = expr()
            if take() != ")":
                raise ValueError("missing ')'")
            base = e
        elif re.fullmatch(r"\d+(?:/\d+)?", tok):
            base = TraceExpr.const(Fraction(tok))
        elif re.fullmatch(r"[xy]+", tok):
            base = TraceExpr.trace(tok)
        else:
            raise ValueError(f"unexpected token {tok!r}")
        if peek() == "^":
            take()
            base = base ** int(take())
        return base

    result = expr()
    if pos != len(tokens):
        raise ValueError(f"unexpected token {tokens[pos]!r}")
    return result


def trace_bracket(f: TraceExpr, g: TraceExpr) -> TraceExpr:
    """Symbolic bracket of trace polynomials: necklace bracket on factors, Leibniz on products."""
    out = TraceExpr()
    for kf, cf in f.terms.items():
        for kg, cg in g.terms.items():
            for i, u in enumerate(kf):
                rest_f = kf[:i] + kf[i + 1:]
                for j, v in enumerate(kg):
                    b = _bracket_words(u.letters, v.letters)
                    if not b:
                        continue
                    rest = _mul_factors(rest_f, kg[:j] + kg[j + 1:])
                    out = out + TraceExpr({_mul_factors(rest, (w,)): cf * cg * c
                                           for w, c in b.terms.items()})
    return out


# generators ----------------------------------------------------------------

def _generator_word(i: int, n: int) -> tuple[int, int]:
    from .varieties import generator_count, generator_exponents
    if not 1 <= i <= generator_count(n):
        raise ValueError(f"generator index {i} out of range for n={n}")
    if i in (1, 2):
        return (1, 0) if i == 1 else (0, 1)
    return generator_exponents(n)[i - 3]


def expand_generator(i: int, n: int = 4) -> TraceExpr:
    """a_i in terms of traces of words in x, y, via A = x - Tr(x)/n, B = y - Tr(y)/n."""
    if n < 2:
        raise ValueError("n must be at least 2")
    p, q = _generator_word(i, n)
    if i in (1, 2):
        return TraceExpr.trace("x" if i == 1 else "y")
    letters = "x" * p + "y" * q
    shift = {"x": TraceExpr.trace("x") * Fraction(-1, n), "y": TraceExpr.trace("y") * Fraction(-1, n)}
    out = TraceExpr()
    for keep in product((True, False), repeat=len(letters)):
        kept = "".join(a for a, k in zip(letters, keep) if k)
        term = TraceExpr.trace(kept)
        for a, k in zip(letters, keep):
            if not k:
                term = term * shift[a]
        out = out + term
    return out.substitute_identity_trace(n)


def generator_trace_expr(i: int, n: int = 4) -> TraceExpr:
    """a_i as a single trace Tr(A^p B^q), to be evaluated at traceless matrices."""
    p, q = _generator_word(i, n)
    return TraceExpr.trace("x" * p + "y" * q)


# Poisson bracket through matrix gradients -----------------------------------------

def _gradient(f: TraceExpr, letter: str, ev: _WordEvaluator) -> RationalMatrix:
    n = ev.n
    total = RationalMatrix.zeros(n)
    for k, c in f.terms.items():
        vals = [ev.trace(w) for w in k]
        for i, w in enumerate(k):
            cuts = _cuts(w.letters, letter)
            if not cuts:
                continue
            coeff = c
            for j, v in enumerate(vals):
                if j != i:
                    coeff *= v
            if not coeff:
                continue
            g = RationalMatrix.zeros(n)
            for cut in cuts:
                g = g + ev.matrix(cut)
            total = total + g.scale(coeff)
    return total


def poisson_numeric(f: TraceExpr, g: TraceExpr, X: RationalMatrix, Y: RationalMatrix) -> Fraction:
    """Tr(dF/dX dG/dY - dF/dY dG/dX) at (X, Y); gives {Tr X, Tr Y} = n."""
    ev = _WordEvaluator(X, Y)
    fx, fy = _gradient(f, "x", ev), _gradient(f, "y", ev)
    gx, gy = _gradient(g, "x", ev), _gradient(g, "y", ev)
    return (fx @ gy - fy @ gx).trace()


def verify_identity_at(lhs: TraceExpr | WordSum, rhs: TraceExpr | WordSum, pt,
                       in_traceless: bool = True) -> bool:
    """Exact check lhs == rhs at a variety point.

    With ``in_traceless`` the letters x, y stand for the traceless parts A, B.
    """
    if not pt.is_valid():
        raise ValueError("point does not lie on its declared variety")
    lhs = TraceExpr.from_wordsum(lhs) if isinstance(lhs, WordSum) else lhs
    rhs = TraceExpr.from_wordsum(rhs) if isinstance(rhs, WordSum) else rhs
    X, Y = (traceless(pt.X), traceless(pt.Y)) if in_traceless else (pt.X, pt.Y)
    return (lhs - rhs).evaluate(X, Y) == 0


TraceLike = Union[TraceExpr, WordSum]


def product_of(exprs: Iterable[TraceExpr]) -> TraceExpr:
    out = TraceExpr.const(1)
    for e in exprs:
        out = out * e
    return out
