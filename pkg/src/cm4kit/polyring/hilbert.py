"""Hilbert series of quotients by monomial ideals, with weighted grading."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .groebner import divides
from .ring import Monomial


# univariate integer polynomials as coefficient lists, index = exponent

def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def upoly_add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def upoly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def upoly_shift(a: Sequence[int], k: int) -> list[int]:
    return [0] * k + list(a) if a else []


def one_minus_t(w: int) -> list[int]:
    """Coefficients of 1 - T^w."""
    p = [0] * (w + 1)
    p[0] = 1
    p[w] -= 1
    return p


def upoly_divexact(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Exact division of integer polynomials; raises if there is a remainder."""
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    lead = b[-1]
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = a[:]
    for k in range(len(q) - 1, -1, -1):
        coeff = r[k + len(b) - 1]
        if coeff % lead:
            raise ValueError("inexact polynomial division")
        c = coeff // lead
        q[k] = c
        if c:
            for j, y in enumerate(b):
                r[k + j] -= c * y
    if any(_trim(r)):
        raise ValueError("inexact polynomial division")
    return _trim(q)


def upoly_str(p: Sequence[int], var: str = "T") -> str:
    parts = []
    for e, c in enumerate(p):
        if not c:
            continue
        if e == 0:
            body = str(abs(c))
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


@dataclass(frozen=True)
class HilbertSeries:
    """numerator / prod (1 - T^w)^mult"""

    numerator: tuple[int, ...]
    denominator: tuple[tuple[int, int], ...]  # sorted (weight, multiplicity)

    @classmethod
    def make(cls, numerator: Sequence[int], weights: Sequence[int]) -> HilbertSeries:
        den = tuple(sorted(Counter(weights).items()))
        return cls(tuple(_trim(list(numerator))), den)

    def denominator_poly(self) -> list[int]:
        out = [1]
        for w, k in self.denominator:
            for _ in range(k):
                out = upoly_mul(out, one_minus_t(w))
        return out

    def times_free(self, weights: Sequence[int]) -> HilbertSeries:
        """Multiply by 1/prod(1 - T^w): adjoin free variables of the given weights."""
        den = Counter(dict(self.denominator))
        den.update(weights)
        return HilbertSeries(self.numerator, tuple(sorted(den.items())))

    def over(self, denominator: Sequence[tuple[int, int]]) -> HilbertSeries:
        """Rewrite with the given denominator; raises ValueError if impossible."""
        target = HilbertSeries((1,), tuple(sorted(denominator)))
        num = upoly_mul(list(self.numerator), target.denominator_poly())
        return HilbertSeries(tuple(upoly_divexact(num, self.denominator_poly())), target.denominator)

    def same_series(self, other: HilbertSeries) -> bool:
        return (upoly_mul(list(self.numerator), other.denominator_poly())
                == upoly_mul(list(other.numerator), self.denominator_poly()))

    def coefficients(self, upto: int) -> list[int]:
        """Power-series coefficients of T^0..T^upto."""
        series = list(self.numerator[:upto + 1]) + [0] * max(0, upto + 1 - len(self.numerator))
        for w, k in self.denominator:
            for _ in range(k):
                for i in range(w, upto + 1):
                    series[i] += series[i - w]
        return series

    def numerator_at_one(self) -> int:
        return sum(self.numerator)

    def __str__(self) -> str:
        den = "".join(f"(1 - T^{w})" + (f"^{k}" if k > 1 else "") if w > 1
                      else "(1 - T)" + (f"^{k}" if k > 1 else "")
                      for w, k in sorted(self.denominator, reverse=True))
        return f"({upoly_str(self.numerator)}) / ({den})" if den else upoly_str(self.numerator)


def _minimalize(gens: list[Monomial]) -> list[Monomial]:
    gens = sorted(set(gens), key=sum)
    out: list[Monomial] = []
    for g in gens:
        if not any(divides(h, g) for h in out):
            out.append(g)
    return out


def _numerator(gens: list[Monomial], weights: Sequence[int]) -> list[int]:
    gens = _minimalize(gens)
    if not gens:
        return [1]
    if any(not any(g) for g in gens):
        return []  # unit ideal
    # pairwise coprime generators (includes pure powers): product formula
    support = Counter(i for g in gens for i, e in enumerate(g) if e)
    if all(c == 1 for c in support.values()):
        out = [1]
        for g in gens:
            out = upoly_mul(out, one_minus_t(sum(w * e for w, e in zip(weights, g))))
        return out
    # pivot on the most frequent variable among generators
    var = max(support, key=lambda i: (support[i], -i))
    exps = sorted(g[var] for g in gens if g[var])
    e = exps[(len(exps) - 1) // 2]
    pivot = tuple(e if i == var else 0 for i in range(len(weights)))
    # N(I) = N(I + <p>) + T^deg(p) * N(I : p)
    with_p = _numerator(gens + [pivot], weights)
    colon = [tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in gens]
    quot = _numerator(colon, weights)
    return upoly_add(with_p, upoly_shift(quot, e * weights[var]))


def hilbert_series(leading_monomials: Sequence[Monomial], weights: Sequence[int]) -> HilbertSeries:
    """Hilbert series of k[x_1..x_k]/(monomials) with deg x_i = weights[i]."""
    gens = [tuple(m) for m in leading_monomials]
    for g in gens:
        if len(g) != len(weights):
            raise ValueError("monomial length does not match number of weights")
    return HilbertSeries.make(_numerator(gens, weights), weights)


def hilbert_series_bruteforce(leading_monomials: Sequence[Monomial], weights: Sequence[int],
                              upto: int) -> list[int]:
    """Count standard monomials degree by degree (test oracle)."""
    gens = [tuple(m) for m in leading_monomials]
    counts = [0] * (upto + 1)
    n = len(weights)

    def rec(i, prefix, deg):
        if i == n:
            if not any(divides(g, prefix) for g in gens):
                counts[deg] += 1
            return
        e = 0
        while deg + e * weights[i] <= upto:
            rec(i + 1, prefix + (e,), deg + e * weights[i])
            e += 1

    rec(0, (), 0)
    return counts
