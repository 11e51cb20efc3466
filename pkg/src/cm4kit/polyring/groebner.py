"""Division, S-polynomials, the Buchberger criterion and Buchberger completion."""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .ring import Monomial, Polynomial, TermOrder

log = logging.getLogger(__name__)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


class _Reducer:
    """A fixed list of divisors prepared for repeated reduction."""

    def __init__(self, polys: Sequence[Polynomial], order: TermOrder):
        self.order = order
        self.leads: list[Monomial] = []
        self.tails: list[list[tuple[Monomial, Fraction]]] = []
        self.lcs: list[Fraction] = []
        for g in polys:
            if g.is_zero():
                raise ValueError("zero polynomial in divisor list")
            self.add(g)

    def add(self, g: Polynomial) -> None:
        lm = g.leading_monomial(self.order)
        lc = g.terms[lm]
        self.leads.append(lm)
        self.lcs.append(lc)
        self.tails.append([(m, c / lc) for m, c in g.terms.items() if m != lm])

    def find_divisor(self, m: Monomial, active=None) -> int | None:
        for i, lm in enumerate(self.leads):
            if (active is None or i in active) and divides(lm, m):
                return i
        return None

    def reduce(self, terms: dict, active=None, quotients: list[dict] | None = None) -> dict:
        """Full reduction of ``terms``; returns the remainder's term dict.

        If ``quotients`` is given, quotients[i] accumulates the multiplier of
        divisor i so that f = sum q_i g_i + r.
        """
        key = self.order.key
        p = dict(terms)
        heap = [(_neg(key(m)), m) for m in p]
        heapq.heapify(heap)
        rem = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = p.pop(m, None)
            if c is None:
                continue
            i = self.find_divisor(m, active)
            if i is None:
                rem[m] = c
                continue
            q = mono_div(m, self.leads[i])
            if quotients is not None:
                qi = quotients[i]
                qi[q] = qi.get(q, 0) + c / self.lcs[i]
            for tm, tc in self.tails[i]:
                mm = tuple(a + b for a, b in zip(tm, q))
                old = p.get(mm)
                if old is None:
                    p[mm] = -c * tc
                    heapq.heappush(heap, (_neg(key(mm)), mm))
                else:
                    new = old - c * tc
                    if new:
                        p[mm] = new
                    else:
                        del p[mm]
        return rem


def _neg(k: tuple) -> tuple:
    return tuple(-x for x in k)


def _check_rings(f: Polynomial, G: Sequence[Polynomial]) -> None:
    for g in G:
        if g.ring != f.ring:
            raise ValueError("ring mismatch between polynomial and divisors")


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: TermOrder) -> Polynomial:
    """Remainder of full multivariate division of f by G (divisors tried in list order)."""
    if not G:
        raise ValueError("empty divisor list")
    _check_rings(f, G)
    return Polynomial(f.ring, _Reducer(G, order).reduce(f.terms))


def divide(f: Polynomial, G: Sequence[Polynomial], order: TermOrder) -> tuple[list[Polynomial], Polynomial]:
    """Division with recorded quotients: f == sum(q*g) + r."""
    if not G:
        raise ValueError("empty divisor list")
    _check_rings(f, G)
    red = _Reducer(G, order)
    quotients: list[dict] = [{} for _ in G]
    rem = red.reduce(f.terms, quotients=quotients)
    return [Polynomial(f.ring, q) for q in quotients], Polynomial(f.ring, rem)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial")
    if f.ring != g.ring:
        raise ValueError("ring mismatch")
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    l = mono_lcm(lf, lg)
    return (f.mul_term(mono_div(l, lf), 1 / f.terms[lf])
            - g.mul_term(mono_div(l, lg), 1 / g.terms[lg]))


@dataclass
class GBCheck:
    passed: bool
    failing: list[tuple[int, int, Polynomial]] = field(default_factory=list)
    pairs_checked: int = 0
    pairs_skipped: int = 0


def gb_check(G: Sequence[Polynomial], order: TermOrder, stop_at_first: bool = False,
             chain: bool = True) -> GBCheck:
    """Buchberger criterion: every S-pair reduces to zero modulo G.

    Pairs with coprime leading monomials are skipped (product criterion). With
    ``chain``, a pair (i, j) is also skipped when some third leading monomial
    L_k divides lcm(L_i, L_j) and both lcm(L_i, L_k) and lcm(L_j, L_k) divide it
    strictly; by induction on the lcm under divisibility, S(i, j) then has a
    standard representation whenever all unskipped pairs reduce to zero.
    """
    if not G:
        raise ValueError("empty basis")
    G = [g for g in G if not g.is_zero()]
    red = _Reducer(G, order)
    leads = red.leads
    result = GBCheck(passed=True)
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if coprime(leads[i], leads[j]):
                result.pairs_skipped += 1
                continue
            if chain:
                l = mono_lcm(leads[i], leads[j])
                if any(k != i and k != j and divides(leads[k], l)
                       and mono_lcm(leads[i], leads[k]) != l and mono_lcm(leads[j], leads[k]) != l
                       for k in range(len(G))):
                    result.pairs_skipped += 1
                    continue
            s = s_polynomial(G[i], G[j], order)
            r = red.reduce(s.terms)
            result.pairs_checked += 1
            if r:
                result.passed = False
                result.failing.append((i, j, Polynomial(s.ring, r)))
                if stop_at_first:
                    return result
    return result


def buchberger(F: Sequence[Polynomial], order: TermOrder, max_pairs: int | None = None) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by F.

    Pair bookkeeping follows Gebauer-Moeller; pairs are processed by
    increasing sugar degree. The result is monic, interreduced and sorted by
    increasing leading monomial.
    """
    F = [f for f in F if not f.is_zero()]
    if not F:
        raise ValueError("empty generating set")
    ring = F[0].ring
    for f in F:
        if f.ring != ring:
            raise ValueError("ring mismatch")
    if any(f.terms.keys() == {ring.one_monomial()} for f in F):
        return [ring.one()]

    red = _Reducer([], order)
    polys: list[Polynomial] = []
    sugars: list[int] = []
    active: set[int] = set()
    pairs: dict[tuple[int, int], tuple] = {}

    def wdeg(m):
        return sum(w * e for w, e in zip(order.weights, m))

    def pair_sugar(i, j):
        l = mono_lcm(red.leads[i], red.leads[j])
        s = max(sugars[i] + wdeg(mono_div(l, red.leads[i])), sugars[j] + wdeg(mono_div(l, red.leads[j])))
        return (s, order.key(l), i, j)

    def update(h: int) -> None:
        lh = red.leads[h]
        cands = sorted(active)
        lcms = {g: mono_lcm(red.leads[g], lh) for g in cands}
        kept: list[int] = []
        for idx, g in enumerate(cands):
            rest = cands[idx + 1:] + kept
            if coprime(red.leads[g], lh) or not any(divides(lcms[g2], lcms[g]) for g2 in rest):
                kept.append(g)
        for (g1, g2) in list(pairs):
            l12 = mono_lcm(red.leads[g1], red.leads[g2])
            if (divides(lh, l12) and mono_lcm(red.leads[g1], lh) != l12
                    and mono_lcm(red.leads[g2], lh) != l12):
                del pairs[(g1, g2)]
        for g in kept:
            if not coprime(red.leads[g], lh):
                pairs[(g, h)] = pair_sugar(g, h)
        for g in list(active):
            if divides(lh, red.leads[g]):
                active.discard(g)
        active.add(h)

    def insert(p: Polynomial, sugar: int) -> None:
        p = p.monic(order)
        polys.append(p)
        sugars.append(sugar)
        red.add(p)
        update(len(polys) - 1)

    for f in sorted(F, key=lambda f: order.key(f.leading_monomial(order))):
        r = red.reduce(f.terms, active) if polys else f.terms
        if r:
            insert(Polynomial(ring, r), max(wdeg(m) for m in r))

    processed = 0
    while pairs:
        (i, j), info = min(pairs.items(), key=lambda kv: kv[1])
        del pairs[(i, j)]
        s = s_polynomial(polys[i], polys[j], order)
        r = red.reduce(s.terms, active)
        processed += 1
        if r:
            rp = Polynomial(ring, r)
            if rp.terms.keys() == {ring.one_monomial()}:
                return [ring.one()]
            insert(rp, info[0])
            log.debug("pair %d: new element %d, lm deg %d, %d pairs queued",
                      processed, len(polys) - 1, wdeg(red.leads[-1]), len(pairs))
        if max_pairs is not None and processed >= max_pairs:
            raise RuntimeError(f"buchberger exceeded {max_pairs} pairs")

    return reduce_basis([polys[i] for i in sorted(active)], order)


def reduce_basis(G: Sequence[Polynomial], order: TermOrder) -> list[Polynomial]:
    """Minimalize, interreduce and make monic a Groebner basis; sorted by leading monomial."""
    G = [g for g in G if not g.is_zero()]
    G.sort(key=lambda g: order.key(g.leading_monomial(order)))
    minimal: list[Polynomial] = []
    leads: list[Monomial] = []
    for g in G:
        lm = g.leading_monomial(order)
        if any(divides(l, lm) for l in leads):
            continue
        minimal = [h for h, l in zip(minimal, leads) if not divides(lm, l)] + [g]
        leads = [h.leading_monomial(order) for h in minimal]
    out = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        g = g.monic(order)
        if others:
            lm = g.leading_monomial(order)
            tail = {m: c for m, c in g.terms.items() if m != lm}
            rem = _Reducer(others, order).reduce(tail)
            rem[lm] = Fraction(1)
            g = Polynomial(g.ring, rem)
        out.append(g)
    out.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return out


def leading_monomials(G: Sequence[Polynomial], order: TermOrder) -> list[Monomial]:
    return [g.leading_monomial(order) for g in G if not g.is_zero()]
