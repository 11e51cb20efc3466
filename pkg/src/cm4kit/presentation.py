"""End-to-end certification of the presentations of C[C_4] and C[Com_4]."""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from .catalogue.brackets import is_pure
from .catalogue import cm4_all, data, default_table, derive_cm4, jacobiator, relations
from .catalogue.identities import cayley_hamilton_identities, cm_identities
from .exactmat import cayley_hamilton_residual, random_integer_matrix, traceless
from .polyring import (HilbertSeries, Polynomial, TermOrder, buchberger, drop_lower_terms,
                       format_polynomial, gb_check, hilbert_series, normal_form,
                       ratio_if_proportional)
from .polyring.groebner import divides
from .traceword import expand_generator, poisson_numeric
from .varieties import (CM, COM, a_ring, diagonal_ring, generators_at, random_cm_point,
                        random_com_point, symbolic_com_generators)

# a14 > a13 > ... > a1: the smallest variables are the ones revlex looks at first
CM4_ORDER = TermOrder(a_ring(4).weights, tuple(reversed(range(14))))

TARGET_HILBERT = HilbertSeries(tuple(data.HILBERT_NUMERATOR), tuple(data.HILBERT_DENOMINATOR))


@dataclass
class Check:
    name: str
    passed: bool
    witness: str | None = None
    ms: float = 0.0
    info: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "witness": self.witness,
                "ms": round(self.ms, 3)}


def timed(name: str, fn: Callable[[], tuple]) -> Check:
    """Run fn() -> (passed, witness[, info]) and wrap it in a timed Check."""
    t0 = time.perf_counter()
    out = fn()
    ms = (time.perf_counter() - t0) * 1000
    passed, witness = out[0], out[1]
    info = out[2] if len(out) > 2 else {}
    return Check(name, bool(passed), None if passed else witness, ms, info)


@dataclass
class PresentationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    order: TermOrder | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def extend(self, checks: Iterable[Check]) -> None:
        self.checks.extend(checks)

    def to_json(self, config: dict | None = None) -> dict:
        cfg = dict(config or {})
        if self.order is not None:
            cfg.setdefault("order", self.order.to_dict(a_ring(4)))
        return {"suite": self.suite, "checks": [c.to_json() for c in self.checks], "config": cfg}

    def to_text(self) -> str:
        lines = [f"suite {self.suite}"]
        for c in self.checks:
            lines.append(f"  [{c.status.upper()}] {c.name} ({c.ms:.0f} ms)")
            if c.witness:
                lines.append(f"         witness: {c.witness}")
        lines.append(f"{sum(c.passed for c in self.checks)}/{len(self.checks)} checks passed")
        return "\n".join(lines) + "\n"


# Groebner bases ----------------------------------------------------------------

@lru_cache(maxsize=None)
def groebner_basis_cm4(order: TermOrder = CM4_ORDER) -> tuple[Polynomial, ...]:
    """Reduced Groebner basis of I, completed from the 12 generators."""
    return tuple(buchberger(list(relations("CM4")), order))


@lru_cache(maxsize=None)
def certified_basis_cm4(order: TermOrder = CM4_ORDER) -> tuple[Polynomial, ...]:
    """The completed basis after re-checking the Buchberger criterion and generator membership."""
    G = list(groebner_basis_cm4(order))
    if not gb_check(G, order, stop_at_first=True).passed:
        raise ValueError("computed basis fails the Buchberger criterion")
    if any(not normal_form(f, G, order).is_zero() for f in relations("CM4")):
        raise ValueError("a generator of I does not reduce to zero")
    return tuple(G)


def _name_of(i: int, names: list[str]) -> str:
    return names[i] if i < len(names) else f"#{i}"


def certify_gb_cm4(order: TermOrder = CM4_ORDER, complete: bool = True,
                   polys: dict[str, Polynomial] | None = None) -> list[Check]:
    """Buchberger criterion on the 15 catalogue polynomials, then completion from the 12."""
    polys = polys if polys is not None else cm4_all().polynomials
    names = list(polys)
    R = a_ring(4)

    def criterion():
        res = gb_check(list(polys.values()), order, stop_at_first=True)
        witness = None
        if res.failing:
            i, j, rem = res.failing[0]
            witness = (f"S({_name_of(i, names)},{_name_of(j, names)}) reduces to a nonzero remainder"
                       f" with leading monomial {format_polynomial(R.monomial(rem.leading_monomial(order)))}")
        return res.passed, witness, {"pairs_checked": res.pairs_checked}

    checks = [timed("groebner: 15 catalogue polynomials satisfy the Buchberger criterion", criterion)]
    if not complete:
        return checks

    def completion():
        G = groebner_basis_cm4(order)
        unmatched_g = [g for g in G if not any(ratio_if_proportional(p, g) is not None
                                               for p in polys.values())]
        unmatched_p = [k for k, p in polys.items()
                       if not any(ratio_if_proportional(p, g) is not None for g in G)]
        ok = not unmatched_g and not unmatched_p
        witness = (f"completion has {len(G)} elements; catalogue members without a scalar match:"
                   f" {', '.join(unmatched_p) or 'none'}; basis elements without a match, by leading"
                   " monomial: " + (", ".join(format_polynomial(R.monomial(g.leading_monomial(order)))
                                             for g in unmatched_g) or "none"))
        return ok, witness, {"size": len(G)}

    def certified():
        G = list(groebner_basis_cm4(order))
        res = gb_check(G, order, stop_at_first=True)
        gens_in = all(normal_form(f, G, order).is_zero() for f in relations("CM4"))
        cat_in = [k for k, p in polys.items() if not normal_form(p, G, order).is_zero()]
        ok = res.passed and gens_in and not cat_in
        return ok, f"criterion {res.passed}, generators reduce {gens_in}, outside: {cat_in}"

    checks.append(timed("groebner: completion of the 12 generators equals the 15 up to scalars",
                        completion))
    checks.append(timed("groebner: completed basis is certified and contains the catalogue", certified))
    return checks


def hilbert_from_basis(G: Iterable[Polynomial], order: TermOrder) -> HilbertSeries:
    G = list(G)
    return hilbert_series([g.leading_monomial(order) for g in G], G[0].ring.weights)


def certify_hilbert_cm4(order: TermOrder = CM4_ORDER) -> tuple[Check, HilbertSeries]:
    """Hilbert series of Q[a1..a14]/I from the certified basis, over (1-T)^2 (1-T^2)^2 (1-T^3)^2 (1-T^4)^2."""
    result: dict = {}

    def run():
        G = certified_basis_cm4(order)
        hs = hilbert_from_basis(G, order)
        try:
            hs = hs.over(TARGET_HILBERT.denominator)
        except ValueError:
            result["hs"] = hs
            return False, f"series {hs} does not fit the expected denominator"
        result["hs"] = hs
        num = list(hs.numerator)
        ok = hs.same_series(TARGET_HILBERT) and sum(num) == 24 and min(num) >= 0
        return ok, f"numerator {num}, sum {sum(num)}", {"numerator": num}

    check = timed("hilbert: series of I equals the expected series, numerator sum 24", run)
    return check, result["hs"]


def hilbert_com4(order: TermOrder = CM4_ORDER) -> HilbertSeries:
    G = buchberger(list(relations("COM4")), order)
    return hilbert_from_basis(G, order).over(TARGET_HILBERT.denominator)


# free basis ----------------------------------------------------------------------

def killed_basis(order: TermOrder = CM4_ORDER) -> list[Polynomial]:
    """Groebner basis of I + <a3, a5, a6, a9, a10, a14>."""
    R = a_ring(4)
    killed = {R.index(v) for v in data.FREE_BASIS_KILLED}
    gens = R.gens()
    images = [R.zero() if i in killed else gens[i] for i in range(R.nvars)]
    F = [p.substitute(images, R) for p in relations("CM4")]
    F = [f for f in F if not f.is_zero()]
    G = buchberger(F, order) if F else []
    # the killed variables are themselves leading terms and commute with the rest
    return [gens[i] for i in sorted(killed)] + [g for g in G if g.terms]


def standard_monomials(leads: list[tuple[int, ...]], free: Iterable[int], bound: int) -> list[tuple[int, ...]]:
    """Monomials in the ``free`` variables of weighted degree <= bound that no lead divides."""
    R = a_ring(4)
    free = list(free)
    out = []

    def rec(k, exps, deg):
        if k == len(free):
            m = [0] * R.nvars
            for v, e in zip(free, exps):
                m[v] = e
            m = tuple(m)
            if not any(divides(l, m) for l in leads):
                out.append(m)
            return
        w = R.weights[free[k]]
        e = 0
        while deg + e * w <= bound:
            rec(k + 1, exps + [e], deg + e * w)
            e += 1

    rec(0, [], 0)
    return out


def certify_free_basis(order: TermOrder = CM4_ORDER) -> list[Check]:
    R = a_ring(4)
    basis = [R.parse(m) for m in data.FREE_BASIS]
    store: dict = {}

    def normal():
        G = killed_basis(order)
        store["G"] = G
        bad = [data.FREE_BASIS[k] for k, b in enumerate(basis)
               if normal_form(b, G, order) != b]
        return not bad, f"reducible: {', '.join(bad)}", {"basis_size": len(G)}

    def exactly():
        G = store.get("G") or killed_basis(order)
        leads = [g.leading_monomial(order) for g in G]
        killed = {R.index(v) for v in data.FREE_BASIS_KILLED}
        free = [i for i in range(2, R.nvars) if i not in killed]
        # quotient is finite: anything beyond twice the top numerator degree is a witness
        bound = 2 * (len(data.HILBERT_NUMERATOR) - 1) + 4
        std = set(standard_monomials(leads, free, bound))
        listed = {b.leading_monomial(order) for b in basis}
        extra = sorted(std - listed)
        missing = sorted(listed - std)
        ok = not extra and not missing
        return ok, (f"standard but unlisted: {[format_polynomial(R.monomial(m)) for m in extra]};"
                    f" listed but not standard: {[format_polynomial(R.monomial(m)) for m in missing]}")

    def degrees():
        counts = [0] * len(data.HILBERT_NUMERATOR)
        for b in basis:
            d = b.wdeg()
            if d >= len(counts):
                counts.extend([0] * (d + 1 - len(counts)))
            counts[d] += 1
        ok = tuple(counts) == tuple(data.HILBERT_NUMERATOR) and len(basis) == 24
        return ok, f"degree counts {counts}"

    return [timed("basis: the 24 monomials are normal forms modulo I + <a3,a5,a6,a9,a10,a14>", normal),
            timed("basis: they are exactly the standard monomials of that ideal", exactly),
            timed("basis: their weighted degrees reproduce the Hilbert numerator", degrees)]


# commuting variety ---------------------------------------------------------------

def symbolic_vanishing(polys: dict[str, Polynomial], n: int = 4) -> list[str]:
    """Names of the polynomials that do not vanish identically on diagonal pairs."""
    images = list(symbolic_com_generators(n))
    target = diagonal_ring(n)
    return [k for k, p in polys.items() if not p.substitute(images, target).is_zero()]


def derive_com4(order: TermOrder = CM4_ORDER):
    """Top homogeneous parts of the 15 CM4 polynomials, compared with the COM4 catalogue."""
    source = cm4_all()
    derived = {k: drop_lower_terms(p) for k, p in source.polynomials.items()}
    catalogue = relations("COM4").polynomials

    def equal():
        bad = [k for k in catalogue if derived[k] != catalogue[k]]
        return not bad, f"differs from the catalogue: {', '.join(bad)}"

    def vanish():
        bad = symbolic_vanishing(derived)
        return not bad, f"not identically zero on diagonal pairs: {', '.join(bad)}"

    def criterion():
        res = gb_check(list(derived.values()), order, stop_at_first=True)
        names = list(derived)
        w = None
        if res.failing:
            i, j, _ = res.failing[0]
            w = f"S({names[i]},{names[j]}) does not reduce to zero"
        return res.passed, w

    def same_hilbert():
        hj = hilbert_com4(order)
        return hj.same_series(TARGET_HILBERT), f"numerator {list(hj.numerator)}"

    checks = [timed("com4: lower terms dropped from the 15 reproduce the catalogue", equal),
              timed("com4: all 15 vanish identically on diagonal pairs", vanish),
              timed("com4: the 15 satisfy the Buchberger criterion", criterion),
              timed("com4: J has the same Hilbert series as I", same_hilbert)]
    return derived, checks


# bracket table ------------------------------------------------------------------

def verify_brackets(points: int = 20, seed: int = 0) -> list[Check]:
    table = default_table()
    rng = random.Random(seed)
    pts = [random_cm_point(rng) for _ in range(points)]
    vals = [generators_at(p).values for p in pts]
    exprs = {i: expand_generator(i, 4) for i in range(1, 15)}
    pairs = table.pairs("listed") + table.pairs("corrected") + table.pairs("involution")
    R = a_ring(4)

    def entry_ok(i, j):
        p = table.get(i, j)
        for pt, v in zip(pts, vals):
            lhs = poisson_numeric(exprs[i], exprs[j], pt.X, pt.Y)
            if lhs != p.evaluate(v):
                return False, f"{{a{i},a{j}}}: bracket {lhs} vs table {p.evaluate(v)}"
        return True, None

    def all_pairs():
        for i, j in sorted(pairs):
            ok, w = entry_ok(i, j)
            if not ok:
                return False, w
        return True, None, {"pairs": len(pairs), "points": points}

    def named(i, j, text):
        def run():
            if table.get(i, j) != R.parse(text):
                return False, f"table entry is {format_polynomial(table.get(i, j))}"
            return entry_ok(i, j)
        return timed(f"brackets: {{a{i},a{j}}} = {text}", run)

    def complete():
        fitted = table.pairs("fitted")
        return not fitted, f"entries fitted from evaluations: {fitted}"

    def pure_zero():
        bad = []
        for i, j in itertools.combinations(range(3, 15), 2):
            if is_pure(i, j):
                for pt in pts[:3]:
                    if poisson_numeric(exprs[i], exprs[j], pt.X, pt.Y) != 0:
                        bad.append((i, j))
                        break
        return not bad, f"nonzero pure brackets: {bad}"

    return [timed("brackets: every listed and involution-derived entry matches the Poisson bracket",
                  all_pairs),
            named(1, 2, "4"), named(3, 4, "2*a3"), named(3, 13, "6*a12 + 12"),
            named(7, 8, "3*a12 + 12 - a4^2 + 1/4*a3*a5"),
            timed("brackets: table complete from listed entries, zeros and the involution", complete),
            timed("brackets: brackets of two pure-A or two pure-B generators vanish", pure_zero)]


def verify_jacobiators(trials: int = 50, seed: int = 0, order: TermOrder = CM4_ORDER) -> list[Check]:
    R = a_ring(4)
    r1 = relations("CM4")["r1"]

    def eight_r1():
        J = jacobiator(5, 10, 12)
        c = ratio_if_proportional(J, r1)
        return J == 8 * r1, f"jacobiator(5,10,12) = {c} * r1" if c is not None else \
            f"jacobiator(5,10,12) = {format_polynomial(J)}", {"multiple": str(c)}

    def random_triples():
        G = list(certified_basis_cm4(order))
        rng = random.Random(seed)
        triples = rng.sample(list(itertools.combinations(range(3, 15), 3)), trials)
        for t in triples:
            nf = normal_form(jacobiator(*t), G, order)
            if not nf.is_zero():
                return False, f"jacobiator{t} has normal form {format_polynomial(nf)}"
        return True, None

    return [timed("jacobiator: (5,10,12) equals 8*r1", eight_r1),
            timed(f"jacobiator: {trials} random triples reduce to zero modulo I", random_triples)]


def verify_derivation() -> Check:
    def run():
        d = derive_cm4()
        modes = {c.name: c.status for c in d.comparisons}
        bad = [c.name for c in d.comparisons if not c.ok]
        return d.ok, f"mismatch: {bad}; modes {modes}", {"modes": modes}
    return timed("derivation: bracket recipe from r1 reproduces the catalogue", run)


# discriminant ---------------------------------------------------------------------

def discriminant_check() -> tuple[Check, Fraction | None]:
    R = a_ring(4)
    w1 = R.parse(data.DISCRIMINANT_W1)
    D = diagonal_ring(4)
    images = list(symbolic_com_generators(4))
    lam = D.gens()[:4]
    disc = D.one()
    for i, j in itertools.combinations(range(4), 2):
        disc = disc * (lam[i] - lam[j]) ** 2
    found: dict = {}

    def run():
        w = w1.substitute(images, D)
        c = ratio_if_proportional(w, disc)
        found["c"] = c
        if c is None:
            return False, "w1 is not a constant multiple of the discriminant"
        return abs(c) == 72, f"constant {c}", {"constant": str(c)}

    check = timed("discriminant: w1 is a constant multiple of prod (l_i - l_j)^2 with |c| = 72", run)
    if found.get("c") is not None:
        check.name += f" (c = {found['c']})"
    return check, found.get("c")


# identity suites -------------------------------------------------------------------

def verify_identities(points: int = 20, matrices: int = 1000, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)

    def cayley():
        for k in range(matrices):
            M = traceless(random_integer_matrix(rng, 4))
            if not cayley_hamilton_residual(M).is_zero():
                return False, f"nonzero residual for matrix #{k}: {M.tolist()}"
        return True, None

    def on_pairs(idents, pts):
        def run():
            for k, (X, Y) in enumerate(pts):
                for ident in idents:
                    if not ident.holds_at(X, Y):
                        return False, f"{ident.name} fails at sample #{k}"
            return True, None
        return run

    cm_pts = [(p.X, p.Y) for p in (random_cm_point(rng) for _ in range(points))]
    arbitrary = [(random_integer_matrix(rng, 4), random_integer_matrix(rng, 4)) for _ in range(points)]
    return [timed(f"identities: Cayley-Hamilton residual vanishes on {matrices} traceless matrices", cayley),
            timed("identities: M^6 and A^4B^2 hold on arbitrary pairs",
                  on_pairs(cayley_hamilton_identities(), arbitrary)),
            timed("identities: word rewrites hold on C_4",
                  on_pairs(cm_identities(), cm_pts))]


# point evaluation ------------------------------------------------------------------

SUPPORTED_N = (2, 3, 4)


def _vanish_at(polys: dict[str, Polynomial], point_values: Iterable[tuple]) -> tuple[bool, str | None]:
    for k, vals in enumerate(point_values):
        for name, p in polys.items():
            v = p.evaluate(vals)
            if v != 0:
                return False, f"{name} = {v} at sample #{k}"
    return True, None


def _cm_values(rng: random.Random, n: int, trials: int):
    return [generators_at(random_cm_point(rng, n)).values for _ in range(trials)]


def verify_variety(variety: str, trials: int = 100, seed: int = 0, n: int = 4,
                   symbolic: bool = True, lower: bool = True) -> PresentationReport:
    variety = variety.upper()
    if variety not in (CM, COM):
        raise ValueError(f"unknown variety {variety!r}")
    if n not in SUPPORTED_N:
        raise ValueError(f"no relation catalogue for n = {n}")
    rng = random.Random(seed)
    report = PresentationReport(f"verify {variety.lower()} n={n}")
    if variety == CM:
        polys = {2: relations("CM2"), 3: relations("CM3", 1), 4: cm4_all()}[n].polynomials
        report.checks.append(timed(f"cm{n}: all relations vanish at {trials} points",
                                   lambda: _vanish_at(polys, _cm_values(rng, n, trials))))
        if n == 4:
            report.extend(verify_identities(points=min(trials, 20), matrices=0, seed=seed)[1:])
        if lower and n == 4:
            low = max(1, trials // 2)
            report.checks.append(timed(f"cm2: relation vanishes at {low} points",
                                       lambda: _vanish_at(relations("CM2").polynomials,
                                                          _cm_values(rng, 2, low))))
            report.checks.append(timed(f"cm3: relations with v = 1 vanish at {low} points",
                                       lambda: _vanish_at(relations("CM3", 1).polynomials,
                                                          _cm_values(rng, 3, low))))
    else:
        cat = {2: relations("COM2"), 3: relations("CM3", 0), 4: relations("COM4")}[n].polynomials
        vals = [generators_at(random_com_point(rng, n)).values for _ in range(trials)]
        report.checks.append(timed(f"com{n}: all relations vanish at {trials} points",
                                   lambda: _vanish_at(cat, vals)))
        if symbolic:
            report.checks.append(timed(f"com{n}: all relations vanish identically on diagonal pairs",
                                       lambda: (not (bad := symbolic_vanishing(cat, n)),
                                                f"nonzero: {bad}")))
    return report


def report_all(trials: int = 100, seed: int = 0, order: TermOrder = CM4_ORDER,
               complete: bool = True) -> PresentationReport:
    report = PresentationReport("all", order=order)
    report.extend(verify_variety(CM, trials, seed).checks)
    report.extend(verify_variety(COM, trials, seed).checks)
    report.extend(verify_brackets(seed=seed))
    report.extend(verify_jacobiators(seed=seed, order=order))
    report.extend(certify_gb_cm4(order, complete=complete))
    report.checks.append(certify_hilbert_cm4(order)[0])
    report.extend(certify_free_basis(order))
    report.extend(derive_com4(order)[1])
    report.checks.append(verify_derivation())
    report.checks.append(verify_identities(points=0, seed=seed)[0])
    report.checks.append(discriminant_check()[0])
    return report
