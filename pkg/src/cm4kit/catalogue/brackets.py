"""The bracket table on a_1..a_14, its Leibniz extension, and the Fourier and involution maps."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from ..polyring import Polynomial
from ..varieties import a_ring, generator_exponents

# published entries {a_i, a_j} for i < j, before completion
LISTED = {
    (1, 2): "4",
    # Tr(A^p), Tr(B^q) brackets
    (3, 5): "4*a4",
    (3, 9): "6*a8",
    (3, 14): "8*a13",
    (6, 9): "9*a12 - 9/4*a3*a5",
    (6, 14): "6*a4*a8 + 3*a5*a7 - 2*a3*a9",
    (10, 14): ("-4/5*a4*(16 + 3/2*a3*a5 + a4^2) + 4/15*(18*a7*a8 - 13*a6*a9)"
               " + 12/5*(a5*a11 + 3*a4*a12 + a3*a13)"),
    # brackets with a3
    (3, 4): "2*a3",
    (3, 7): "2*a6",
    (3, 8): "4*a7",
    (3, 11): "2*a10",
    (3, 12): "4*a11",
    (3, 13): "6*a12 + 12",
    # a4 acts diagonally
    (4, 6): "-3*a6",
    (4, 7): "-a7",
    (4, 10): "-4*a10",
    (4, 11): "-2*a11",
    (4, 12): "0",
    # mixed
    (6, 7): "3*a10 - 3/4*a3^2",
    (6, 8): "6*a11 - 3/2*a3*a4",
    (6, 11): "7/4*a3*a6",
    (6, 12): "2*a4*a6 + 3/2*a3*a7",
    (6, 13): "3/4*a5*a6 + 9/2*a4*a7",
    (7, 8): "3*a12 + 12 - a4^2 + 1/4*a3*a5",
    (7, 10): "-7/3*a3*a6",
    (7, 11): "-5/6*a4*a6 + 1/4*a3*a7",
    (7, 12): "a3*a8 + 1/6*a5*a6",
    (7, 13): "2/3*a3*a9 + a4*a8 + 5/4*a5*a7",
    (7, 14): "4*a5*a8 + 2/3*a4*a9",
    (10, 11): "-1/2*a3^3 + 1/3*a6^2 + 3*a3*a10",
    (10, 12): "-a3^2*a4 + 2/3*a6*a7 + 4*a3*a11 + 2*a4*a10",
    (10, 13): "10*a3 - 3/2*a3^2*a5 + a6*a8 + 6*a3*a12 + 3*a5*a10",
    (11, 12): "9*a3 - 1/2*a3^2*a5 + 11/6*a6*a8 - 3/2*a7^2 + 2*a3*a12 + a5*a10",
    (11, 13): ("1/5*a4*(53 - 2*a4^2 - 3*a3*a5) + 6/5*(3*a4*a12 + a3*a13 + a5*a11)"
               " + 1/60*(9*a7*a8 + 31*a6*a9)"),
}

# entries whose printed form disagrees with the Tr(A^p), Tr(B^q) formula and with
# direct evaluation; (printed, used)
ERRATA = {(3, 14): ("8*a12", "8*a13")}

# 1-based generator index -> image under (X, Y) -> (Y, -X), as (index, sign)
FOURIER = {1: (2, 1), 2: (1, -1), 3: (5, 1), 4: (4, -1), 5: (3, 1), 6: (9, 1), 7: (8, -1),
           8: (7, 1), 9: (6, -1), 10: (14, 1), 11: (13, -1), 12: (12, 1), 13: (11, -1),
           14: (10, 1)}

# X <-> Y swap; a1 <-> a2 is an extension of the published map
INVOLUTION = {1: 2, 2: 1, 3: 5, 4: 4, 5: 3, 6: 9, 7: 8, 8: 7, 9: 6, 10: 14, 11: 13,
              12: 12, 13: 11, 14: 10}

NGEN = 14


def bidegree(i: int) -> tuple[int, int]:
    if i == 1:
        return (1, 0)
    if i == 2:
        return (0, 1)
    return generator_exponents(4)[i - 3]


def _signed_map(f: Polynomial, table: dict[int, tuple[int, int]]) -> Polynomial:
    perm = [table[i + 1][0] - 1 for i in range(NGEN)]
    signs = [table[i + 1][1] for i in range(NGEN)]
    return f.signed_permute(perm, signs)


def fourier(f: Polynomial) -> Polynomial:
    return _signed_map(f, FOURIER)


def involution(f: Polynomial) -> Polynomial:
    return _signed_map(f, {i: (j, 1) for i, j in INVOLUTION.items()})


def is_pure(i: int, j: int) -> bool:
    """Both generators built from A alone, or both from B alone (a_1, a_2 excluded)."""
    if min(i, j) < 3:
        return False
    (pi, qi), (pj, qj) = bidegree(i), bidegree(j)
    return (qi == 0 and qj == 0) or (pi == 0 and pj == 0)


@dataclass
class BracketTable:
    """Antisymmetric table {a_i, a_j} with provenance per entry."""

    entries: dict[tuple[int, int], Polynomial]
    source: dict[tuple[int, int], str] = field(default_factory=dict)

    def get(self, i: int, j: int) -> Polynomial:
        R = a_ring(4)
        if i == j:
            return R.zero()
        if (i, j) in self.entries:
            return self.entries[(i, j)]
        if (j, i) in self.entries:
            return -self.entries[(j, i)]
        raise KeyError(f"bracket table has no entry for ({i},{j})")

    def missing(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, NGEN + 1) for j in range(i + 1, NGEN + 1)
                if (i, j) not in self.entries]

    def pairs(self, kind: str | None = None) -> list[tuple[int, int]]:
        return sorted(k for k, s in self.source.items() if kind is None or s == kind)

    def to_json(self) -> dict[str, str]:
        return {f"({i},{j})": self.entries[(i, j)].to_str() for i, j in sorted(self.entries)}


def build_table(fill: Callable[[int, int], Polynomial] | None = None) -> BracketTable:
    """Listed entries, then zeros for pure pairs and a_1/a_2, then the involution law.

    Anything still missing is passed to ``fill`` (if given) and flagged as a fill-in.
    """
    R = a_ring(4)
    entries: dict[tuple[int, int], Polynomial] = {}
    source: dict[tuple[int, int], str] = {}

    def put(i, j, p, how):
        if i == j:
            return
        if i > j:
            i, j, p = j, i, -p
        if (i, j) not in entries:
            entries[(i, j)] = p
            source[(i, j)] = how

    for (i, j), text in LISTED.items():
        put(i, j, R.parse(text), "corrected" if (i, j) in ERRATA else "listed")
    for i in range(1, NGEN + 1):
        for j in range(i + 1, NGEN + 1):
            if i in (1, 2) and (i, j) != (1, 2):
                put(i, j, R.zero(), "central")
            elif is_pure(i, j):
                put(i, j, R.zero(), "pure")
    # {a_i^s, a_j^s} = -{a_i, a_j}^s
    for (i, j), p in list(entries.items()):
        if source[(i, j)] in ("listed", "corrected"):
            put(INVOLUTION[i], INVOLUTION[j], -involution(p), "involution")
    if fill is not None:
        for i, j in [(i, j) for i in range(1, NGEN + 1) for j in range(i + 1, NGEN + 1)
                     if (i, j) not in entries]:
            put(i, j, fill(i, j), "fitted")
    return BracketTable(entries, source)


_DEFAULT_TABLE: BracketTable | None = None


def default_table() -> BracketTable:
    global _DEFAULT_TABLE
    if _DEFAULT_TABLE is None:
        _DEFAULT_TABLE = build_table(fill=fit_bracket)
    return _DEFAULT_TABLE


def table_bracket(f: Polynomial, g: Polynomial, table: BracketTable | None = None) -> Polynomial:
    """Bilinear, Leibniz extension of the generator table: sum_ij df/da_i dg/da_j {a_i, a_j}."""
    table = table or default_table()
    R = f.ring
    if g.ring != R:
        raise ValueError("ring mismatch")
    used_f = [i for i in range(R.nvars) if any(m[i] for m in f.terms)]
    used_g = [j for j in range(R.nvars) if any(m[j] for m in g.terms)]
    dg = {j: g.derivative(j) for j in used_g}
    total = R.zero()
    for i in used_f:
        dfi = f.derivative(i)
        for j in used_g:
            if i == j:
                continue
            entry = table.get(i + 1, j + 1)
            if entry.is_zero():
                continue
            total = total + dfi * dg[j] * entry
    return total


def jacobiator(i: int, j: int, k: int, table: BracketTable | None = None) -> Polynomial:
    R = a_ring(4)
    a = R.gens()
    br = lambda f, g: table_bracket(f, g, table)
    ai, aj, ak = a[i - 1], a[j - 1], a[k - 1]
    return br(br(ai, aj), ak) + br(br(ak, ai), aj) + br(br(aj, ak), ai)


# fitting missing entries from exact point evaluations ------------------------------

def _candidate_monomials(i: int, j: int, max_shift: int = 3) -> list[tuple[int, ...]]:
    """Monomials in a_3..a_14 of bidegree bideg(a_i) + bideg(a_j) - (k+1, k+1), k >= 0."""
    (pi, qi), (pj, qj) = bidegree(i), bidegree(j)
    targets = {(pi + pj - 1 - k, qi + qj - 1 - k) for k in range(max_shift + 1)}
    targets = {t for t in targets if min(t) >= 0}
    pmax = max((t[0] for t in targets), default=-1)
    qmax = max((t[1] for t in targets), default=-1)
    bidegs = [bidegree(v) for v in range(3, NGEN + 1)]
    out = []

    def rec(v, exps, p, q):
        if v == len(bidegs):
            if (p, q) in targets:
                out.append((0, 0) + tuple(exps))
            return
        dp, dq = bidegs[v]
        e = 0
        while p + e * dp <= pmax and q + e * dq <= qmax:
            rec(v + 1, exps + [e], p + e * dp, q + e * dq)
            e += 1

    if targets:
        rec(0, [], 0, 0)
    return sorted(out)


def fit_bracket(i: int, j: int, points: int | None = None, seed: int = 12345) -> Polynomial:
    """Fit {a_i, a_j} as a polynomial in a_3..a_14 from exact Poisson evaluations at CM points.

    The solution of the interpolation system with free coefficients set to zero
    is returned; it agrees with the true bracket on C_4 at every sampled point
    and is re-verified on fresh points.
    """
    from ..polyring.linalg import solve_rational
    from ..traceword import expand_generator, poisson_numeric
    from ..varieties import generators_at, random_cm_point

    R = a_ring(4)
    monos = _candidate_monomials(i, j)
    rng = random.Random(seed)
    npts = points or 2 * len(monos) + 10
    fi, fj = expand_generator(i, 4), expand_generator(j, 4)
    rows, rhs = [], []
    for _ in range(npts):
        pt = random_cm_point(rng)
        vals = generators_at(pt).values
        rows.append([R.monomial(m).evaluate(vals) for m in monos])
        rhs.append(poisson_numeric(fi, fj, pt.X, pt.Y))
    sol = solve_rational(rows, rhs)
    if sol is None:
        raise ValueError(f"no polynomial of the expected bidegree fits {{a{i}, a{j}}}")
    fitted = Polynomial(R, {m: c for m, c in zip(monos, sol) if c})
    for _ in range(5):
        pt = random_cm_point(rng)
        if fitted.evaluate(generators_at(pt).values) != poisson_numeric(fi, fj, pt.X, pt.Y):
            raise ValueError(f"fitted bracket ({i},{j}) fails verification")
    return fitted
