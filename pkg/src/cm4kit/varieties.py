"""Exact points on Calogero-Moser spaces and commuting varieties, and the trace generators there."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactmat import CMQuadruple, RationalMatrix, as_fraction, commutator, rank, traceless
from .polyring import PolyRing, Polynomial

CM = "CM"
COM = "COM"


def generator_count(n: int) -> int:
    return n * (n + 3) // 2


@lru_cache(maxsize=None)
def generator_exponents(n: int) -> tuple[tuple[int, int], ...]:
    """(p, q) with a_i = Tr(A^p B^q) for i >= 3, in the standard numbering."""
    out = []
    for d in range(2, n + 1):
        out.extend((d - j, j) for j in range(d + 1))
    return tuple(out)


@lru_cache(maxsize=None)
def a_ring(n: int = 4) -> PolyRing:
    """Q[a_1..a_k] weighted by total trace degree."""
    k = generator_count(n)
    weights = [1, 1] + [p + q for p, q in generator_exponents(n)]
    return PolyRing([f"a{i}" for i in range(1, k + 1)], weights)


@dataclass(frozen=True)
class VarietyPoint:
    variety: str
    n: int
    X: RationalMatrix
    Y: RationalMatrix
    witness: CMQuadruple | None = None

    def __post_init__(self):
        if self.variety not in (CM, COM):
            raise ValueError(f"unknown variety {self.variety!r}")
        if (self.X.rows, self.X.cols, self.Y.rows, self.Y.cols) != (self.n,) * 4:
            raise ValueError("matrix size does not match n")

    def is_valid(self) -> bool:
        c = commutator(self.X, self.Y)
        if self.variety == COM:
            return c.is_zero()
        if rank(c + RationalMatrix.identity(self.n)) != 1:
            return False
        return self.witness is None or (self.witness.X, self.witness.Y) == (self.X, self.Y)

    def to_json(self) -> dict:
        def mat(m):
            return [[str(x) for x in m.row(i)] for i in range(m.rows)]
        out = {"variety": self.variety, "n": self.n, "X": mat(self.X), "Y": mat(self.Y)}
        if self.witness is not None:
            out["v"] = [str(x) for x in self.witness.v]
            out["w"] = [str(x) for x in self.witness.w]
        return out

    @classmethod
    def from_json(cls, data: dict | str) -> VarietyPoint:
        if isinstance(data, str):
            data = json.loads(data)
        X = RationalMatrix.from_rows(data["X"])
        Y = RationalMatrix.from_rows(data["Y"])
        n = int(data["n"])
        witness = None
        if "v" in data and "w" in data:
            witness = CMQuadruple(n, X, Y, tuple(map(as_fraction, data["v"])),
                                  tuple(map(as_fraction, data["w"])))
        pt = cls(data["variety"], n, X, Y, witness)
        if not pt.is_valid():
            raise ValueError("point does not lie on its declared variety")
        return pt


def moser_pair(x: Sequence, p: Sequence, lam=1) -> tuple[RationalMatrix, RationalMatrix]:
    """X = Diag(x), Y_ii = p_i, Y_ij = lam/(x_i - x_j); then [X, Y] + lam*I has rank <= 1."""
    x = [as_fraction(t) for t in x]
    p = [as_fraction(t) for t in p]
    lam = as_fraction(lam)
    n = len(x)
    if len(p) != n:
        raise ValueError("need as many momenta as positions")
    if len(set(x)) != n:
        raise ValueError("positions must be pairwise distinct")
    X = RationalMatrix.diag(x)
    Y = RationalMatrix.from_rows([[p[i] if i == j else lam / (x[i] - x[j]) for j in range(n)]
                                  for i in range(n)])
    return X, Y


def cm_point(n: int, x: Sequence, p: Sequence) -> VarietyPoint:
    """Moser-matrix point: X = Diag(x), Y_ii = p_i, Y_ij = 1/(x_i - x_j).

    Then [X, Y] + I is the all-ones matrix, i.e. v = w = (1, ..., 1).
    """
    if len(x) != n or len(p) != n:
        raise ValueError("need n positions and n momenta")
    if len(set(x)) != n:
        raise ValueError("cm_point needs pairwise distinct x entries")
    X, Y = moser_pair(x, p)
    ones = (Fraction(1),) * n
    witness = CMQuadruple(n, X, Y, ones, ones)
    pt = VarietyPoint(CM, n, X, Y, witness)
    if rank(commutator(X, Y) + RationalMatrix.identity(n)) != 1:
        raise AssertionError("Moser construction failed the rank check")
    return pt


def com_point(lam: Sequence, mu: Sequence) -> VarietyPoint:
    if len(lam) != len(mu):
        raise ValueError("eigenvalue lists differ in length")
    return VarietyPoint(COM, len(lam), RationalMatrix.diag(lam), RationalMatrix.diag(mu))


def conjugate(pt: VarietyPoint, g: RationalMatrix) -> VarietyPoint:
    gi = g.inverse()
    X, Y = g @ pt.X @ gi, g @ pt.Y @ gi
    witness = None
    if pt.witness is not None:
        v = g @ RationalMatrix(pt.n, 1, pt.witness.v)
        w = RationalMatrix(1, pt.n, pt.witness.w) @ gi
        witness = CMQuadruple(pt.n, X, Y, v.entries, w.entries)
    return VarietyPoint(pt.variety, pt.n, X, Y, witness)


def _small_rational(rng: random.Random, box: int = 6, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-box * max_den, box * max_den), rng.randint(1, max_den))


def random_cm_point(rng: random.Random, n: int = 4) -> VarietyPoint:
    while True:
        x = [_small_rational(rng) for _ in range(n)]
        if len(set(x)) == n:
            break
    p = [_small_rational(rng) for _ in range(n)]
    return cm_point(n, x, p)


def random_com_point(rng: random.Random, n: int = 4) -> VarietyPoint:
    return com_point([_small_rational(rng) for _ in range(n)], [_small_rational(rng) for _ in range(n)])


def random_offvariety_point(seed: int, n: int = 4, box: int = 5) -> tuple[RationalMatrix, RationalMatrix]:
    """Integer pair lying on neither variety; deterministic per seed."""
    rng = random.Random(seed)
    while True:
        X = RationalMatrix(n, n, tuple(Fraction(rng.randint(-box, box)) for _ in range(n * n)))
        Y = RationalMatrix(n, n, tuple(Fraction(rng.randint(-box, box)) for _ in range(n * n)))
        c = commutator(X, Y)
        if not c.is_zero() and rank(c + RationalMatrix.identity(n)) != 1:
            return X, Y


@dataclass(frozen=True)
class GeneratorPoint:
    n: int
    values: tuple[Fraction, ...]

    def __getitem__(self, i: int) -> Fraction:
        """1-based: point[3] is the value of a_3."""
        return self.values[i - 1]

    def evaluate(self, f: Polynomial) -> Fraction:
        if f.ring.nvars != len(self.values):
            raise ValueError("polynomial ring does not match the point's generator count")
        return f.evaluate(self.values)


def trace_generators(X: RationalMatrix, Y: RationalMatrix) -> GeneratorPoint:
    if not (X.is_square and (X.rows, X.cols) == (Y.rows, Y.cols)):
        raise ValueError("X and Y must be square of equal size")
    n = X.rows
    A, B = traceless(X), traceless(Y)
    apow = [RationalMatrix.identity(n)]
    bpow = [RationalMatrix.identity(n)]
    for _ in range(n):
        apow.append(apow[-1] @ A)
        bpow.append(bpow[-1] @ B)
    vals = [X.trace(), Y.trace()]
    for p, q in generator_exponents(n):
        vals.append((apow[p] @ bpow[q]).trace())
    return GeneratorPoint(n, tuple(vals))


def generators_at(pt: VarietyPoint) -> GeneratorPoint:
    if not pt.is_valid():
        raise ValueError("point does not lie on its declared variety")
    return trace_generators(pt.X, pt.Y)


@lru_cache(maxsize=None)
def diagonal_ring(n: int = 4) -> PolyRing:
    return PolyRing([f"l{i}" for i in range(1, n + 1)] + [f"m{i}" for i in range(1, n + 1)])


@lru_cache(maxsize=None)
def symbolic_com_generators(n: int = 4) -> tuple[Polynomial, ...]:
    """a_1..a_k on the diagonal pair (Diag(l), Diag(m)) as polynomials in l_i, m_i."""
    R = diagonal_ring(n)
    lam = R.gens()[:n]
    mu = R.gens()[n:]
    s_l = sum(lam[1:], lam[0])
    s_m = sum(mu[1:], mu[0])
    cl = [x - s_l / n for x in lam]
    cm = [y - s_m / n for y in mu]
    out = [s_l, s_m]
    for p, q in generator_exponents(n):
        total = R.zero()
        for i in range(n):
            total = total + cl[i] ** p * cm[i] ** q
        out.append(total)
    return tuple(out)
