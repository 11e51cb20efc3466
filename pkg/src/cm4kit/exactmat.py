"""Exact rational matrices and the matrix predicates used throughout the package.

Scalars are :class:`fractions.Fraction`; a matrix is an immutable row-major
tuple of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Scalar = Fraction


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length does not match shape")

    # construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> RationalMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(as_fraction(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> RationalMatrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, values: Sequence) -> RationalMatrix:
        n = len(values)
        entries = [Fraction(0)] * (n * n)
        for i, v in enumerate(values):
            entries[i * n + i] = as_fraction(v)
        return cls(n, n, tuple(entries))

    @classmethod
    def outer(cls, column: Sequence, row: Sequence) -> RationalMatrix:
        column = [as_fraction(c) for c in column]
        row = [as_fraction(r) for r in row]
        return cls(len(column), len(row), tuple(c * r for c in column for r in row))

    # access -------------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    # arithmetic ---------------------------------------------------------

    def _check_same_shape(self, other: RationalMatrix) -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        self._check_same_shape(other)
        return RationalMatrix(self.rows, self.cols,
                              tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        self._check_same_shape(other)
        return RationalMatrix(self.rows, self.cols,
                              tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> RationalMatrix:
        return RationalMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> RationalMatrix:
        c = as_fraction(c)
        return RationalMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not agree")
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * m:(i + 1) * m]
            for j in range(p):
                s = Fraction(0)
                for k in range(m):
                    x = arow[k]
                    if x:
                        s += x * b[k * p + j]
                out.append(s)
        return RationalMatrix(n, p, tuple(out))

    def __pow__(self, k: int) -> RationalMatrix:
        if not self.is_square or k < 0:
            raise ValueError("power needs a square matrix and k >= 0")
        result = RationalMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(self.cols, self.rows,
                              tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    def inverse(self) -> RationalMatrix:
        """Gauss-Jordan inverse over Q; raises ValueError if singular."""
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for c in range(n):
            piv = next((r for r in range(c, n) if aug[r][c]), None)
            if piv is None:
                raise ValueError("matrix is singular")
            aug[c], aug[piv] = aug[piv], aug[c]
            inv = 1 / aug[c][c]
            aug[c] = [x * inv for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c]:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return RationalMatrix.from_rows([row[n:] for row in aug])

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))


def commutator(x: RationalMatrix, y: RationalMatrix) -> RationalMatrix:
    return x @ y - y @ x


def _integer_rows(m: RationalMatrix) -> list[list[int]]:
    rows = []
    for i in range(m.rows):
        r = m.row(i)
        d = lcm(*(x.denominator for x in r)) if r else 1
        rows.append([int(x * d) for x in r])
    return rows


def rank(m: RationalMatrix) -> int:
    """Exact rank by fraction-free (Bareiss) elimination.

    Rows are first cleared of denominators, which does not change the rank.
    """
    a = _integer_rows(m)
    nrows, ncols = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c + 1, ncols):
                # exact by Sylvester's identity
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r


def traceless(m: RationalMatrix) -> RationalMatrix:
    if not m.is_square:
        raise ValueError("traceless() needs a square matrix")
    n = m.rows
    return m - RationalMatrix.identity(n).scale(m.trace() / n)


def cayley_hamilton_residual(m: RationalMatrix) -> RationalMatrix:
    """M^4 - 1/2 Tr(M^2) M^2 - 1/3 Tr(M^3) M + 1/8 (Tr(M^2)^2 - 2 Tr(M^4)) I for traceless 4x4 M.

    Zero for every valid input.
    """
    if (m.rows, m.cols) != (4, 4):
        raise ValueError("cayley_hamilton_residual is defined for 4x4 matrices")
    if m.trace() != 0:
        raise ValueError("cayley_hamilton_residual needs a traceless matrix")
    m2 = m @ m
    m3 = m2 @ m
    m4 = m3 @ m
    t2, t3, t4 = m2.trace(), m3.trace(), m4.trace()
    return (m4 - m2.scale(t2 / 2) - m.scale(t3 / 3)
            + RationalMatrix.identity(4).scale((t2 * t2 - 2 * t4) / 8))


@dataclass(frozen=True)
class CMQuadruple:
    """(X, Y, v, w) with XY - YX + I = v w; checked on construction."""

    n: int
    X: RationalMatrix
    Y: RationalMatrix
    v: tuple[Fraction, ...]
    w: tuple[Fraction, ...]

    def __post_init__(self):
        lhs = commutator(self.X, self.Y) + RationalMatrix.identity(self.n)
        if lhs != RationalMatrix.outer(self.v, self.w):
            raise ValueError("XY - YX + I != v w")

    def wv(self) -> Fraction:
        return sum((a * b for a, b in zip(self.w, self.v)), Fraction(0))


def random_integer_matrix(rng, n: int, box: int = 5) -> RationalMatrix:
    """Integer entries drawn uniformly from [-box, box] using ``rng`` (a random.Random)."""
    return RationalMatrix(n, n, tuple(Fraction(rng.randint(-box, box)) for _ in range(n * n)))


def vector(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(as_fraction(v) for v in values)
