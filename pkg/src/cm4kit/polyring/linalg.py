"""Exact linear systems over Q."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def solve_rational(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """One solution of rows * x = rhs, free unknowns set to zero; None when inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [[Fraction(c) for c in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(aug)) if aug[k][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for k in range(len(aug)):
            if k != r and aug[k][c]:
                f = aug[k][c]
                aug[k] = [x - f * y for x, y in zip(aug[k], aug[r])]
        pivots.append(c)
        r += 1
        if r == len(aug):
            break
    if any(row[-1] for row in aug[r:]):
        return None
    x = [Fraction(0)] * ncols
    for k, c in enumerate(pivots):
        x[c] = aug[k][-1]
    return x
