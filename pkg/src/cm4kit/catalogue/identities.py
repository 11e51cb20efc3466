"""Trace identities among words in A, B (letters x, y), as (name, lhs, rhs) text."""

from __future__ import annotations

from dataclasses import dataclass

from ..exactmat import RationalMatrix, traceless
from ..traceword import TraceExpr, parse_trace_expr

# hold for every traceless 4x4 matrix (first) or traceless A with arbitrary B (second)
CAYLEY_HAMILTON = (
    ("M^6", "xxxxxx", "3/4*xxxx*xx + 1/3*xxx^2 - 1/8*xx^3"),
    ("A^4B^2", "xxxxyy", "1/2*xx*xxyy + 1/3*xxx*xyy - 1/8*(xx^2 - 2*xxxx)*yy"),
)

# n = 4 on the Calogero-Moser space: 6 = n(n-1)/2, 5/2 = (2n-3)/2, 2 = n-2
WORD_SWAPS = (
    ("ABAB", "xyxy", "xxyy + 6"),
    ("A^3BAB", "xxxyxy", "xxxxyy + 5/2*xx"),
    ("A^2BA^2B", "xxyxxy", "xxxxyy + 2*xx"),
)

REWRITES = (
    ("A^2BAB", "xxyxy", "xxxyy"),
    ("ABAB^2", "xyxyy", "xxyyy"),
    ("A^2BAB^2", "xxyxyy", "xxyyxy - 8"),
    ("(AB)^3", "xyxyxy", "xxyyxy + 3*xy - 4"),
    ("A^3B^3 via A^2B^2AB", "xxxyyy", "xxyyxy - 2*xy - 4"),
    ("A^2B^3", "xxyyy", "1/12*(xx*yyy + 6*xy*xyy + 3*yy*xxy)"),
    ("A^3B^2", "xxxyy", "1/12*(yy*xxx + 6*xy*xxy + 3*xx*xyy)"),
    ("A^3B^3", "xxxyyy", ("1/20*(-xy^3 + 6*xxy*xyy + 3*yy*xxxy + 9*xy*xxyy + 3*xx*xyyy"
                          " + 2/3*xxx*yyy - 3/2*xx*xy*yy - 16*xy)")),
)


@dataclass(frozen=True)
class TraceIdentity:
    name: str
    lhs: TraceExpr
    rhs: TraceExpr

    def residual(self, X: RationalMatrix, Y: RationalMatrix):
        """lhs - rhs with x, y read as the traceless parts of X, Y."""
        return (self.lhs - self.rhs).evaluate(traceless(X), traceless(Y))

    def holds_at(self, X: RationalMatrix, Y: RationalMatrix) -> bool:
        return self.residual(X, Y) == 0


def _load(rows) -> tuple[TraceIdentity, ...]:
    return tuple(TraceIdentity(name, parse_trace_expr(l), parse_trace_expr(r)) for name, l, r in rows)


def cayley_hamilton_identities() -> tuple[TraceIdentity, ...]:
    return _load(CAYLEY_HAMILTON)


def cm_identities() -> tuple[TraceIdentity, ...]:
    """Identities valid on C_4 (not on all pairs of matrices)."""
    return _load(WORD_SWAPS + REWRITES)
