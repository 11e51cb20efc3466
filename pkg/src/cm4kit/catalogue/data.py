"""Relation catalogues as text, in the polynomial grammar (parentheses allowed).

Each entry keeps the grouping of the published formula so transcription can be
checked by eye; exported text is always the expanded form.
"""

from __future__ import annotations

# n = 4, Calogero-Moser: the twelve generators of I followed by r6, t5, t6
CM4 = {
    "r1": "8*a3 + a3*(a4^2 - a3*a5) - 2*(a7^2 - a6*a8) + 2*(a3*a12 - 2*a4*a11 + a5*a10)",
    "r2": "48*a6 - a6*(4*a4^2 - a3*a5) - 3*a3*(a3*a8 - 2*a4*a7) + 12*(a6*a12 - 2*a7*a11 + a8*a10)",
    "r3": "-2*a4*a5*a6 + 3*a3*a5*a7 - a3^2*a9 + 4*(2*a6*a13 - 3*a7*a12 + a9*a10)",
    "r4": ("-6*a3^2 + 24*a10 - 6*a10*(a4^2 + a3*a5) - 3*a3^2*(a4^2 - a3*a5)"
           " + 2*a6*(a3*a8 - 2*a4*a7 + a5*a6) - 12*a3*(a3*a12 - 2*a4*a11) + 24*(a10*a12 - a11^2)"),
    "r5": ("12*a4*a5 - 48*a13 + 3*a4*a5*(a3*a5 - a4^2) + 2*(a3*a8*a9 - 2*a4*a7*a9 + a5*a6*a9)"
           " - 3*a4*(a5*a12 - 4*a4*a13 + 3*a3*a14) + 3*a5*(a3*a13 - a5*a11) + 12*(a11*a14 - a12*a13)"),
    "t1": "8*a5 + a5*(a4^2 - a3*a5) - 2*(a8^2 - a7*a9) + 2*(a5*a12 - 2*a4*a13 + a3*a14)",
    "t2": "48*a9 - a9*(4*a4^2 - a3*a5) - 3*a5*(a5*a7 - 2*a4*a8) + 12*(a9*a12 - 2*a8*a13 + a7*a14)",
    "t3": "-2*a3*a4*a9 + 3*a3*a5*a8 - a5^2*a6 + 4*(2*a9*a11 - 3*a8*a12 + a6*a14)",
    "t4": ("-6*a5^2 + 24*a14 - 6*a14*(a4^2 + a3*a5) - 3*a5^2*(a4^2 - a3*a5)"
           " + 2*a9*(a5*a7 - 2*a4*a8 + a3*a9) - 12*a5*(a5*a12 - 2*a4*a13) + 24*(a12*a14 - a13^2)"),
    "s1": "-4*a4 + a4*(a4^2 - a3*a5) + (a6*a9 - a7*a8) + 2*(a3*a13 - 2*a4*a12 + a5*a11)",
    "s2": ("-96 + 2*(9*a3*a5 + 16*a4^2) - 72*a12 + 2*a4^2*(a3*a5 - a4^2) - a3*(a3*a14 - 2*a5*a12)"
           " + 2*(a3*a7*a9 - 2*a4*a7*a8 + a5*a6*a8) - a5*(a5*a10 - 2*a3*a12)"
           " - 2*a4*(3*a3*a13 - 5*a4*a12 + 3*a5*a11) + 4*(a10*a14 + 2*a11*a13 - 3*a12^2)"),
    "s3": ("12*a3*a5 - 48*a12 + 2*a12*(2*a4^2 + a3*a5) + a3*(a3*a14 - 4*a4*a13)"
           " + a5*(a5*a10 - 4*a4*a11) - 4*(a10*a14 - 4*a11*a13 + 3*a12^2)"),
    "r6": ("48*a7 - 3*a7*(4*a4^2 + a3*a5) + 4*a4*a5*a6 + 18*a3*a4*a8 - 7*a3^2*a9"
           " + 12*(a9*a10 - 2*a8*a11 + a7*a12)"),
    "t5": ("12*a3*a4 - 48*a11 + 3*a3*a4*(a3*a5 - a4^2) + 2*(a5*a6*a7 - 2*a4*a6*a8 + a3*a6*a9)"
           " - 3*a4*(a3*a12 - 4*a4*a11 + 3*a5*a10) + 3*a3*(a5*a11 - a3*a13) + 12*(a10*a13 - a11*a12)"),
    "t6": ("48*a8 - 3*a8*(4*a4^2 + a3*a5) + 4*a3*a4*a9 + 18*a4*a5*a7 - 7*a5^2*a6"
           " + 12*(a6*a14 - 2*a7*a13 + a8*a12)"),
}

CM4_GENERATORS = ("r1", "r2", "r3", "r4", "r5", "t1", "t2", "t3", "t4", "s1", "s2", "s3")
CM4_EXTRA = ("r6", "t5", "t6")

# commuting variety: catalogue relation minus the listed correction
COM4_CORRECTIONS = {
    "r1": "8*a3",
    "r2": "48*a6",
    "r3": "0",
    "r4": "-6*a3^2 + 24*a10",
    "r5": "12*a4*a5 - 48*a13",
    "r6": "48*a7",
    "t1": "8*a5",
    "t2": "48*a9",
    "t3": "0",
    "t4": "-6*a5^2 + 24*a14",
    "t5": "12*a3*a4 - 48*a11",
    "t6": "48*a8",
    "s1": "-4*a4",
    "s2": "18*a3*a5 + 32*a4^2 - 72*a12 - 96",
    "s3": "12*a3*a5 - 48*a12",
}

CM2 = {"r1": "a4^2 - a3*a5 - 1"}
COM2 = {"r1": "a4^2 - a3*a5"}

# n = 3; the symbol v is substituted by the requested rational value
CM3 = {
    "r1": "a3*a9 - 2*a4*a8 + a5*a7",
    "r2": "a5*a6 - 2*a4*a7 + a3*a8",
    "r3": "9*v*a3 - a3*a4^2 + a3^2*a5 + 6*a6*a8 - 6*a7^2",
    "r4": "9*v*a4 - a4^3 + a3*a4*a5 + 3*a6*a9 - 3*a7*a8",
    "r5": "9*v*a5 - a4^2*a5 + a3*a5^2 + 6*a7*a9 - 6*a8^2",
}

# basis of C[C_4] as a free module over the symmetric functions of each spectrum
FREE_BASIS = (
    "1", "a4", "a7", "a8", "a4^2", "a11", "a12", "a13", "a4*a7", "a4*a8",
    "a4^3", "a4*a11", "a4*a12", "a4*a13", "a4^2*a7", "a4^2*a8",
    "a4^4", "a4^2*a11", "a4^2*a12", "a4^2*a13", "a4^3*a7", "a4^3*a8",
    "a4^5", "a4^6",
)

# variables adjoined to I before checking the free basis
FREE_BASIS_KILLED = ("a3", "a5", "a6", "a9", "a10", "a14")

HILBERT_NUMERATOR = (1, 0, 1, 2, 4, 2, 4, 2, 4, 2, 1, 0, 1)
HILBERT_DENOMINATOR = ((1, 2), (2, 2), (3, 2), (4, 2))

DISCRIMINANT_W1 = ("288*a10^3 - 288*a10^2*a3^2 + 90*a10*a3^4 - 9*a3^6"
                   " - 144*a10*a3*a6^2 + 68*a3^3*a6^2 + 24*a6^4")
