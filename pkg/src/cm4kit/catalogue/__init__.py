"""Named relation lists, the generator bracket table, and bracket-driven derivations."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from ..polyring import Polynomial, TermOrder, format_polynomial, ratio_if_proportional
from ..polyring.groebner import buchberger, normal_form
from ..varieties import a_ring
from . import data
from .brackets import (
    ERRATA,
    FOURIER,
    INVOLUTION,
    LISTED,
    BracketTable,
    build_table,
    default_table,
    fit_bracket,
    fourier,
    involution,
    jacobiator,
    table_bracket,
)

RELATION_SETS = ("CM2", "CM3", "CM4", "COM4", "CM4_EXTRA", "COM2")


@dataclass(frozen=True)
class RelationSet:
    name: str
    polynomials: dict[str, Polynomial]
    v: Fraction | None = None

    def __iter__(self):
        return iter(self.polynomials.values())

    def __len__(self):
        return len(self.polynomials)

    def __getitem__(self, key: str) -> Polynomial:
        return self.polynomials[key]

    def names(self) -> list[str]:
        return list(self.polynomials)

    def to_text(self, order: TermOrder | None = None) -> str:
        label = self.name if self.v is None else f"{self.name} v={self.v}"
        lines = [f"# {label}"]
        for key, p in self.polynomials.items():
            lines.append(f"# {key}")
            lines.append(format_polynomial(p, order))
        return "\n".join(lines) + "\n"


def _substitute_v(text: str, v) -> str:
    return re.sub(r"\bv\b", f"({Fraction(v)})", text)


def relations(name: str, v=None) -> RelationSet:
    """Hard-coded relation list; CM3 needs the rational parameter v."""
    key = name.upper()
    if key == "CM2":
        R = a_ring(2)
        return RelationSet("CM2", {k: R.parse(t) for k, t in data.CM2.items()})
    if key == "COM2":
        R = a_ring(2)
        return RelationSet("COM2", {k: R.parse(t) for k, t in data.COM2.items()})
    if key == "CM3":
        if v is None:
            raise ValueError("CM3 needs a rational value for v")
        R = a_ring(3)
        return RelationSet("CM3", {k: R.parse(_substitute_v(t, v)) for k, t in data.CM3.items()},
                           Fraction(v))
    R = a_ring(4)
    if key == "CM4":
        return RelationSet("CM4", {k: R.parse(data.CM4[k]) for k in data.CM4_GENERATORS})
    if key == "CM4_EXTRA":
        return RelationSet("CM4_EXTRA", {k: R.parse(data.CM4[k]) for k in data.CM4_EXTRA})
    if key == "COM4":
        names = data.CM4_GENERATORS + data.CM4_EXTRA
        return RelationSet("COM4", {k: R.parse(data.CM4[k]) - R.parse(data.COM4_CORRECTIONS[k])
                                    for k in names})
    raise ValueError(f"unknown relation set {name!r}; expected one of {', '.join(RELATION_SETS)}")


def cm4_all() -> RelationSet:
    """The 12 generators followed by r6, t5, t6."""
    base, extra = relations("CM4"), relations("CM4_EXTRA")
    return RelationSet("CM4+EXTRA", {**base.polynomials, **extra.polynomials})


@dataclass
class Comparison:
    name: str
    exact: bool
    scalar: Fraction | None
    # None: not attempted; True/False: derived - c*catalogue reduces to 0 modulo earlier elements
    normal_form_zero: bool | None = None

    @property
    def status(self) -> str:
        if self.exact:
            return "exact"
        if self.scalar is not None:
            return f"scalar {self.scalar}"
        if self.normal_form_zero:
            return "normal form"
        return "mismatch"

    @property
    def ok(self) -> bool:
        return self.exact or self.scalar is not None or bool(self.normal_form_zero)


@dataclass
class Derivation:
    derived: RelationSet
    comparisons: list[Comparison] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.comparisons)


DERIVATION_ORDER = ("r1", "r2", "r3", "r4", "r5", "r6", "t1", "t2", "t3", "t4", "t5", "t6",
                    "s1", "s2", "s3")


def _derive_raw(r1: Polynomial, table: BracketTable) -> dict[str, Polynomial]:
    a = a_ring(4).gens()

    def br(f, g):
        return table_bracket(f, g, table)

    def gen(i):
        return a[i - 1]

    d = {"r1": r1}
    d["r2"] = -6 * br(r1, gen(7))
    d["r3"] = Fraction(1, 6) * br(d["r2"], gen(5))
    q = br(r1, gen(8))
    d["r4"] = Fraction(1, 2) * br(q, gen(6))
    d["r5"] = Fraction(1, 2) * br(q, gen(9))
    d["r6"] = 3 * q
    for i in range(1, 7):
        d[f"t{i}"] = fourier(d[f"r{i}"])
    d["s1"] = Fraction(1, 4) * br(r1, gen(5))
    d["s2"] = gen(3) * d["t1"] - Fraction(1, 6) * br(d["r5"], gen(3))
    d["s3"] = -Fraction(1, 9) * br(d["r2"], gen(9))
    return {k: d[k] for k in DERIVATION_ORDER}


def derive_cm4(r1: Polynomial | None = None, table: BracketTable | None = None,
               order: TermOrder | None = None, max_pairs: int = 2000) -> Derivation:
    """Rebuild r2..r6, t1..t6, s1..s3 from r1 through the bracket table and compare.

    Each derived polynomial is compared with its catalogue counterpart exactly, then up
    to one rational factor; only if both fail is the difference reduced modulo a
    Groebner basis of the previously derived elements (bounded by ``max_pairs``).
    """
    table = table or default_table()
    missing = table.missing()
    if missing:
        raise KeyError(f"bracket table incomplete, missing pairs {missing}")
    catalogue = cm4_all()
    r1 = r1 if r1 is not None else catalogue["r1"]
    derived = _derive_raw(r1, table)
    order = order or TermOrder(a_ring(4).weights)
    out = Derivation(RelationSet("CM4-derived", derived))
    seen: list[Polynomial] = []
    for key in DERIVATION_ORDER:
        got, want = derived[key], catalogue[key]
        cmp = Comparison(key, got == want, ratio_if_proportional(got, want))
        if not cmp.exact and cmp.scalar is None and seen:
            try:
                G = buchberger(seen, order, max_pairs=max_pairs)
                cmp.normal_form_zero = normal_form(got - want, G, order).is_zero()
            except RuntimeError:
                cmp.normal_form_zero = None
        out.comparisons.append(cmp)
        if not got.is_zero():
            seen.append(got)
    return out


def table_text(table: BracketTable | None = None) -> str:
    table = table or default_table()
    lines = []
    for (i, j), p in sorted(table.entries.items()):
        lines.append(f"{{a{i},a{j}}} = {format_polynomial(p)}    [{table.source[(i, j)]}]")
    return "\n".join(lines) + "\n"


__all__ = [
    "ERRATA", "FOURIER", "INVOLUTION", "LISTED", "RELATION_SETS", "BracketTable", "Comparison",
    "Derivation", "RelationSet", "build_table", "cm4_all", "default_table", "derive_cm4",
    "fit_bracket", "fourier", "involution", "jacobiator", "relations", "table_bracket",
    "table_text",
]
