"""Sparse multivariate polynomials over Q with weighted degree-reverse-lex orders."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from ..exactmat import as_fraction

Monomial = tuple  # exponent vector, one slot per ring variable


class PolyRing:
    """A polynomial ring Q[x_1, ..., x_k] with a positive integer weight per variable."""

    def __init__(self, names: Sequence[str], weights: Sequence[int] | None = None):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.weights = tuple(weights) if weights is not None else (1,) * len(self.names)
        if len(self.weights) != len(self.names) or any(w <= 0 for w in self.weights):
            raise ValueError("need one positive weight per variable")
        self.nvars = len(self.names)
        self._index = {name: i for i, name in enumerate(self.names)}

    def __eq__(self, other):
        return isinstance(other, PolyRing) and (self.names, self.weights) == (other.names, other.weights)

    def __hash__(self):
        return hash((self.names, self.weights))

    def __repr__(self):
        return f"PolyRing({list(self.names)!r}, weights={list(self.weights)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no variable {name!r} in ring") from None

    def unit(self, i: int) -> Monomial:
        return tuple(1 if j == i else 0 for j in range(self.nvars))

    def one_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def var(self, name: str) -> Polynomial:
        return Polynomial(self, {self.unit(self.index(name)): Fraction(1)})

    def gens(self) -> list[Polynomial]:
        return [Polynomial(self, {self.unit(i): Fraction(1)}) for i in range(self.nvars)]

    def const(self, c) -> Polynomial:
        c = as_fraction(c)
        return Polynomial(self, {self.one_monomial(): c} if c else {})

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def monomial(self, exps: Sequence[int], coeff=1) -> Polynomial:
        return Polynomial(self, {tuple(exps): as_fraction(coeff)})

    def wdeg(self, m: Monomial) -> int:
        return sum(w * e for w, e in zip(self.weights, m))

    def parse(self, text: str) -> Polynomial:
        from .parse import parse_polynomial
        return parse_polynomial(text, self)

    def default_order(self) -> TermOrder:
        return TermOrder(self.weights)


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to nonzero Fractions."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, Fraction] | None = None):
        self.ring = ring
        self.terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    # comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.terms.items())

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("ring mismatch")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
        return Polynomial(self.ring, out)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, str)):
            return self.scale(other)
        other = self._coerce(other)
        out: dict = {}
        get = out.get
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = get(m, 0) + c1 * c2
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self.scale(1 / as_fraction(c))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> Polynomial:
        c = as_fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: c * v for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, c) -> Polynomial:
        return Polynomial(self.ring, {tuple(a + b for a, b in zip(m, mono)): c * v
                                      for m, v in self.terms.items()})

    # structure ----------------------------------------------------------

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get(self.ring.one_monomial(), Fraction(0))

    def wdeg(self) -> int:
        """Maximal weighted degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(self.ring.wdeg(m) for m in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({self.ring.wdeg(m) for m in self.terms}) <= 1

    def homogeneous_component(self, d: int) -> Polynomial:
        wdeg = self.ring.wdeg
        return Polynomial(self.ring, {m: c for m, c in self.terms.items() if wdeg(m) == d})

    def variables(self) -> set[str]:
        used = set()
        for m in self.terms:
            used.update(self.ring.names[i] for i, e in enumerate(m) if e)
        return used

    def leading_monomial(self, order: TermOrder) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: TermOrder) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: TermOrder) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coefficient(order))

    def sorted_terms(self, order: TermOrder | None = None) -> list[tuple[Monomial, Fraction]]:
        order = order or self.ring.default_order()
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    def derivative(self, i: int) -> Polynomial:
        """Partial derivative with respect to the i-th variable."""
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                out[m[:i] + (e - 1,) + m[i + 1:]] = c * e
        return Polynomial(self.ring, out)

    # evaluation and substitution ---------------------------------------

    def evaluate(self, values: Sequence) -> Fraction:
        """Evaluate at a point given as one exact value per ring variable."""
        if len(values) != self.ring.nvars:
            raise ValueError("need one value per variable")
        vals = [as_fraction(v) for v in values]
        total = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for v, e in zip(vals, m):
                if e:
                    t *= v ** e
            total += t
        return total

    def substitute(self, images: Sequence[Polynomial], target: PolyRing | None = None) -> Polynomial:
        """Replace the i-th variable by ``images[i]`` (polynomials in ``target``)."""
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        target = target or images[0].ring
        powers: list[dict[int, Polynomial]] = [{0: target.one()} for _ in images]

        def power(i: int, e: int) -> Polynomial:
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * images[i]
            return cache[e]

        out: dict = {}
        for m, c in self.terms.items():
            term = target.const(c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            for mm, cc in term.terms.items():
                out[mm] = out.get(mm, 0) + cc
        return Polynomial(target, out)

    def signed_permute(self, perm: Sequence[int], signs: Sequence[int]) -> Polynomial:
        """Substitute x_i -> signs[i] * x_{perm[i]} (a monomial automorphism)."""
        out = {}
        n = self.ring.nvars
        for m, c in self.terms.items():
            new = [0] * n
            sign = 1
            for i, e in enumerate(m):
                if e:
                    new[perm[i]] += e
                    if signs[i] < 0 and e % 2:
                        sign = -sign
            out[tuple(new)] = sign * c
        return Polynomial(self.ring, out)

    def to_ring(self, ring: PolyRing) -> Polynomial:
        """Re-embed into a ring whose variable names include all variables used here."""
        idx = [ring.index(name) for name in self.ring.names]
        out = {}
        for m, c in self.terms.items():
            new = [0] * ring.nvars
            for i, e in enumerate(m):
                if e:
                    new[idx[i]] = e
            out[tuple(new)] = c
        return Polynomial(ring, out)

    # text ---------------------------------------------------------------

    def to_str(self, order: TermOrder | None = None) -> str:
        from .parse import format_polynomial
        return format_polynomial(self, order)

    __str__ = to_str

    def __repr__(self):
        return f"Polynomial({self.to_str()!r})"


def ratio_if_proportional(f: Polynomial, g: Polynomial) -> Fraction | None:
    """Return c with f == c*g, or None if no single nonzero rational factor works."""
    if f.ring != g.ring:
        raise ValueError("ring mismatch")
    if f.is_zero() or g.is_zero():
        return Fraction(1) if f.is_zero() and g.is_zero() else None
    if f.terms.keys() != g.terms.keys():
        return None
    m0 = next(iter(f.terms))
    c = f.terms[m0] / g.terms[m0]
    if all(f.terms[m] == c * g.terms[m] for m in f.terms):
        return c
    return None


class TermOrder:
    """Weighted degree reverse lexicographic order.

    Monomials are compared by weighted degree first; ties are broken
    reverse-lexicographically along ``precedence`` (``precedence[0]`` is the
    largest variable): the monomial with the smaller exponent in the
    smallest variable where they differ is the larger one.
    """

    def __init__(self, weights: Sequence[int], precedence: Sequence[int] | None = None):
        self.weights = tuple(weights)
        n = len(self.weights)
        self.precedence = tuple(precedence) if precedence is not None else tuple(range(n))
        if sorted(self.precedence) != list(range(n)):
            raise ValueError("precedence must be a permutation of the variable indices")
        self._rev = tuple(reversed(self.precedence))
        self._cache: dict = {}

    def __eq__(self, other):
        return isinstance(other, TermOrder) and (self.weights, self.precedence) == (other.weights, other.precedence)

    def __hash__(self):
        return hash((self.weights, self.precedence))

    def __repr__(self):
        return f"TermOrder(weights={list(self.weights)}, precedence={list(self.precedence)})"

    def key(self, m: Monomial) -> tuple:
        k = self._cache.get(m)
        if k is None:
            k = (sum(w * e for w, e in zip(self.weights, m)),) + tuple(-m[i] for i in self._rev)
            self._cache[m] = k
        return k

    def describe(self, ring: PolyRing) -> str:
        prec = " > ".join(ring.names[i] for i in self.precedence)
        wts = ",".join(str(w) for w in self.weights)
        return f"wdegrevlex(weights=[{wts}]; {prec})"

    def to_dict(self, ring: PolyRing) -> dict:
        return {"kind": "weighted-degrevlex",
                "weights": dict(zip(ring.names, self.weights)),
                "precedence": [ring.names[i] for i in self.precedence]}

    @classmethod
    def from_names(cls, ring: PolyRing, names: Iterable[str]) -> TermOrder:
        """Order whose precedence lists ``names`` first (largest first), then the rest in ring order."""
        names = list(names)
        first = [ring.index(n) for n in names]
        rest = [i for i in range(ring.nvars) if i not in first]
        return cls(ring.weights, first + rest)
