"""Sparse polynomials over Q, Groebner bases and Hilbert series."""

from .groebner import (GBCheck, buchberger, divide, gb_check, leading_monomials, normal_form,
                       reduce_basis, s_polynomial)
from .hilbert import HilbertSeries, hilbert_series
from .parse import PolynomialParseError, format_polynomial, parse_polynomial, parse_polynomial_lines
from .ring import PolyRing, Polynomial, TermOrder, ratio_if_proportional


def drop_lower_terms(f: Polynomial) -> Polynomial:
    """Top weighted-homogeneous component of f (zero stays zero)."""
    if f.is_zero():
        return f
    return f.homogeneous_component(f.wdeg())


__all__ = [
    "GBCheck", "HilbertSeries", "PolyRing", "Polynomial", "PolynomialParseError", "TermOrder",
    "buchberger", "divide", "drop_lower_terms", "format_polynomial", "gb_check", "hilbert_series",
    "leading_monomials", "normal_form", "parse_polynomial", "parse_polynomial_lines",
    "ratio_if_proportional", "reduce_basis", "s_polynomial",
]
