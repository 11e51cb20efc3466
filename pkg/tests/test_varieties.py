from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cm4kit.catalogue import relations
from cm4kit.exactmat import RationalMatrix, commutator, rank
from cm4kit.varieties import (CM, COM, VarietyPoint, a_ring, cm_point, com_point, conjugate,
                              generator_count, generators_at, moser_pair, random_cm_point,
                              random_com_point, random_offvariety_point, symbolic_com_generators,
                              trace_generators)

small = st.fractions(min_value=-6, max_value=6, max_denominator=3)


def test_generator_counts_and_ring():
    assert [generator_count(n) for n in (2, 3, 4)] == [5, 9, 14]
    assert a_ring(4).weights == (1, 1, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4)


def test_cm_point_examples():
    pt = cm_point(4, (0, 1, 2, 3), (0, 0, 0, 0))
    ones = RationalMatrix.from_rows([[1] * 4] * 4)
    assert commutator(pt.X, pt.Y) + RationalMatrix.identity(4) == ones
    assert pt.is_valid()
    g = generators_at(pt)
    assert (g[3], g[4]) == (5, 0)
    two = cm_point(2, (0, 1), (0, 0))
    assert generators_at(two).evaluate(relations("CM2")["r1"]) == 0
    with pytest.raises(ValueError):
        cm_point(4, (0, 0, 1, 2), (0, 0, 0, 0))


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=4, max_size=4, unique=True), st.lists(small, min_size=4, max_size=4))
def test_cm_points_are_on_the_variety(x, p):
    pt = cm_point(4, x, p)
    c = commutator(pt.X, pt.Y)
    assert rank(c + RationalMatrix.identity(4)) == 1
    assert c.trace() == 0


def test_com_point_examples():
    g = generators_at(com_point((0, 1, 2, 3), (0, 0, 0, 0)))
    assert g[2] == 0 and g[5] == 0
    g = generators_at(com_point((1, 1, 1, 1), (1, 1, 1, 1)))
    assert all(v == 0 for v in g.values[2:])
    g = generators_at(com_point((0, 1, 2, 3), (0, 1, 2, 3)))
    assert g[3] == g[4] == g[5] == 5
    zero = RationalMatrix.zeros(4)
    assert generators_at(VarietyPoint(COM, 4, zero, zero)).values == (0,) * 14
    with pytest.raises(ValueError):
        com_point((0, 1), (0,))


def test_r1_on_the_commuting_variety():
    R = a_ring(4)
    r1 = relations("CM4")["r1"]
    g = generators_at(com_point((0, 1, 2, 3), (1, -1, 2, -2)))
    assert g.evaluate(r1 - R.parse("8*a3")) == 0
    # commuting points are negative controls for r1 itself
    g = generators_at(com_point((0, 1, 2, 3), (0, 0, 0, 0)))
    assert g.evaluate(r1) == 40


def test_offvariety_points():
    X, Y = random_offvariety_point(1)
    c = commutator(X, Y)
    assert not c.is_zero() and rank(c + RationalMatrix.identity(4)) != 1
    assert random_offvariety_point(1) == (X, Y)
    assert trace_generators(X, Y).evaluate(relations("CM4")["r1"]) != 0


def test_invalid_points_are_rejected():
    X, Y = random_offvariety_point(2)
    with pytest.raises(ValueError):
        generators_at(VarietyPoint(CM, 4, X, Y))
    with pytest.raises(ValueError):
        VarietyPoint("Hilb", 4, X, Y)
    with pytest.raises(ValueError):
        trace_generators(X, RationalMatrix.identity(3))


def test_conjugation_invariance():
    rng = random.Random(11)
    pt = random_cm_point(rng)
    g = RationalMatrix.from_rows([[1, 2, 0, 0], [0, 1, 3, 0], [1, 0, 1, 0], [0, 0, 1, 1]])
    moved = conjugate(pt, g)
    assert moved.is_valid()
    assert generators_at(moved) == generators_at(pt)


def test_each_parameter_moves_the_generators():
    base = ((0, 1, 3, 7), (1, 2, -1, 0))
    ref = generators_at(cm_point(4, *base)).values
    for which in range(2):
        for k in range(4):
            vals = [list(base[0]), list(base[1])]
            vals[which][k] += Fraction(1, 2)
            if which == 0 and len(set(vals[0])) < 4:
                continue
            assert generators_at(cm_point(4, *vals)).values != ref


def test_symbolic_com_generators():
    a = symbolic_com_generators(4)
    R = a[0].ring
    assert a[0] == R.parse("l1 + l2 + l3 + l4")
    assert a[2] == R.parse("l1^2 + l2^2 + l3^2 + l4^2 - 1/4*(l1 + l2 + l3 + l4)^2")
    r1 = relations("CM4")["r1"] - a_ring(4).parse("8*a3")
    assert r1.substitute(a).is_zero()


@settings(max_examples=20, deadline=None)
@given(st.lists(small, min_size=4, max_size=4), st.lists(small, min_size=4, max_size=4))
def test_symbolic_com_generators_match_numeric(lam, mu):
    a = symbolic_com_generators(4)
    vals = list(lam) + list(mu)
    assert tuple(p.evaluate(vals) for p in a) == generators_at(com_point(lam, mu)).values


def test_json_roundtrip():
    pt = cm_point(4, (0, Fraction(1, 2), 2, -3), (1, 0, 0, Fraction(-2, 3)))
    data = json.loads(json.dumps(pt.to_json()))
    assert data["X"][1][1] == "1/2"
    assert VarietyPoint.from_json(data) == pt
    back = VarietyPoint.from_json(json.dumps(random_com_point(random.Random(1)).to_json()))
    assert back.variety == COM and back.witness is None
    data["Y"][0][1] = "5"
    with pytest.raises(ValueError):
        VarietyPoint.from_json(data)


@pytest.mark.parametrize("lam", [0, 1, 2, Fraction(1, 2), 3])
def test_scaled_moser_pairs_fit_cm3(lam):
    # rank([X, Y] + lam*I) = 1 corresponds to v = lam^2
    X, Y = moser_pair((0, 1, 3), (2, -1, Fraction(1, 2)), lam)
    assert rank(commutator(X, Y) + RationalMatrix.identity(3).scale(lam)) == (1 if lam else 0)
    g = trace_generators(X, Y)
    rs = relations("CM3", Fraction(lam) ** 2)
    assert all(g.evaluate(p) == 0 for p in rs)
    if lam:
        wrong = relations("CM3", Fraction(lam) ** 2 + 1)
        assert any(g.evaluate(p) != 0 for p in wrong)
