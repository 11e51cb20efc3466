from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cm4kit.exactmat import RationalMatrix, traceless
from cm4kit.traceword import (EMPTY, CyclicWord, TraceExpr, WordSum, cyclic_gradient, eval_word,
                              eval_wordsum, expand_generator, generator_trace_expr, necklace_bracket,
                              parse_trace_expr, parse_wordsum, poisson_numeric, product_of, verify_identity_at,
                              word)
from cm4kit.varieties import cm_point, random_offvariety_point

words = st.text(alphabet="xy", max_size=6)


def E(i, j, n=4):
    rows = [[0] * n for _ in range(n)]
    rows[i][j] = 1
    return RationalMatrix.from_rows(rows)


def rand_matrix(rng, n, box=3):
    return RationalMatrix(n, n, tuple(Fraction(rng.randint(-box, box)) for _ in range(n * n)))


# words and the necklace bracket --------------------------------------------------------

def test_canonical_rotation():
    assert word("yxx") == word("xxy") == word("xyx")
    assert word("yxx").letters == "xxy"
    assert word("") == EMPTY
    with pytest.raises(ValueError):
        word("xz")


def test_bracket_examples():
    assert necklace_bracket(word("x"), word("y")) == WordSum({EMPTY: 1})
    assert necklace_bracket(word("xx"), word("yy")) == WordSum({word("xy"): 4})
    assert not necklace_bracket(word("xx"), word("x"))
    assert not necklace_bracket(EMPTY, word("xy"))


@settings(max_examples=200)
@given(words, words)
def test_bracket_antisymmetric_and_graded(u, v):
    b = necklace_bracket(word(u), word(v))
    assert b == -necklace_bracket(word(v), word(u))
    want = (u.count("x") + v.count("x") - 1, u.count("y") + v.count("y") - 1)
    assert all(w.bidegree() == want for w in b.terms)


@settings(max_examples=60, deadline=None)
@given(words, words, words)
def test_bracket_jacobi(u, v, w):
    u, v, w = word(u), word(v), word(w)
    total = (necklace_bracket(necklace_bracket(u, v), w) + necklace_bracket(necklace_bracket(v, w), u)
             + necklace_bracket(necklace_bracket(w, u), v))
    assert not total


def test_wordsum_parsing():
    ws = parse_wordsum("3/2*xxyy - xy + 1")
    assert ws == WordSum({word("xxyy"): Fraction(3, 2), word("xy"): -1, EMPTY: 1})
    assert parse_wordsum("yx - xy") == WordSum()
    with pytest.raises(ValueError):
        parse_wordsum("xz")


def test_cyclic_gradient_examples():
    assert cyclic_gradient(word("xx"), "x") == {"x": 2}
    assert cyclic_gradient(word("xyxy"), "x") == {"yxy": 2}
    assert cyclic_gradient(word("x"), "y") == {}


# evaluation ---------------------------------------------------------------------

def test_eval_examples():
    X = RationalMatrix.diag([1, 2, 3, 4])
    assert eval_wordsum(WordSum.of("xy"), X, RationalMatrix.identity(4)) == 10
    assert eval_wordsum(WordSum({EMPTY: 1}), X, X) == 4
    # direct product: (E12 + E21)^2 = E11 + E22, times E11 twice gives E11
    X = E(0, 1) + E(1, 0)
    assert eval_word("xxyy", X, E(0, 0)) == 1
    with pytest.raises(ValueError):
        eval_word("xy", X, RationalMatrix.identity(3))


@settings(max_examples=50, deadline=None)
@given(words, st.integers(0, 10**6))
def test_eval_matches_direct_product(w, seed):
    rng = random.Random(seed)
    X, Y = rand_matrix(rng, 3), rand_matrix(rng, 3)
    M = RationalMatrix.identity(3)
    for a in w:
        M = M @ (X if a == "x" else Y)
    assert eval_word(w, X, Y) == M.trace()


def test_expand_generator_examples():
    assert expand_generator(1) == TraceExpr.trace("x")
    assert expand_generator(3) == parse_trace_expr("xx - 1/4*x^2")
    assert expand_generator(4) == parse_trace_expr("xy - 1/4*x*y")
    with pytest.raises(ValueError):
        expand_generator(15)
    with pytest.raises(ValueError):
        expand_generator(3, n=1)


@pytest.mark.parametrize("i", range(1, 15))
def test_expansion_agrees_with_traceless_evaluation(i):
    rng = random.Random(i)
    X, Y = rand_matrix(rng, 4), rand_matrix(rng, 4)
    A, B = traceless(X), traceless(Y)
    direct = generator_trace_expr(i).evaluate(A, B) if i > 2 else (X.trace() if i == 1 else Y.trace())
    assert expand_generator(i).evaluate(X, Y) == direct


# the Poisson bracket -------------------------------------------------------------

def _derivative_at_zero(values):
    """p'(0) from p(0..d) for a polynomial of degree <= d (Newton forward differences)."""
    total, diffs, k = Fraction(0), list(values), 1
    while len(diffs) > 1:
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        total += Fraction((-1) ** (k + 1), k) * diffs[0]
        k += 1
    return total


def _entry_gradient(f: TraceExpr, X, Y, which, deg):
    n = X.rows
    out = {}
    for i in range(n):
        for j in range(n):
            vals = []
            for t in range(deg + 1):
                d = E(i, j, n).scale(t)
                vals.append(f.evaluate(X + d, Y) if which == "x" else f.evaluate(X, Y + d))
            out[i, j] = _derivative_at_zero(vals)
    return out


def brute_bracket(f, g, X, Y, deg=6):
    fx, fy = _entry_gradient(f, X, Y, "x", deg), _entry_gradient(f, X, Y, "y", deg)
    gx, gy = _entry_gradient(g, X, Y, "x", deg), _entry_gradient(g, X, Y, "y", deg)
    # Tr(dX ^ dY) pairs X_ij with Y_ji
    return sum(fx[i, j] * gy[j, i] - fy[i, j] * gx[j, i] for i, j in fx)


@pytest.mark.parametrize("f,g", [("1", "2"), ("3", "4"), ("4", "7"), ("3*4", "7"), ("5", "8*9"), ("3", "3")])
def test_poisson_numeric_matches_entrywise_derivatives(f, g):
    def gen(spec):
        return product_of(expand_generator(int(i), 3) for i in spec.split("*"))
    rng = random.Random(f + g)
    X, Y = rand_matrix(rng, 3), rand_matrix(rng, 3)
    assert poisson_numeric(gen(f), gen(g), X, Y) == brute_bracket(gen(f), gen(g), X, Y)


def test_poisson_numeric_examples():
    a = {i: expand_generator(i) for i in (1, 2, 3, 4, 12)}
    rng = random.Random(7)
    X, Y = rand_matrix(rng, 4), rand_matrix(rng, 4)
    assert poisson_numeric(a[1], a[2], X, Y) == 4
    pt = cm_point(4, (0, 1, 2, 3), (0, 0, 0, 0))
    assert poisson_numeric(a[3], a[4], pt.X, pt.Y) == 10
    assert poisson_numeric(a[4], a[12], pt.X, pt.Y) == 0


def test_poisson_numeric_matches_necklace_bracket_at_random_pairs():
    rng = random.Random(2024)
    for trial in range(200):
        u = "".join(rng.choice("xy") for _ in range(rng.randint(1, 5)))
        v = "".join(rng.choice("xy") for _ in range(rng.randint(1, 5)))
        X, Y = random_offvariety_point(trial, box=3)
        got = poisson_numeric(TraceExpr.trace(u), TraceExpr.trace(v), X, Y)
        assert got == eval_wordsum(necklace_bracket(word(u), word(v)), X, Y)


def test_poisson_numeric_leibniz_and_antisymmetry():
    X, Y = random_offvariety_point(3, box=3)
    f, g, h = expand_generator(3), expand_generator(5), expand_generator(8)
    fg_h = poisson_numeric(f * g, h, X, Y)
    assert fg_h == f.evaluate(X, Y) * poisson_numeric(g, h, X, Y) + g.evaluate(X, Y) * poisson_numeric(f, h, X, Y)
    assert poisson_numeric(f, h, X, Y) == -poisson_numeric(h, f, X, Y)


def test_pure_x_generators_commute():
    X, Y = random_offvariety_point(5, box=3)
    for i, j in [(3, 6), (3, 10), (6, 10)]:
        assert poisson_numeric(expand_generator(i), expand_generator(j), X, Y) == 0


def test_verify_identity_at_examples():
    pt = cm_point(4, (0, 1, 3, 7), (1, -2, 0, 5))
    # a bare number in a WordSum is a multiple of the empty word, i.e. of Tr(I) = 4
    assert verify_identity_at(parse_wordsum("xyxy"), parse_trace_expr("xxyy + 6"), pt)
    assert verify_identity_at(parse_wordsum("xyxy"), parse_wordsum("xxyy + 3/2"), pt)
    lhs = parse_trace_expr("xxxyxy")
    assert verify_identity_at(lhs, parse_trace_expr("xxxxyy + 5/2*xx"), pt)
    assert verify_identity_at(parse_wordsum("xxyxy"), parse_wordsum("xxxyy"), pt)
    assert not verify_identity_at(parse_wordsum("xyxy"), parse_wordsum("xxyy"), pt)
    X, Y = random_offvariety_point(0)
    off = cm_point(4, (0, 1, 2, 3), (0, 0, 0, 0))
    object.__setattr__(off, "Y", X)
    with pytest.raises(ValueError):
        verify_identity_at(parse_wordsum("xy"), parse_wordsum("yx"), off)
