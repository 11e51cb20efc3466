from __future__ import annotations

import itertools
import json
from fractions import Fraction

import pytest

from cm4kit import presentation as pres
from cm4kit.catalogue import cm4_all, data, relations
from cm4kit.polyring import Polynomial, TermOrder, drop_lower_terms, gb_check, normal_form
from cm4kit.varieties import a_ring, com_point, generators_at

R = a_ring(4)


def P(text):
    return R.parse(text)


def flip_one_sign(p: Polynomial) -> Polynomial:
    m = sorted(p.terms)[0]
    terms = dict(p.terms)
    terms[m] = -terms[m]
    return Polynomial(p.ring, terms)


def test_certified_basis_is_a_groebner_basis_of_I():
    G = pres.certified_basis_cm4()
    assert len(G) == 15
    assert gb_check(list(G), pres.CM4_ORDER).passed
    assert all(normal_form(p, list(G), pres.CM4_ORDER).is_zero() for p in cm4_all())
    assert pres.certified_basis_cm4() == G


def test_twelve_generators_alone_fail_the_criterion():
    res = gb_check(list(relations("CM4")), pres.CM4_ORDER, stop_at_first=True)
    assert not res.passed and res.failing


def test_mutation_is_detected_with_a_witness():
    G = list(pres.certified_basis_cm4())
    k = next(i for i, g in enumerate(G) if len(g.terms) > 2)
    G[k] = flip_one_sign(G[k])
    assert not gb_check(G, pres.CM4_ORDER).passed
    polys = dict(cm4_all().polynomials)
    polys["r2"] = flip_one_sign(polys["r2"])
    check = pres.certify_gb_cm4(complete=False, polys=polys)[0]
    assert not check.passed
    assert check.witness.startswith("S(")


def test_catalogue_criterion_outcome_is_reported():
    checks = pres.certify_gb_cm4()
    assert [c.passed for c in checks] == [False, False, True]
    assert checks[0].witness.endswith("a4*a8*a11")
    assert checks[1].info["size"] == 15


def test_hilbert_series():
    check, hs = pres.certify_hilbert_cm4()
    assert check.passed
    assert hs.numerator == tuple(data.HILBERT_NUMERATOR)
    assert sum(hs.numerator) == 24 and min(hs.numerator) >= 0
    assert len(hs.numerator) - 1 == 12
    coeffs = [1, 0, 1, 2, 4, 2, 4, 2, 4, 2, 1, 0, 1]
    assert list(hs.numerator) == coeffs
    assert pres.hilbert_com4().same_series(hs)


def test_free_basis():
    checks = pres.certify_free_basis()
    assert all(c.passed for c in checks), [c.witness for c in checks]
    G = pres.killed_basis()
    assert normal_form(P("a4^6"), G, pres.CM4_ORDER) == P("a4^6")
    assert normal_form(P("a3"), G, pres.CM4_ORDER).is_zero()


def test_free_basis_depends_on_the_order():
    natural = TermOrder(R.weights)
    checks = pres.certify_free_basis(natural)
    assert not checks[0].passed
    assert checks[2].passed


def test_derive_com4():
    derived, checks = pres.derive_com4()
    assert [c.passed for c in checks] == [True, True, False, True]
    assert derived["r1"] == cm4_all()["r1"] - P("8*a3")
    assert derived["s2"] == cm4_all()["s2"] - P("18*a3*a5 + 32*a4^2 - 72*a12 - 96")
    assert pres.symbolic_vanishing(derived) == []
    assert pres.symbolic_vanishing({"r1": cm4_all()["r1"]}) == ["r1"]


def test_com4_catalogue_is_the_top_part_of_the_certified_basis_ideal():
    G = list(pres.certified_basis_cm4())
    tops = [drop_lower_terms(g) for g in G]
    assert pres.symbolic_vanishing({f"g{k}": t for k, t in enumerate(tops)}) == []


def test_discriminant_desk_values():
    w1 = P(data.DISCRIMINANT_W1)
    for lam, want, disc in [((0, 1, 2, 3), -10368, 144), ((2, 2, 2, 2), 0, 0), ((0, 0, 1, 2), 0, 0)]:
        g = generators_at(com_point(lam, (0, 0, 0, 0)))
        assert g.evaluate(w1) == want
        prod = 1
        for i, j in itertools.combinations(range(4), 2):
            prod *= (lam[i] - lam[j]) ** 2
        assert prod == disc
    g = generators_at(com_point((0, 1, 2, 3), (0, 0, 0, 0)))
    assert (g[3], g[6], g[10]) == (5, 0, Fraction(41, 4))


def test_discriminant_check_records_the_constant():
    check, c = pres.discriminant_check()
    assert check.passed
    assert c == -72
    assert "c = -72" in check.name


def test_brackets_and_jacobiators():
    checks = pres.verify_brackets(points=3)
    assert all(c.passed for c in checks), [c.witness for c in checks]
    j = pres.verify_jacobiators(trials=10)
    assert not j[0].passed and "-8" in j[0].witness
    assert j[1].passed


def test_verify_variety():
    assert pres.verify_variety("CM", trials=10, seed=3).passed
    assert pres.verify_variety("COM", trials=10, seed=3).passed
    assert pres.verify_variety("CM", trials=10, n=3).passed
    assert pres.verify_variety("CM", trials=10, n=2).passed
    assert pres.verify_variety("COM", trials=5, n=3).passed
    with pytest.raises(ValueError):
        pres.verify_variety("CM", n=5)
    with pytest.raises(ValueError):
        pres.verify_variety("Hilb")


def test_identity_suites():
    checks = pres.verify_identities(points=5, matrices=50, seed=1)
    assert all(c.passed for c in checks)


def test_reports_are_deterministic():
    def strip(report):
        data = report.to_json({"seed": 4})
        for c in data["checks"]:
            c.pop("ms")
        return json.dumps(data, sort_keys=True)

    a = pres.verify_variety("CM", trials=8, seed=4)
    b = pres.verify_variety("CM", trials=8, seed=4)
    assert strip(a) == strip(b)
    first = [c.to_json() for c in pres.certify_gb_cm4()]
    second = [c.to_json() for c in pres.certify_gb_cm4()]
    assert [(c["name"], c["status"], c["witness"]) for c in first] == \
        [(c["name"], c["status"], c["witness"]) for c in second]


def test_report_schema():
    report = pres.PresentationReport("x", order=pres.CM4_ORDER)
    report.extend([pres.Check("ok", True), pres.Check("bad", False, "why")])
    data = report.to_json({"seed": 0})
    assert set(data) == {"suite", "checks", "config"}
    assert data["checks"][1] == {"name": "bad", "status": "fail", "witness": "why", "ms": 0.0}
    assert "order" in data["config"]
    assert not report.passed
    assert "1/2 checks passed" in report.to_text()
