import json
from fractions import Fraction

import pytest

from fibrometer import corpus
from fibrometer.alexander import twisted_via_cover
from fibrometer.errors import LimitError
from fibrometer.exact import parse_poly
from fibrometer.presentation import BraidWord, PhiMap, Presentation, braid_to_presentation
from fibrometer.verdict import (
    FIBERED_EVIDENCE,
    NOT_FIBERED,
    UNKNOWN,
    SearchLimits,
    fibering_search,
    rank_profile,
    report,
    verdict_to_json,
    witness_from_json,
)

FREE2 = Presentation(("x", "y"), ())


def test_profile_free():
    prof = rank_profile(FREE2, PhiMap((1, 1)), 4)
    assert [(e.n, e.rank_upper, e.b1_lower, e.torsion) for e in prof.entries] == [
        (n, n + 1, n + 1, ()) for n in range(1, 5)]
    assert prof.gradient_estimate == Fraction(5, 4)
    assert prof.lower_gradient == (2, Fraction(3, 2), Fraction(4, 3), Fraction(5, 4))


def test_profile_bs(bs12):
    prof = rank_profile(*bs12, 6)
    for e in prof.entries:
        assert e.rank_upper == 2 and e.b1_lower == 1
        assert e.torsion == ((2 ** e.n - 1,) if e.n > 1 else ())


def test_profile_trefoil(trefoil):
    prof = rank_profile(*trefoil, 6)
    assert [e.b1_lower for e in prof.entries] == [1, 1, 1, 1, 1, 3]
    assert all(e.rank_upper <= 3 for e in prof.entries)


def test_profile_caps(trefoil):
    with pytest.raises(LimitError):
        rank_profile(*trefoil, 25)
    prof = rank_profile(trefoil[0], PhiMap((2, 2)), 4)
    assert prof.skipped == (2, 4)
    assert [e.n for e in prof.entries] == [1, 3]


def test_profile_invariants(fixture_name):
    p, phi = corpus.load(fixture_name)
    prof = rank_profile(p, phi, 8)
    ns = [e.n for e in prof.entries]
    assert ns == sorted(ns)
    for e in prof.entries:
        assert e.b1_lower <= e.rank_upper <= e.n * (p.num_generators - 1) + 1


def test_verdict_examples(trefoil, bs12, free2_10):
    v = fibering_search(*trefoil, SearchLimits(3, 6, 10 ** 6, 6), aspherical=True)
    assert v.status == FIBERED_EVIDENCE and v.certificate is None
    assert any("not a proof" in c for c in v.caveats)

    v = fibering_search(*bs12)
    assert v.status == NOT_FIBERED
    c = v.certificate
    assert (c.route, str(c.polynomial), c.reason) == ("untwisted", "t - 2", "non-monic")
    assert "obstruction relative to 3-manifold hypotheses" in v.caveats

    v = fibering_search(*free2_10)
    assert v.status == NOT_FIBERED
    assert (v.certificate.route, str(v.certificate.polynomial), v.certificate.reason) == ("untwisted", "0", "zero")


def test_empty_limits():
    p, phi = corpus.load("trefoil")
    v = fibering_search(p, phi, SearchLimits(0, 0, 0, 0))
    data = verdict_to_json(v)
    assert data["status"] == UNKNOWN
    assert data["coverage"] == {"max_degree": 0, "max_image_order": 0, "budget_spent": 0}


def test_budget_exhaustion_is_unknown(figure_eight):
    v = fibering_search(*figure_eight, SearchLimits(4, 24, 40, 4))
    assert v.status == UNKNOWN
    assert v.coverage.budget_spent <= 40
    assert any("budget" in c for c in v.caveats)


def test_report_json_schema(trefoil, bs12):
    data = json.loads(report(fibering_search(*trefoil, SearchLimits(3, 6, 10 ** 6, 6), True), "json"))
    assert list(data) == ["status", "certificate", "coverage", "profile", "caveats"]
    assert data["status"] == FIBERED_EVIDENCE and len(data["profile"]) == 6
    assert list(data["profile"][0]) == ["n", "rank_upper", "b1_lower", "torsion"]
    data = json.loads(report(fibering_search(*bs12), "json"))
    assert data["certificate"]["polynomial"] == "t - 2"
    with pytest.raises(ValueError):
        report(fibering_search(*bs12), "xml")


def test_text_report(bs12):
    text = report(fibering_search(*bs12), "text").decode()
    assert text.startswith("status: NOT_FIBERED\n")
    assert "certificate: untwisted polynomial t - 2 (non-monic)" in text


def test_determinism(fixture_name):
    p, phi = corpus.load(fixture_name)
    runs = {report(fibering_search(p, phi), "json") for _ in range(2)}
    assert len(runs) == 1


def _monic_nonfibered_example():
    # untwisted polynomial 1 but a perfect finite quotient kills the cover homology
    from fibrometer.presentation import parse_presentation
    return parse_presentation("gens t a b\nrel a a\nrel b b b\nrel a b a b a b a b a b\nphi t:1 a:0 b:0")


def test_twisted_certificate_reproducible():
    p, phi = _monic_nonfibered_example()
    v = fibering_search(p, phi, SearchLimits(5, 60, 10 ** 6, 3))
    assert v.status == NOT_FIBERED
    c = v.certificate
    assert c.route == "twisted" and c.reason == "zero"
    data = verdict_to_json(v)["certificate"]
    hom = witness_from_json(p, data["witness_hom"])
    assert twisted_via_cover(p, hom, phi).polynomial == parse_poly(data["polynomial"])


def test_knot52_twisted_route_unused():
    # the untwisted certificate is found first
    v = fibering_search(*corpus.load("knot52"), aspherical=True)
    assert v.certificate.route == "untwisted"
    assert "obstruction relative to 3-manifold hypotheses" not in v.caveats


LIMITS = [SearchLimits(k, o, b, n) for k, o, b, n in [
    (1, 1, 10, 1), (2, 2, 100, 2), (2, 6, 10 ** 4, 4), (3, 6, 10 ** 5, 6), (4, 24, 10 ** 6, 8)]]


def test_monotone_soundness(fixture_name):
    p, phi = corpus.load(fixture_name)
    seen = False
    for limits in LIMITS:
        status = fibering_search(p, phi, limits).status
        if seen:
            assert status == NOT_FIBERED
        seen = seen or status == NOT_FIBERED


def test_braid_verdict():
    p, phi = braid_to_presentation(BraidWord(3, (1, -2, 1, -2)))
    assert fibering_search(p, phi, aspherical=True).status == FIBERED_EVIDENCE


def test_limits_checked_up_front(trefoil):
    with pytest.raises(LimitError):
        fibering_search(*trefoil, SearchLimits(8, 24, 10, 2))
    with pytest.raises(LimitError):
        fibering_search(*trefoil, SearchLimits(2, 24, 10, 30))


def test_free_product_with_a5_needs_a_large_quotient():
    p, phi = corpus.load("z_free_a5")
    assert fibering_search(p, phi, SearchLimits(4, 60, 10 ** 6, 3)).status == UNKNOWN
    v = fibering_search(p, phi, SearchLimits(5, 60, 10 ** 6, 3))
    assert v.status == NOT_FIBERED and v.certificate.witness_hom.image_order == 60


def test_profile_betti_matches_raw_cover(fixture_name):
    from fibrometer.alexander import b1_cyclic

    p, phi = corpus.load(fixture_name)
    for e in rank_profile(p, phi, 6).entries:
        assert e.b1_lower == b1_cyclic(p, phi, e.n)
