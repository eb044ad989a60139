"""Classification reports and verification sweeps at small sizes."""
from __future__ import annotations

import json

import pytest

from bip.classification import (
    SUITES,
    classification_from_json,
    classification_json,
    classify,
    poset_verdict,
    polytope_verdict,
    suite_report_from_json,
    suite_report_json,
    sweep,
)
from bip.perms import PatternCount, identity


def test_classify_smooth_complexity_one():
    report = classify((3, 2, 1, 4))
    assert report.complexity == 1
    assert report.smooth
    assert report.profile == PatternCount(1, 0)
    assert report.poset == "s3-product"
    assert report.polytope == "hexagon-prism"
    assert report.factor is not None and report.factor.kind == "braid-321"
    assert report.tower is not None and report.tower.kind == "smooth"
    assert report.consistent


def test_classify_singular_complexity_one():
    report = classify((3, 4, 1, 2))
    assert report.complexity == 1
    assert not report.smooth
    assert report.profile == PatternCount(0, 1)
    assert report.poset == "p3412-product"
    assert report.polytope == "p3412-prism"
    assert report.factor is not None and report.factor.kind == "braid-3412"
    assert report.consistent


def test_classify_toric():
    report = classify((3, 1, 4, 2))
    assert report.complexity == 0
    assert report.poset == "boolean"
    assert report.polytope == "cube"
    assert report.factor is None and report.tower is None
    assert report.consistent


def test_classify_high_complexity():
    report = classify((4, 3, 2, 1))
    assert report.complexity == 3
    assert report.poset == "none"
    assert report.polytope == "none"
    assert report.consistent


def test_classify_skip_polytope():
    report = classify((3, 2, 1, 4), include_polytope=False)
    assert report.polytope is None
    assert report.consistent


def test_verdict_helpers():
    assert poset_verdict(identity(4)) == "boolean"
    assert polytope_verdict(identity(4)) == "cube"
    assert poset_verdict((4, 3, 2, 1)) == "none"


def test_complexity_one_census_s4():
    report = sweep(4, "complexity-one-list")
    assert report.details["all"] == [
        "1432", "2431", "3214", "3241", "3412", "4132", "4213",
    ]
    assert sorted(report.details["smooth"]) == [
        "1432", "2431", "3214", "3241", "4132", "4213",
    ]
    assert report.details["singular"] == ["3412"]
    assert report.passed


@pytest.mark.parametrize(
    "suite", ["theorem-toric", "theorem-smooth", "theorem-singular"]
)
def test_theorem_suites_s4(suite):
    report = sweep(4, suite)
    assert report.checked == 24
    assert report.passed, report.failures[:2]
    assert report.details["include_polytopes"] is True


def test_counting_bijection_suite():
    report = sweep(3, "counting-bijection")
    assert report.passed
    assert report.details == {"smooth_count": 1, "singular_next_count": 1}
    report = sweep(4, "counting-bijection")
    assert report.passed
    assert report.details["smooth_count"] == 6


def test_small_suites_pass():
    assert sweep(4, "toric-smooth").passed
    assert sweep(4, "inverse-symmetry").passed
    assert sweep(4, "lemma-identities").passed
    assert sweep(4, "rank-factorization").passed
    assert sweep(3, "face-oracle").passed
    assert sweep(4, "product-proposition").passed


def test_sampled_suites_are_seeded():
    a = sweep(5, "lemma-identities", sample=50, seed=42)
    b = sweep(5, "lemma-identities", sample=50, seed=42)
    assert suite_report_json(a) == suite_report_json(b)
    assert a.checked == 50


def test_unknown_suite_and_bad_n():
    with pytest.raises(ValueError):
        sweep(4, "no-such-suite")
    with pytest.raises(ValueError):
        sweep(1, "toric-smooth")
    with pytest.raises(ValueError):
        sweep(9, "toric-smooth")


def test_jobs_do_not_change_results():
    serial = sweep(4, "theorem-smooth", jobs=1)
    threaded = sweep(4, "theorem-smooth", jobs=4)
    assert suite_report_json(serial) == suite_report_json(threaded)


def test_suite_registry_names():
    assert set(SUITES) >= {
        "complexity-one-list",
        "theorem-toric",
        "theorem-smooth",
        "theorem-singular",
        "counting-bijection",
        "lemma-identities",
        "face-oracle",
        "product-proposition",
        "rank-factorization",
    }


def test_report_json_round_trips():
    report = classify((3, 4, 1, 2))
    data = json.loads(json.dumps(classification_json(report), sort_keys=True))
    assert classification_from_json(data) == report

    report = classify((4, 3, 2, 1))
    data = json.loads(json.dumps(classification_json(report), sort_keys=True))
    assert classification_from_json(data) == report

    suite = sweep(4, "complexity-one-list")
    data = json.loads(json.dumps(suite_report_json(suite), sort_keys=True))
    back = suite_report_from_json(data)
    assert back.suite == suite.suite and back.n == suite.n
    assert suite_report_json(back) == suite_report_json(suite)
