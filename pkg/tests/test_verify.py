"""The verification engine itself: reports, determinism, failure witnesses."""

import pytest

from halfturn_ice.laurent import LaurentPoly
from halfturn_ice.verify import (
    SUITES, UnknownSuite, run_suite, verify_theorem, verify_ybe)

CHEAP_SUITES = [
    "ybe", "leading-C-S", "lemma2-counts", "lemma7-12-counts", "genfunc",
    "ht-even-leading", "factorization", "ht2-recursion", "ht-odd-leading",
    "parity", "counts-closed", "refined-1", "refined-split", "four-enum",
]


@pytest.mark.parametrize("suite_id", CHEAP_SUITES)
def test_cheap_suites_pass(suite_id):
    report = run_suite(suite_id)
    assert report.passed, report.witness
    assert report.checks_run > 0
    assert report.witness is None


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("does-not-exist")


def test_reports_are_deterministic():
    a = run_suite("det-oracle", seed=7)
    b = run_suite("det-oracle", seed=7)
    assert a.to_json() == b.to_json()
    c = run_suite("det-oracle", seed=8)
    assert c.passed  # different points, same verdict


def test_report_json_shape():
    rep = run_suite("parity")
    obj = rep.to_json_obj()
    assert obj["schemaVersion"] == 1
    assert obj["suiteId"] == "parity"
    assert obj["status"] == "pass"
    assert obj["witness"] is None
    assert "elapsedSeconds" not in obj
    assert "elapsedSeconds" in rep.to_json_obj(include_elapsed=True)


def test_ybe_negative_control_has_witness():
    x = LaurentPoly.monomial(1, {"X": 1})
    y = LaurentPoly.monomial(1, {"Y": 1})
    rep = verify_ybe(x, y, z=x)
    assert not rep.passed
    assert rep.witness is not None
    assert "lhs" in rep.witness and "rhs" in rep.witness


def test_ybe_unit_point():
    one = LaurentPoly.const(1)
    a = LaurentPoly.var("a")
    rep = verify_ybe(one, one, z=a)
    assert rep.passed and rep.checks_run == 64


def test_verify_theorem_wrappers():
    assert verify_theorem(1, 1).passed
    rep2 = verify_theorem(2, 1)
    assert rep2.passed and rep2.params["eq25_reading"] == "2m+2"
    rep3 = verify_theorem(3, 1, points=5, seed=3)
    assert rep3.passed and rep3.checks_run == 5
    with pytest.raises(ValueError):
        verify_theorem(4, 1)


def test_suite_params_override():
    rep = run_suite("three-term", {"n_max": 1, "m_max": 1, "points": 2})
    assert rep.passed
    assert rep.checks_run == 8  # two sizes, two coordinates each, two points


def test_recorded_readings():
    rep = run_suite("refined-1")
    assert rep.params["ht2_reading"] == "factorial"
    rep2 = run_suite("theorem2", {"m_max": 0})
    assert rep2.params["eq25_reading"] == "2m+2"
    rep3 = run_suite("ht-even-leading", {"m_max": 1})
    assert rep3.params["cofactor_subleading_sign"] == ["minus"]


def test_catalog_is_complete():
    expected = {
        "ybe", "dwbc-recursion", "dwbc-symmetry", "leading-C-S", "lemma2-counts",
        "lemma7-12-counts", "genfunc", "ht-even-recursion", "ht-even-leading",
        "factorization", "ht2-recursion", "ht-odd-recursion", "ht-odd-inversion",
        "ht-odd-leading", "theorem1", "theorem2", "theorem3", "parity",
        "special-recursion", "three-term", "det-oracle", "wronskian",
        "counts-closed", "refined-1", "xenum", "refined-split", "four-enum",
    }
    assert set(SUITES) == expected
