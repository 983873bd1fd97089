"""Suite runner: determinism, coverage, and small-grid smoke of every suite."""

import json
from fractions import Fraction

import pytest

from heckepoly.verify import (
    GridSpec,
    SUITES,
    SUITE_OPERATIONS,
    reports_to_json,
    run_all,
    run_suite,
)

SMALL = GridSpec(
    ns=(2,),
    betas=(0, 1),
    gammas=(Fraction(1, 2),),
    max_weight=3,
    degree=3,
    seed=7,
    pairs=3,
    rand_polys=4,
)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes_on_small_grid(name):
    report = run_suite(name, SMALL)
    assert report.cases_run > 0
    assert report.passed, report.failures[:3]


def test_unknown_suite():
    with pytest.raises(ValueError, match="unknown suite name"):
        run_suite("nonsense", SMALL)


def test_grid_bounds():
    with pytest.raises(ValueError, match="grid out of bounds"):
        GridSpec(ns=(5,))
    with pytest.raises(ValueError):
        GridSpec(degree=7)
    with pytest.raises(ValueError):
        GridSpec(betas=(4,))


def test_reports_deterministic_and_reproducible():
    first = reports_to_json(run_all(SMALL, ["duality_all", "dunkl_pairing_prop"]))
    second = reports_to_json(run_all(SMALL, ["duality_all", "dunkl_pairing_prop"]))
    assert first == second
    payload = json.loads(first)
    assert payload["all_passed"] is True
    assert [r["suite"] for r in payload["reports"]] == [
        "duality_all",
        "dunkl_pairing_prop",
    ]


def test_shift_suite_emits_calibration():
    report = run_suite("shift_all", SMALL)
    assert report.calibration
    sample = next(iter(report.calibration.values()))
    assert set(sample) == {"family", "assignment", "global_sign", "witness_N"}
    assert sample["assignment"] in ("swapped", "paper")


def test_dunkl_pairing_suite_records_verdict():
    report = run_suite("dunkl_pairing_prop", SMALL)
    verdict = report.calibration["proportionality"]
    assert verdict["dunkl,scale=1/2"] is True
    assert verdict["cherednik,scale=1"] is False
    assert verdict["cherednik,scale=1/2"] is False


def test_operation_coverage():
    catalog = {
        "operators.apply",
        "operators.dunkl_a",
        "operators.cherednik_a",
        "operators.dunkl_b",
        "operators.cherednik_b",
        "operators.creation_a",
        "operators.annihilation_a",
        "operators.creation_b",
        "operators.annihilation_b",
        "operators.htilde",
        "operators.symmetrizer",
        "operators.operator_equal",
        "operators.sutherland_expanded_apply",
        "families.nonsym_jack",
        "families.jack",
        "families.sigma_a",
        "families.hermite",
        "families.sigma_b",
        "families.laguerre",
        "families.nonsym_hermite",
        "families.nonsym_laguerre",
        "pairings.ct_pairing",
        "pairings.gauss_pairing",
        "pairings.laguerre_pairing",
        "pairings.dunkl_pairing",
        "pairings.norm_formula",
        "pairings.shift_constants",
        "raising.raising_operator",
        "raising.raising_apply",
        "raising.rodrigues",
        "shift.shift_apply",
        "shift.calibrate",
        "shift.duality_check",
        "shift.antisymmetrizer_lemma_check",
    }
    covered = set()
    for names in SUITE_OPERATIONS.values():
        covered.update(names)
    assert catalog <= covered, catalog - covered
    assert set(SUITE_OPERATIONS) == set(SUITES)


def test_failure_reporting_carries_counterexample():
    # a deliberately broken comparison must produce a structured failure
    from heckepoly.verify import SuiteReport

    report = SuiteReport("demo", {})
    report.record({"case": 1}, False, "lhs-value", "rhs-value")
    report.record({"case": 2}, True)
    assert not report.passed
    assert report.cases_run == 2 and report.cases_passed == 1
    assert report.failures == [
        {"params": {"case": 1}, "lhs": "lhs-value", "rhs": "rhs-value"}
    ]


def test_thread_env_cap(monkeypatch):
    from heckepoly import verify

    monkeypatch.setenv("HECKE_POLY_THREADS", "2")
    assert verify.max_workers() == 2
    reports = run_all(SMALL, ["jack_orth", "norm_equiv_appB"])
    assert all(r.passed for r in reports)
    monkeypatch.setenv("HECKE_POLY_THREADS", "junk")
    assert verify.max_workers() == 1
