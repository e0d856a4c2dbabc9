import json
from fractions import Fraction

import pytest

from qtrsk.errors import UnknownSuite
from qtrsk.suites import SUITES, Options, VerificationReport, run_suite

SMALL = Options(max_cells=4, rows=2, cols=2)


@pytest.mark.parametrize("name", [n for n in SUITES if n not in ("appendix",)])
def test_suite_passes_on_small_bounds(name):
    rep = run_suite(name, SMALL)
    assert rep.ok, rep.text()
    assert rep.instances > 0


def test_appendix_small():
    rep = run_suite("appendix", Options(max_cells=6))
    assert rep.ok and rep.instances > 0


def test_report_json_is_deterministic():
    a = run_suite("compatibility", Options(max_cells=5)).to_json()
    b = run_suite("compatibility", Options(max_cells=5)).to_json()
    assert json.dumps(a) == json.dumps(b)
    assert a["bounds"] == {"max_cells": 5, "seed": 2024}


def test_report_sorts_failures():
    rep = VerificationReport("x")
    rep.check(False, "b")
    rep.check(False, "a")
    rep.check(True, "c")
    data = rep.to_json()
    assert [f["input"] for f in data["failures"]] == ["a", "b"]
    assert data["instances"] == 3 and not data["ok"]
    assert "FAIL" in rep.text()


def test_eval_point_is_recorded():
    rep = run_suite("cauchy", Options(rows=2, cols=2, eval_point=(Fraction(1, 3), Fraction(2, 5))))
    assert rep.ok
    assert rep.bounds["eval"] == ["1/3", "2/5"]


def test_parallel_matches_serial(monkeypatch):
    serial = run_suite("sum-to-one", Options(max_cells=6)).to_json()
    monkeypatch.setenv("QTRSK_THREADS", "2")
    parallel = run_suite("sum-to-one", Options(max_cells=6)).to_json()
    assert serial == parallel


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope")


@pytest.mark.slow
def test_word_insertion_sweep_at_default_bounds():
    # every tableau with at most 6 cells and every letter up to 5
    rep = run_suite("example-words")
    assert rep.ok, rep.text()
