import json

import pytest

from verlinde.suites import SUITES, image_both, primes_between, run_suite, subalgebra_cell
from verlinde.rootsys import build_root_datum


def test_report_schema():
    report = run_suite("typeD", {"p_max": 13, "threads": None})
    assert set(report) == {"schema_version", "suite", "version", "params", "checks", "summary", "elapsed_ms"}
    assert report["schema_version"] == 1
    assert report["params"] == {"p_max": 13}
    assert report["summary"] == {"pass": 3, "fail": 0, "skipped": 0}
    for c in report["checks"]:
        assert set(c) == {"id", "anchor", "status", "witness"}
        json.dumps(c)


def test_reports_are_deterministic():
    a = run_suite("dims", {}, timing=False)
    b = run_suite("dims", {}, timing=False)
    assert a["elapsed_ms"] is None
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")
    assert "thm-main" in SUITES and len(SUITES) == 11


def test_primes_between():
    assert primes_between(5, 23) == [5, 7, 11, 13, 17, 19, 23]


def test_image_both_agrees():
    g2 = build_root_datum("G2")
    factors, image, agree = image_both(g2, g2.highest_long_root, 13)
    assert agree and factors == [2, 10]
    assert image.as_dict() == {2: 1, 10: 1}


def test_subalgebra_cell():
    cell = subalgebra_cell(7, 17)
    assert cell["conforms"]
    assert len(cell["masks"]) == 4
