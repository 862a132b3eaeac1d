import math

import pytest

from circkit.graphs import CirculantSpec
from circkit.report import (
    CSV_COLUMNS,
    InvariantResult,
    Tolerances,
    run_verification,
    sweep_rows,
)


def test_invariant_result_json_round_trip():
    results = [
        InvariantResult(
            spec=CirculantSpec.from_deleted(7, {1}),
            quantity="resistance", method="oracle", representation="rational",
            value="48/91", metadata={"u": 0, "v": 1, "q": 1},
        ),
        InvariantResult(
            spec=CirculantSpec.weighted(6, {1: "1/2"}),
            quantity="trees", method="spectral", representation="log",
            value=-2.07944, metadata={},
        ),
    ]
    for res in results:
        assert InvariantResult.from_dict(res.to_dict()) == res
        assert InvariantResult.from_dict(res.to_dict()).to_dict() == res.to_dict()


def test_invariant_result_validation():
    spec = CirculantSpec.from_deleted(5, {1})
    with pytest.raises(ValueError):
        InvariantResult(spec=spec, quantity="nope", method="oracle",
                        representation="float", value=1.0)
    with pytest.raises(ValueError):
        InvariantResult(spec=spec, quantity="trees", method="magic",
                        representation="float", value=1.0)


def test_csv_row_schema():
    res = InvariantResult(
        spec=CirculantSpec.from_deleted(7, {1}),
        quantity="resistance", method="oracle", representation="rational",
        value="48/91", metadata={"u": 0, "v": 1, "q": 1},
    )
    row = res.to_csv_row()
    assert set(row) == set(CSV_COLUMNS)
    assert row["exact_value"] == "48/91"
    assert row["value"] == pytest.approx(48 / 91)
    assert row["s_or_r"] == "1"


def test_tolerances_override():
    tol = Tolerances().override(resistance=1e-6)
    assert tol.resistance == 1e-6
    assert tol.trees == 1e-9
    assert tol.for_quantity("forests") == 1e-6
    with pytest.raises(ValueError):
        Tolerances().override(bogus=1.0)


def test_run_verification_passes_on_defaults():
    report = run_verification(range(5, 10))
    assert report.passed
    summary = report.summary
    assert summary["failed"] == 0
    assert summary["cases"] == len(report.cases)
    worst = summary["worst_rel_dev"]
    assert all(c.max_rel_dev <= worst for c in report.cases)


def test_run_verification_closed_column_only_when_applicable():
    report = run_verification([9, 10], deleted=frozenset({2}))
    by_n = {}
    for case in report.cases:
        by_n.setdefault(case.spec.n, set()).update(case.values)
    assert "closed" in by_n[9]
    assert "closed" not in by_n[10]


def test_run_verification_disconnected_spec():
    report = run_verification([6], deleted=frozenset({1, 2}))
    assert report.passed
    assert len(report.cases) == 1
    assert report.cases[0].quantity == "trees"
    assert report.cases[0].values["oracle"] == 0.0


def test_run_verification_detects_forced_failure():
    report = run_verification([5], tolerances=Tolerances().override(resistance=0.0))
    assert not report.passed
    assert any(not c.passed for c in report.cases)
    payload = report.to_dict()
    assert payload["summary"]["failed"] >= 1


def test_sweep_rows_tree_ratio():
    rows, skipped = sweep_rows("tree-ratio", 5, 101)
    assert skipped == 0
    ns = [row["n"] for row in rows]
    assert ns == sorted(ns) and len(set(ns)) == len(ns)
    assert all(math.isfinite(row["value"]) for row in rows)
    assert rows[-1]["deviation"] < 1e-2
    assert rows[-1]["limit"] == pytest.approx(math.exp(-2), rel=1e-12)


def test_sweep_rows_skips_even():
    rows, skipped = sweep_rows("kirchhoff-scaled", 5, 12, step=1)
    assert skipped == 4
    assert all(row["n"] % 2 == 1 for row in rows)


def test_sweep_rows_other_quantities():
    rows, _ = sweep_rows("resistance-scaled", 5, 41, q=3)
    assert rows[-1]["limit"] == 1.0
    assert rows[-1]["value"] == pytest.approx(1.0, rel=0.2)
    rows, _ = sweep_rows("rho-gap", 5, 41)
    assert abs(rows[-1]["value"]) < abs(rows[0]["value"])
    with pytest.raises(ValueError):
        sweep_rows("bogus", 5, 9)
