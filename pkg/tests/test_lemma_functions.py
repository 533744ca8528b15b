"""Tests for the auxiliary lemma functions and their scans."""
import math
import numpy as np
import pytest
from src.extremal.lemma_functions import LEMMA_FUNCTIONS, evaluate, f, f1, f2, f3, g, get_lemma_function
from src.extremal.monotonicity import (
    classify, convexity_scan, default_scans, grid_points, monotonicity_scan, scan_lemma_claims,
)
from src.models.errors import InvalidArgumentError


@pytest.mark.parametrize("value, expected", [
    (f1(1, 3, 1), math.sqrt(10) - math.sqrt(5)),
    (f1(2, 3, 1), math.sqrt(13) - math.sqrt(8)),
    (f1(4, 3, 3), 5 - 4),
    (f2(2, 1), 2 * math.sqrt(5) + math.sqrt(8)),
    (f2(3, 1), math.sqrt(10) + 2 * math.sqrt(13) + 2 * math.sqrt(8)),
    (f2(2.5, 2.5), 2.5 * math.sqrt(7.25)),
    (f3(2), 2 * math.sqrt(8)),
    (f3(3), 3 * math.sqrt(13) - math.sqrt(5)),
    (f3(4), 4 * math.sqrt(20) - 2 * math.sqrt(8)),
    (f(2), math.sqrt(8) + math.sqrt(5)),
    (g(2), (math.sqrt(8) + math.sqrt(5)) - (2 * math.sqrt(13) + math.sqrt(10))),
])
def test_point_values(value, expected):
    assert isinstance(value, float)
    assert value == pytest.approx(expected, rel=1e-12)


def test_g_at_three():
    assert g(3) == pytest.approx(-7.166133, abs=1e-6)


def test_array_evaluation_matches_scalars():
    xs = np.array([2.0, 3.5, 10.0])
    assert np.allclose(f3(xs), [f3(x) for x in xs], rtol=1e-15)
    assert np.allclose(evaluate("f1", xs, {"d": 4, "r": 2}), [f1(x, 4, 2) for x in xs], rtol=1e-15)


@pytest.mark.parametrize("call", [
    lambda: f1(0, 3, 1),
    lambda: f1(1, 3, 4),
    lambda: f2(0.5, 1),
    lambda: f2(1, -1),
    lambda: f3(1.9),
    lambda: f(0.5),
    lambda: evaluate("f2", 3.0, {}),
    lambda: get_lemma_function("h"),
])
def test_domain_violations(call):
    with pytest.raises(InvalidArgumentError):
        call()


def test_domain_error_names_the_first_bad_point():
    with pytest.raises(InvalidArgumentError, match="x=1.5"):
        f3(np.array([2.0, 1.5, 1.0]))


def test_grid_points():
    xs = grid_points((2.0, 50.0, 0.5))
    assert len(xs) == 97
    assert xs[0] == 2.0 and xs[-1] == 50.0
    with pytest.raises(InvalidArgumentError):
        grid_points((2.0, 1.0, 0.5))
    with pytest.raises(InvalidArgumentError):
        grid_points((2.0, 3.0, 0.0))


def test_classify():
    xs = np.arange(5, dtype=float)
    assert classify(np.array([1.0, 2.0, 3.0, 4.0, 5.0]), xs)[0] == "strictly-increasing"
    assert classify(np.array([5.0, 4.0, 3.0, 2.0, 1.0]), xs)[0] == "strictly-decreasing"

    direction, witness, _ = classify(np.array([1.0, 2.0, 1.5, 3.0, 4.0]), xs, "strictly-increasing")
    assert direction == "non-monotone"
    assert witness == (1.0, 2.0)

    direction, _, at = classify(np.array([1.0, 2.0, 2.0, 3.0, 4.0]), xs)
    assert direction == "inconclusive"
    assert at == 1.0


def test_scan_examples():
    assert monotonicity_scan("f3", {}, (2.0, 50.0, 0.5)).direction == "strictly-increasing"
    assert monotonicity_scan("f1", {"d": 3, "r": 1}, (0.5, 50.0, 0.5)).direction == "strictly-decreasing"

    g_scan = monotonicity_scan("g", {}, (2.0, 50.0, 0.5), "strictly-increasing")
    assert g_scan.direction == "strictly-decreasing"
    assert g_scan.witness == (2.0, 2.5)

    convex = convexity_scan("f", {}, (2.0, 50.0, 0.5))
    assert convex.kind == "convexity"
    assert convex.direction == "strictly-increasing"


def test_scan_rejects_short_grids_and_domain_violations():
    with pytest.raises(InvalidArgumentError):
        monotonicity_scan("f3", {}, (2.0, 2.5, 0.5))
    with pytest.raises(InvalidArgumentError):
        convexity_scan("f", {}, (2.0, 3.0, 0.5))
    with pytest.raises(InvalidArgumentError, match="x=1.5"):
        monotonicity_scan("f3", {}, (1.5, 10.0, 0.5))
    with pytest.raises(InvalidArgumentError):
        monotonicity_scan("f1", {"d": 3, "r": 1}, (0.0, 10.0, 0.5))


def test_default_scans_cover_the_parameter_ranges():
    plans = default_scans()
    assert set(plans) == set(LEMMA_FUNCTIONS)
    assert len(plans["f1"]) == sum(d for d in range(2, 11))
    assert [bindings["r"] for bindings, _ in plans["f2"]] == [0.0, 1.0, 2.0, 3.0, 4.0, 5.0]


def test_claim_battery():
    reports = {report.function_id: report for report in scan_lemma_claims()}
    assert all(report.passed for report in reports.values())

    for function_id in ("f1", "f2", "f3", "f"):
        assert reports[function_id].observed_direction == reports[function_id].claimed_direction
        assert not reports[function_id].documented_discrepancy

    assert reports["g"].claimed_direction == "strictly-increasing"
    assert reports["g"].observed_direction == "strictly-decreasing"
    assert reports["g"].documented_discrepancy
    assert "increasing" in reports["g"].claim
