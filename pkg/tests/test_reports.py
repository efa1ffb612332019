import json

import pytest

from knotslope import (
    KnotRecord,
    SlopeSet,
    counterexample_report,
    diameter,
    knot_record,
    report_to_json,
    spanning_diameter_lower_bound,
    validate_ga,
    build_surfaces,
)

from conftest import corpus_diagram


def test_diameter_examples():
    assert diameter(SlopeSet.of([-20, -18, -9, -8, 0, 2])) == 22
    assert diameter(knot_record("8_17").known_slopes) == 28
    assert diameter(knot_record("10_161").known_slopes) == 22


def test_diameter_ignores_infinity_but_needs_finite_slopes():
    assert diameter(SlopeSet.of([0, 4], contains_infinity=True)) == 4
    with pytest.raises(ValueError):
        diameter(SlopeSet.of([], contains_infinity=True))


def test_slope_set_negation():
    s = SlopeSet.of([-14, 8], contains_infinity=True)
    assert s.negated().finite() == frozenset([14, -8])
    assert s.negated().contains_infinity


def test_record_rejects_tiny_crossing_number():
    with pytest.raises(ValueError):
        KnotRecord(name="bad", crossing_number=1)


def test_lower_bound_excludes_invalid_diagrams():
    good = corpus_diagram("8_17-planar")
    bad = corpus_diagram("10_161-planar")  # not alternating: excluded
    entries = [
        (validate_ga(d), build_surfaces(d)) for d in (good, bad)
    ]
    assert spanning_diameter_lower_bound(entries) == 16
    with pytest.raises(ValueError):
        spanning_diameter_lower_bound([entries[1]])


def test_report_with_only_invalid_diagrams_is_inconclusive():
    record = knot_record("10_161")
    report = counterexample_report(record, [corpus_diagram("10_161-planar")])
    assert report.d_s_lower is None
    assert report.verdict == "inconclusive"
    assert not report.diagrams[0].counted


def test_planar_8_17_report_is_consistent():
    record = knot_record("8_17")
    report = counterexample_report(record, [corpus_diagram("8_17-planar")])
    assert report.d_s_lower == 16
    assert report.two_c == 16
    assert report.verdict == "consistent"
    assert report.d_known == 28


def test_json_schema_and_determinism():
    record = knot_record("8_17")
    diagrams = [corpus_diagram("8_17-planar")]
    first = report_to_json(counterexample_report(record, diagrams))
    second = report_to_json(counterexample_report(record, diagrams))
    assert first == second  # byte-identical
    doc = json.loads(first)
    assert list(doc) == [
        "schema", "knot", "crossing_number", "two_c",
        "diagrams", "d_S_lower", "d_known", "verdict",
    ]
    assert doc["schema"] == 1
    assert doc["knot"] == "8_17"
    assert doc["two_c"] == 16
    assert doc["diagrams"][0]["black"]["slope"] == -8
    assert doc["d_known"] == 28
