import pytest

from knotslope import (
    FixtureError,
    build_surfaces,
    fixture_corpus,
    is_alternating,
    knot_record,
    knot_records,
    load_fixture,
    primality_check,
    reduced_check,
    surface_genus,
    validate_ga,
)


def check_expectations(entry, d):
    black, white = build_surfaces(d)
    computed = {
        "slopes": {black.slope, white.slope},
        "eulers": {black.euler, white.euler},
        "orientable": {black.orientable, white.orientable},
        "black_triple": (black.slope, black.euler, black.orientable),
        "white_triple": (white.slope, white.euler, white.orientable),
        "genus": surface_genus(d),
        "crossings": d.crossing_count,
        "ga_overall": validate_ga(d).overall,
        "alternating": is_alternating(d),
        "prime": primality_check(d),
        "reduced": reduced_check(d),
    }
    for key, expected in entry.expectations.items():
        assert computed[key] == expected, f"{entry.id}: {key}"


@pytest.mark.parametrize("entry", fixture_corpus(), ids=lambda e: e.id)
def test_every_fixture_meets_its_expectations(entry):
    check_expectations(entry, load_fixture(entry))


def test_corpus_has_at_least_ten_entries():
    assert len(fixture_corpus()) >= 10


def test_required_knots_covered():
    knots = {e.knot for e in fixture_corpus()}
    assert {"3_1", "4_1", "8_17", "12a603", "10_161", "granny"} <= knots


def test_records_frozen_facts():
    r = knot_record("8_17")
    assert r.crossing_number == 8
    assert r.amphichiral is True
    assert r.known_slopes.contains_infinity
    assert len(r.known_slopes.finite()) == 11
    assert knot_record("10_161").known_slopes.finite() == frozenset(
        [-20, -18, -9, -8, 0, 2]
    )
    assert set(knot_records()) >= {"3_1", "4_1", "8_17", "10_161", "12a603"}


def test_unknown_record_fails_fast():
    with pytest.raises(FixtureError):
        knot_record("nope")


def test_fixture_dir_override_and_corrupt_fixture(tmp_path, monkeypatch):
    entry = next(e for e in fixture_corpus() if e.id == "trefoil-planar")
    (tmp_path / entry.filename).write_text("X[1,4,2")
    monkeypatch.setenv("KNOTSLOPE_FIXTURES", str(tmp_path))
    with pytest.raises(FixtureError, match="trefoil-planar"):
        load_fixture(entry)


def test_missing_fixture_reports_id(tmp_path, monkeypatch):
    entry = next(e for e in fixture_corpus() if e.id == "figure8-planar")
    monkeypatch.setenv("KNOTSLOPE_FIXTURES", str(tmp_path))
    with pytest.raises(FixtureError, match="figure8-planar"):
        load_fixture(entry)
