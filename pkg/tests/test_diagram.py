import pytest

from knotslope import (
    BLACK,
    WHITE,
    ParseError,
    StructureError,
    canonical_form,
    checkerboard_coloring,
    ingest_pd_code,
    is_alternating,
    is_isomorphic,
    mirror,
    parse_diagram,
    serialize_diagram,
    surface_genus,
    trace_faces,
)

from conftest import TINY_TORUS, corpus_diagram, planar_entries

TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


def test_pd_ingest_trefoil():
    d = ingest_pd_code(TREFOIL_PD, name="trefoil")
    assert d.crossing_count == 3
    assert d.claimed_genus == 0
    assert surface_genus(d) == 0
    assert len(trace_faces(d)) == 5
    assert is_alternating(d)


def test_euler_formula_planar_fixtures():
    for entry in planar_entries():
        d = corpus_diagram(entry.id)
        # c - 2c + F = 2 - 2g
        assert d.crossing_count - 2 * d.crossing_count + len(trace_faces(d)) == 2


def test_serialize_parse_round_trip():
    d = ingest_pd_code(TREFOIL_PD, name="trefoil")
    d2 = parse_diagram(serialize_diagram(d))
    assert d2.arcs == d.arcs
    assert d2.claimed_genus == d.claimed_genus
    assert d2.framing == d.framing


def test_mirror_is_involution():
    d = corpus_diagram("8_17-planar")
    assert is_isomorphic(mirror(mirror(d)), d)


def test_canonical_form_stable_under_serialization():
    d = corpus_diagram("figure8-planar")
    assert canonical_form(parse_diagram(serialize_diagram(d))) == canonical_form(d)


def test_writhe_frozen_values():
    assert ingest_pd_code(TREFOIL_PD).writhe() == -3
    assert corpus_diagram("figure8-planar").writhe() == 0
    assert corpus_diagram("8_17-planar").writhe() == 0


def test_coloring_is_proper():
    for entry in planar_entries():
        d = corpus_diagram(entry.id)
        faces = trace_faces(d)
        coloring = checkerboard_coloring(d, faces)
        for x in range(d.crossing_count):
            colors = [coloring.color(faces.face_of[4 * x + k]) for k in range(4)]
            assert colors[0] == colors[2] != colors[1] == colors[3]
        assert set(coloring.colors) == {BLACK, WHITE}


def test_truncated_file_is_a_parse_error():
    with pytest.raises(ParseError):
        parse_diagram("surface-diagram v1\nknot broken\ngenus 0\n")
    with pytest.raises(ParseError):
        ingest_pd_code("X[1,4,2")


def test_tiny_torus_parses_with_genus_1():
    d = parse_diagram(TINY_TORUS)
    assert d.claimed_genus == 1
    assert surface_genus(d) == 1
    assert d.framing == 0


def test_genus_mismatch_rejected():
    with pytest.raises(StructureError):
        parse_diagram(TINY_TORUS.replace("genus 1", "genus 0"))


def test_framing_parses_serializes_and_mirrors():
    framed = TINY_TORUS.replace("crossings 3", "crossings 3\nframing 4")
    d = parse_diagram(framed)
    assert d.framing == 4
    assert parse_diagram(serialize_diagram(d)).framing == 4
    assert mirror(d).framing == -4


def test_odd_framing_rejected():
    framed = TINY_TORUS.replace("crossings 3", "crossings 3\nframing 3")
    with pytest.raises(StructureError):
        parse_diagram(framed)


def test_framing_requires_positive_genus():
    d = corpus_diagram("trefoil-planar")
    text = serialize_diagram(d).replace("crossings 3", "crossings 3\nframing 2")
    with pytest.raises(StructureError):
        parse_diagram(text)
