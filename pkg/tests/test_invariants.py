from collections import Counter

import pytest

from knotslope import (
    BLACK,
    WHITE,
    build_surfaces,
    checkerboard_coloring,
    classify_crossings,
    classify_surface,
    parse_diagram,
    pushoff_linking_oracle,
)

from conftest import TINY_TORUS, corpus_diagram

# (fixture id, black triple, white triple), frozen from the planar pushoff
# oracle and cross-checked against published invariants.
PLANAR_VALUES = [
    ("trefoil-planar", (-6, 0, False), (0, -1, True)),
    ("figure8-planar", (-4, -1, False), (4, -1, False)),
    ("8_17-planar", (-8, -3, False), (8, -3, False)),
    ("12a603-planar", (-10, -6, False), (14, -4, False)),
    ("10_161-planar", (-16, -1, False), (-4, -7, False)),
]


@pytest.mark.parametrize("fid,black_triple,white_triple", PLANAR_VALUES)
def test_planar_invariant_triples(fid, black_triple, white_triple):
    d = corpus_diagram(fid)
    black, white = build_surfaces(d)
    assert (black.slope, black.euler, black.orientable) == black_triple
    assert (white.slope, white.euler, white.orientable) == white_triple


@pytest.mark.parametrize("fid,black_triple,white_triple", PLANAR_VALUES)
def test_pushoff_oracle_agrees(fid, black_triple, white_triple):
    d = corpus_diagram(fid)
    coloring = checkerboard_coloring(d)
    assert pushoff_linking_oracle(d, coloring, BLACK) == black_triple[0]
    assert pushoff_linking_oracle(d, coloring, WHITE) == white_triple[0]


def test_crossing_types_partition_crossings():
    d = corpus_diagram("8_17-planar")
    types = classify_crossings(d, checkerboard_coloring(d))
    counts = Counter(t.kind for t in types)
    # slopes -8/+8: four crossings feed each surface
    assert counts == {"a": 4, "b": 4}
    assert sorted(t.crossing for t in types) == list(range(8))


def test_trefoil_crossings_all_feed_black():
    d = corpus_diagram("trefoil-planar")
    counts = Counter(t.kind for t in classify_crossings(d, checkerboard_coloring(d)))
    assert counts == {"b": 3}


def test_classify_surface():
    assert classify_surface(-1, True).genus == 1
    assert classify_surface(1, True).genus == 0
    assert classify_surface(0, False).crosscaps == 1
    assert classify_surface(-3, False).crosscaps == 4
    with pytest.raises(ValueError):
        classify_surface(0, True)  # chi 0 orientable needs two boundary circles
    with pytest.raises(ValueError):
        classify_surface(2, True)


def test_tiny_torus_invariants():
    d = parse_diagram(TINY_TORUS)
    black, white = build_surfaces(d)
    assert (black.slope, black.euler, black.orientable) == (-2, -2, False)
    assert (white.slope, white.euler, white.orientable) == (4, -1, False)


def test_framing_offsets_both_slopes():
    framed = TINY_TORUS.replace("crossings 3", "crossings 3\nframing 4")
    black, white = build_surfaces(parse_diagram(framed))
    assert (black.slope, white.slope) == (2, 8)


def test_oracle_rejects_positive_genus():
    d = parse_diagram(TINY_TORUS)
    with pytest.raises(ValueError):
        pushoff_linking_oracle(d, checkerboard_coloring(d), BLACK)
