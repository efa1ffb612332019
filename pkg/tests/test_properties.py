"""Property suite.

Runs entirely on planar fixtures, one tiny inline torus diagram and
randomly generated combinatorial maps; it does not load any transcribed
surface fixture, so it is independent of figure transcription.
"""

import random

from hypothesis import given, settings, strategies as st

from knotslope import (
    BLACK,
    WHITE,
    DiagramError,
    InvariantTriple,
    MoveSequence,
    apply_moves,
    build_surfaces,
    checkerboard_coloring,
    is_alternating,
    mirror,
    parse_diagram,
    pushoff_linking_oracle,
    reachable,
    surface_genus,
    trace_faces,
)
from knotslope.diagram import PortRef, SurfaceDiagram

from conftest import TINY_TORUS, corpus_diagram, planar_entries


def random_colorable_diagram(seed, max_crossings=5):
    """A connected, checkerboard-colorable map from a seeded matching search."""
    rng = random.Random(seed)
    while True:
        c = rng.randint(2, max_crossings)
        darts = list(range(4 * c))
        rng.shuffle(darts)
        arcs = [0] * (4 * c)
        for i in range(0, 4 * c, 2):
            a, b = darts[i], darts[i + 1]
            arcs[a], arcs[b] = b, a
        for genus in range(0, c + 1):
            try:
                d = SurfaceDiagram.from_arcs(
                    f"random-{seed}", c, arcs, PortRef(0, 0),
                    claimed_genus=genus, black_corner=PortRef(0, 0),
                )
                checkerboard_coloring(d)
                return d
            except DiagramError:
                continue


def all_test_diagrams():
    out = [corpus_diagram(e.id) for e in planar_entries()]
    out.append(parse_diagram(TINY_TORUS))
    out.extend(random_colorable_diagram(seed) for seed in range(25))
    return out


def test_oracle_equivalence_on_planar_fixtures():
    for entry in planar_entries():
        d = corpus_diagram(entry.id)
        coloring = checkerboard_coloring(d)
        black, white = build_surfaces(d)
        assert pushoff_linking_oracle(d, coloring, BLACK) == black.slope
        assert pushoff_linking_oracle(d, coloring, WHITE) == white.slope


def test_alternating_spread_is_twice_crossing_number():
    checked = 0
    for d in all_test_diagrams():
        if not is_alternating(d):
            continue
        black, white = build_surfaces(d)
        assert abs(black.slope - white.slope) == 2 * d.crossing_count
        checked += 1
    assert checked >= 5


def test_euler_characteristics_sum():
    for d in all_test_diagrams():
        g = surface_genus(d)
        black, white = build_surfaces(d)
        assert black.euler + white.euler == 2 - 2 * g - d.crossing_count


def test_mirror_negates_slopes_preserves_chi_and_orientability():
    for d in all_test_diagrams():
        black, white = build_surfaces(d)
        m_black, m_white = build_surfaces(mirror(d))
        assert sorted([m_black.slope, m_white.slope]) == sorted(
            [-black.slope, -white.slope]
        )
        assert sorted([m_black.euler, m_white.euler]) == sorted(
            [black.euler, white.euler]
        )
        assert sorted([m_black.orientable, m_white.orientable]) == sorted(
            [black.orientable, white.orientable]
        )


def test_euler_formula():
    for d in all_test_diagrams():
        c, faces = d.crossing_count, len(trace_faces(d))
        assert c - 2 * c + faces == 2 - 2 * surface_genus(d)


def test_all_slopes_even():
    for d in all_test_diagrams():
        black, white = build_surfaces(d)
        assert black.slope % 2 == 0
        assert white.slope % 2 == 0


def test_move_witnesses_round_trip_bulk():
    rng = random.Random(987654321)
    count = 0
    while count < 1200:
        start = InvariantTriple(
            slope=2 * rng.randint(-12, 12),
            euler=rng.randint(-10, 1),
            orientable=rng.random() < 0.5,
        )
        moves = MoveSequence(
            handles=rng.randint(0, 4),
            crosscaps_plus=rng.randint(0, 4),
            crosscaps_minus=rng.randint(0, 4),
        )
        end = apply_moves(start, moves)
        witness = reachable(start, end)
        assert witness is not None, (start, moves, end)
        assert apply_moves(start, witness) == end
        assert len(witness) <= len(moves)
        count += 1


@settings(max_examples=200, deadline=None)
@given(
    slope=st.integers(-20, 20).map(lambda n: 2 * n),
    euler=st.integers(-12, 1),
    orientable=st.booleans(),
    handles=st.integers(0, 5),
    plus=st.integers(0, 5),
    minus=st.integers(0, 5),
)
def test_move_witnesses_round_trip_hypothesis(
    slope, euler, orientable, handles, plus, minus
):
    start = InvariantTriple(slope, euler, orientable)
    moves = MoveSequence(handles=handles, crosscaps_plus=plus, crosscaps_minus=minus)
    end = apply_moves(start, moves)
    witness = reachable(start, end)
    assert witness is not None
    assert apply_moves(start, witness) == end


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10_000))
def test_random_diagram_structural_properties(seed):
    d = random_colorable_diagram(seed, max_crossings=4)
    g = surface_genus(d)
    black, white = build_surfaces(d)
    assert black.euler + white.euler == 2 - 2 * g - d.crossing_count
    assert black.slope % 2 == 0 and white.slope % 2 == 0
