import pytest

from knotslope import (
    GapDemo,
    InvariantTriple,
    MoveSequence,
    apply_moves,
    curtis_taylor_gap_demo,
    reachable,
)


def test_apply_moves_basic():
    start = InvariantTriple(8, -3, False)
    end = apply_moves(start, MoveSequence(handles=1, crosscaps_plus=3))
    assert end == InvariantTriple(14, -8, False)


def test_crosscaps_break_orientability():
    start = InvariantTriple(0, 1, True)
    assert apply_moves(start, MoveSequence(handles=2)).orientable
    assert not apply_moves(start, MoveSequence(crosscaps_minus=1)).orientable


def test_odd_slope_rejected():
    with pytest.raises(ValueError):
        InvariantTriple(3, 0, False)


def test_negative_counts_rejected():
    with pytest.raises(ValueError):
        MoveSequence(handles=-1)


def test_reachable_returns_minimal_witness():
    w = reachable(InvariantTriple(8, -3, False), InvariantTriple(14, -8, False))
    assert w == MoveSequence(handles=1, crosscaps_plus=3)


def test_reachable_orientable_to_orientable():
    w = reachable(InvariantTriple(0, 1, True), InvariantTriple(0, -3, True))
    assert w == MoveSequence(handles=2)


def test_orientable_target_needs_orientable_start():
    assert reachable(InvariantTriple(0, 1, False), InvariantTriple(0, -1, True)) is None


def test_slope_shift_needs_crosscaps():
    # (0, 1, orientable) -> (+2, 1, non-orientable): a crosscap would lower chi
    assert reachable(InvariantTriple(0, 1, True), InvariantTriple(2, 1, False)) is None


def test_parity_obstruction():
    # slope shift 2 needs an odd crosscap count; chi drop 2 forces even
    assert reachable(InvariantTriple(0, 0, False), InvariantTriple(2, -2, False)) is None


def test_orientable_start_to_nonorientable_same_slope():
    w = reachable(InvariantTriple(0, 1, True), InvariantTriple(0, -1, False))
    assert w == MoveSequence(crosscaps_plus=1, crosscaps_minus=1)


def test_witnesses_round_trip():
    triples = [
        InvariantTriple(s, e, o)
        for s in (-6, -2, 0, 4)
        for e in (1, 0, -3)
        for o in (False, True)
    ]
    checked = 0
    for start in triples:
        for end in triples:
            w = reachable(start, end)
            if w is not None:
                assert apply_moves(start, w) == end
                checked += 1
    assert checked > 0


def test_gap_demo_8_17_shape():
    basic = (InvariantTriple(8, -3, False), InvariantTriple(-8, -3, False))
    demo = curtis_taylor_gap_demo(basic, InvariantTriple(14, -8, False))
    assert isinstance(demo, GapDemo)
    assert demo.outside_range
    assert demo.witness_from == InvariantTriple(8, -3, False)
    assert demo.witness == MoveSequence(handles=1, crosscaps_plus=3)
    assert "outside" in str(demo)


def test_gap_demo_inside_range():
    basic = (InvariantTriple(8, -3, False), InvariantTriple(-8, -3, False))
    demo = curtis_taylor_gap_demo(basic, InvariantTriple(0, -5, False))
    assert not demo.outside_range
