"""Crosscap and handle moves on spanning-surface invariant triples.

A spanning surface of a knot is summarised here by its invariant triple
(boundary slope, Euler characteristic, orientability).  Two local
modifications act on such a triple:

* a crosscap attaches a half-twisted band, shifting the slope by +2 or -2,
  lowering the Euler characteristic by 1 and making the result
  non-orientable;
* a handle attaches a trivial tube, lowering the Euler characteristic by 2
  and changing nothing else.

Since the effect depends only on how many moves of each kind are applied, a
sequence is a triple of counts.  This module applies sequences, decides
reachability between triples (returning a minimal witness), and packages
the gap demonstration: moves can carry a checkerboard triple to slopes
strictly outside the range spanned by the planar checkerboard surfaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

__all__ = [
    "InvariantTriple",
    "MoveSequence",
    "GapDemo",
    "apply_moves",
    "reachable",
    "curtis_taylor_gap_demo",
]


@dataclass(frozen=True, order=True)
class InvariantTriple:
    """(boundary slope, Euler characteristic, orientability) of a surface."""

    slope: int
    euler: int
    orientable: bool

    def __post_init__(self) -> None:
        if self.slope % 2 != 0:
            raise ValueError(f"boundary slope must be even, got {self.slope}")

    def __str__(self) -> str:
        sign = "+" if self.slope > 0 else ""
        kind = "orientable" if self.orientable else "non-orientable"
        return f"({sign}{self.slope}, {self.euler}, {kind})"


@dataclass(frozen=True)
class MoveSequence:
    """Counts of moves; order of application never matters."""

    handles: int = 0
    crosscaps_plus: int = 0
    crosscaps_minus: int = 0

    def __post_init__(self) -> None:
        if min(self.handles, self.crosscaps_plus, self.crosscaps_minus) < 0:
            raise ValueError("move counts must be nonnegative")

    @property
    def crosscaps(self) -> int:
        return self.crosscaps_plus + self.crosscaps_minus

    def __add__(self, other: "MoveSequence") -> "MoveSequence":
        return MoveSequence(
            self.handles + other.handles,
            self.crosscaps_plus + other.crosscaps_plus,
            self.crosscaps_minus + other.crosscaps_minus,
        )

    def __len__(self) -> int:
        return self.handles + self.crosscaps

    def __str__(self) -> str:
        parts = []
        if self.crosscaps_plus:
            parts.append(f"{self.crosscaps_plus} crosscap(+)")
        if self.crosscaps_minus:
            parts.append(f"{self.crosscaps_minus} crosscap(-)")
        if self.handles:
            parts.append(f"{self.handles} handle")
        return " + ".join(parts) if parts else "no moves"


def apply_moves(triple: InvariantTriple, moves: MoveSequence) -> InvariantTriple:
    """Invariant triple after attaching the given handles and crosscaps."""
    return InvariantTriple(
        slope=triple.slope + 2 * (moves.crosscaps_plus - moves.crosscaps_minus),
        euler=triple.euler - 2 * moves.handles - moves.crosscaps,
        orientable=triple.orientable and moves.crosscaps == 0,
    )


def reachable(
    start: InvariantTriple, end: InvariantTriple
) -> Optional[MoveSequence]:
    """A minimal move sequence carrying ``start`` to ``end``, or None.

    With k crosscaps (p of them positive) and h handles:

        end.slope = start.slope + 2(2p - k)
        end.euler = start.euler - k - 2h
        end is orientable iff start is and k = 0.

    Writing s = (end.slope - start.slope)/2, a solution needs k >= |s| with
    k = s (mod 2) so p = (k + s)/2 is integral, k = start.euler - end.euler
    (mod 2) so h is integral and nonnegative, and the orientability of the
    endpoints must be compatible.  The two congruences both fix k mod 2, so
    they must agree; the smallest admissible k is |s|, except that reaching
    a non-orientable surface from an orientable one with no net slope shift
    needs a +/- pair of crosscaps.  Minimality: smallest k, then h is
    forced.
    """
    ds = end.slope - start.slope
    de = start.euler - end.euler
    if de < 0:
        return None
    s = ds // 2
    if end.orientable:
        if not start.orientable or s != 0 or de % 2 != 0:
            return None
        return MoveSequence(handles=de // 2)
    if (s - de) % 2 != 0:
        return None
    k = abs(s)
    if k == 0 and start.orientable:
        k = 2
    if k > de:
        return None
    witness = MoveSequence(
        handles=(de - k) // 2,
        crosscaps_plus=(k + s) // 2,
        crosscaps_minus=(k - s) // 2,
    )
    assert apply_moves(start, witness) == end
    return witness


@dataclass(frozen=True)
class GapDemo:
    """Whether moves push a slope outside the basic checkerboard range."""

    target: InvariantTriple
    basic_low: InvariantTriple
    basic_high: InvariantTriple
    outside_range: bool
    witness: Optional[MoveSequence]
    witness_from: Optional[InvariantTriple]

    def __str__(self) -> str:
        where = "outside" if self.outside_range else "inside"
        head = (
            f"target {self.target} lies {where} the basic slope range "
            f"[{self.basic_low.slope}, {self.basic_high.slope}]"
        )
        if self.witness is None:
            return head + "; not reachable from either basic triple"
        return head + f"; reachable from {self.witness_from} by {self.witness}"


def curtis_taylor_gap_demo(
    basic: tuple[InvariantTriple, InvariantTriple], target: InvariantTriple
) -> GapDemo:
    """Compare a target triple against the two planar checkerboard triples.

    Demonstrates that handle/crosscap moves reach slopes strictly outside
    the interval spanned by the basic surfaces' slopes, which is the gap in
    the claim that checkerboard slopes bound all spanning slopes.  The
    witness starts from whichever basic triple admits the shorter sequence.
    """
    low, high = sorted(basic, key=lambda t: t.slope)
    outside = not (low.slope <= target.slope <= high.slope)
    best: Optional[MoveSequence] = None
    best_from: Optional[InvariantTriple] = None
    for origin in (low, high):
        w = reachable(origin, target)
        if w is not None and (best is None or len(w) < len(best)):
            best, best_from = w, origin
    return GapDemo(
        target=target,
        basic_low=low,
        basic_high=high,
        outside_range=outside,
        witness=best,
        witness_from=best_from,
    )
