"""Generalised-alternating validation of surface projections.

A projection qualifies when it is alternating on its surface, all
complementary regions are disks (automatic for a validated combinatorial
map, whose faces are the traced disk orbits and whose genus matched the
declared one), and it is prime.  Primality is decided by the neighbour
test: every black region must meet pairwise distinct white regions across
its boundary arcs.  The test is a diagrammatic stand-in for the loop-based
definition of a prime projection and is exactly the check usable on a
combinatorial map; both directions (black against white neighbours and the
symmetric one) are evaluated and reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .diagram import (
    BLACK,
    WHITE,
    Coloring,
    FaceSet,
    NotColorableError,
    SurfaceDiagram,
    arc_sides,
    checkerboard_coloring,
    is_alternating,
    trace_faces,
)

__all__ = ["GAVerdict", "primality_check", "reduced_check", "validate_ga"]


@dataclass(frozen=True)
class GAVerdict:
    alternating: bool
    cellular: bool
    prime: bool
    reduced: bool
    colorable: bool
    overall: bool
    prime_symmetric: Optional[bool] = None


def _neighbor_multisets(
    d: SurfaceDiagram, faces: FaceSet, coloring: Coloring, color: int
) -> dict[int, list[int]]:
    """For each face of ``color``, the faces met across its boundary arcs."""
    out: dict[int, list[int]] = {
        f: [] for f in range(len(faces)) if coloring.color(f) == color
    }
    seen = set()
    for dart in range(4 * d.crossing_count):
        arc = frozenset((dart, d.arcs[dart]))
        if arc in seen:
            continue
        seen.add(arc)
        a, b = arc_sides(d, dart)
        fa, fb = faces.face_of[a], faces.face_of[b]
        if coloring.color(fa) == color:
            out[fa].append(fb)
        else:
            out[fb].append(fa)
    return out


def primality_check(
    d: SurfaceDiagram,
    faces: Optional[FaceSet] = None,
    coloring: Optional[Coloring] = None,
    color: int = BLACK,
) -> bool:
    """True iff no face of ``color`` meets the same opposite face twice."""
    if faces is None:
        faces = trace_faces(d)
    if coloring is None:
        coloring = checkerboard_coloring(d, faces)
    for neighbors in _neighbor_multisets(d, faces, coloring, color).values():
        if len(neighbors) != len(set(neighbors)):
            return False
    return True


def reduced_check(d: SurfaceDiagram, faces: Optional[FaceSet] = None) -> bool:
    """True iff no crossing is nugatory.

    A crossing is nugatory when one face is incident at two diagonally
    opposite corners of that crossing.
    """
    if faces is None:
        faces = trace_faces(d)
    for x in range(d.crossing_count):
        corners = [faces.face_of[4 * x + k] for k in range(4)]
        if corners[0] == corners[2] or corners[1] == corners[3]:
            return False
    return True


def validate_ga(d: SurfaceDiagram) -> GAVerdict:
    """Combined generalised-alternating verdict for a diagram.

    ``overall`` is alternating and cellular and prime.  ``cellular`` holds
    for every validated diagram (regions are the traced disk faces and the
    genus check passed at construction).  ``reduced`` is informational and
    does not enter ``overall``; ``colorable`` records whether the primality
    test could run at all.
    """
    faces = trace_faces(d)
    alternating = is_alternating(d)
    cellular = True
    reduced = reduced_check(d, faces)
    try:
        coloring = checkerboard_coloring(d, faces)
    except NotColorableError:
        return GAVerdict(
            alternating=alternating,
            cellular=cellular,
            prime=False,
            reduced=reduced,
            colorable=False,
            overall=False,
        )
    prime = primality_check(d, faces, coloring, BLACK)
    prime_sym = primality_check(d, faces, coloring, WHITE)
    return GAVerdict(
        alternating=alternating,
        cellular=cellular,
        prime=prime,
        reduced=reduced,
        colorable=True,
        overall=alternating and cellular and prime,
        prime_symmetric=prime_sym,
    )
