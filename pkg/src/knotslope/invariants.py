"""Checkerboard spanning surfaces and their invariant triples.

Each checkerboard-colored diagram carries two spanning surfaces: the disks of
one color joined by a half-twisted band at every crossing.  This module
computes, for either color, the boundary slope (meridian/0-framed-longitude
coordinates, so a Seifert surface has slope 0), the Euler characteristic and
orientability.

The slope is a sum of local contributions.  At a crossing, the corners 0 and 2
form one diagonal sector pair and carry a single color (proper colorings
alternate around a crossing); writing ``diag`` for that color and ``s`` for
the crossing sign under the induced knot orientation, the crossing contributes

    -2  to the surface of color ``diag``      when s = -1,
    +2  to the surface of the opposite color  when s = +1,

and nothing to the other surface.  The global sign is the one calibration
choice in the package (:data:`SLOPE_CALIBRATION`); it is pinned by the planar
pushoff oracle and by the slope pair {+8, -8} of the reduced alternating
8_17 diagram, and is validated by tests.

On a diagram of positive genus both surfaces' slopes are additionally offset
by the diagram's declared framing: the local contributions measure slope
against the pushoff along the projection surface, and the framing converts
that to the standard 0-framed longitude of the embedding.  Planar diagrams
have framing 0, so there the local sum is the whole slope and the pushoff
oracle can check it independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .diagram import (
    BLACK,
    WHITE,
    Coloring,
    FaceSet,
    StructureError,
    SurfaceDiagram,
    checkerboard_coloring,
    trace_faces,
)

__all__ = [
    "SLOPE_CALIBRATION",
    "CrossingType",
    "CheckerboardSurface",
    "SurfaceClass",
    "classify_crossings",
    "boundary_slope",
    "euler_characteristic",
    "orientability",
    "classify_surface",
    "build_surfaces",
]

#: Global sign of the slope contribution table.  +1 means a positive crossing
#: whose diagonal sectors are white contributes +2 to the black surface (and
#: symmetrically).  Flipping this constant negates every computed slope; the
#: value is frozen by calibration against the planar pushoff oracle.
SLOPE_CALIBRATION = 1


@dataclass(frozen=True)
class CrossingType:
    """Which surface a crossing's band contributes slope to.

    ``kind`` is "a" when the contribution goes to the white surface and "b"
    when it goes to the black surface; swapping the coloring swaps a and b.
    """

    crossing: int
    kind: str


@dataclass(frozen=True)
class SurfaceClass:
    """Homeomorphism type of a one-boundary surface from (chi, orientability)."""

    orientable: bool
    genus: Optional[int] = None
    crosscaps: Optional[int] = None


@dataclass(frozen=True)
class CheckerboardSurface:
    color: int
    face_ids: tuple[int, ...]
    slope: int
    euler: int
    orientable: bool


def _diagonal_color(
    d: SurfaceDiagram, faces: FaceSet, coloring: Coloring, crossing: int
) -> int:
    """Color of the corner sectors 0 and 2 of a crossing."""
    c0 = coloring.color(faces.face_of[4 * crossing + 0])
    c2 = coloring.color(faces.face_of[4 * crossing + 2])
    if c0 != c2:
        raise StructureError(
            f"corner pair at crossing {crossing} is not monochromatic; "
            "coloring is corrupted"
        )
    return c0


def _contribution(diag: int, sign: int, color: int) -> int:
    """Slope contribution of one crossing to the surface of ``color``."""
    if sign < 0 and diag == color:
        return -2 * SLOPE_CALIBRATION
    if sign > 0 and diag != color:
        return 2 * SLOPE_CALIBRATION
    return 0


def classify_crossings(
    d: SurfaceDiagram, coloring: Coloring, faces: Optional[FaceSet] = None
) -> list[CrossingType]:
    """Assign each crossing the type a or b for the given coloring.

    Every crossing feeds its +-2 slope contribution to exactly one of the two
    checkerboard surfaces; type b crossings feed the black surface, type a
    crossings the white one.  On an alternating diagram the contributions to
    one surface all share a sign, which recovers the additive form
    |slope(black)| = 2 * #type-b, |slope(white)| = 2 * #type-a.
    """
    if faces is None:
        faces = trace_faces(d)
    directions = d.strand_directions()
    out = []
    for x in range(d.crossing_count):
        diag = _diagonal_color(d, faces, coloring, x)
        sign = d.crossing_sign(x, directions)
        to_black = _contribution(diag, sign, BLACK) != 0
        out.append(CrossingType(crossing=x, kind="b" if to_black else "a"))
    return out


def boundary_slope(
    d: SurfaceDiagram,
    coloring: Coloring,
    color: int,
    faces: Optional[FaceSet] = None,
) -> int:
    """Boundary slope of the checkerboard surface of the given color.

    Local band contributions plus the diagram's framing offset.
    """
    if faces is None:
        faces = trace_faces(d)
    directions = d.strand_directions()
    total = d.framing
    for x in range(d.crossing_count):
        diag = _diagonal_color(d, faces, coloring, x)
        total += _contribution(diag, d.crossing_sign(x, directions), color)
    return total


def euler_characteristic(
    d: SurfaceDiagram,
    coloring: Coloring,
    color: int,
    faces: Optional[FaceSet] = None,
) -> int:
    """chi = (disks of the color) - (one band per crossing)."""
    if faces is None:
        faces = trace_faces(d)
    return len(coloring.faces_of(color)) - d.crossing_count


def _band_edges(
    d: SurfaceDiagram, faces: FaceSet, coloring: Coloring, color: int
) -> list[tuple[int, int]]:
    """Face pairs joined by the color's band at each crossing."""
    edges = []
    for x in range(d.crossing_count):
        diag = _diagonal_color(d, faces, coloring, x)
        k = 0 if diag == color else 1
        f1 = faces.face_of[4 * x + k]
        f2 = faces.face_of[4 * x + k + 2]
        edges.append((f1, f2))
    return edges


def orientability(
    d: SurfaceDiagram,
    coloring: Coloring,
    color: int,
    faces: Optional[FaceSet] = None,
) -> bool:
    """Whether the checkerboard surface of the color is orientable.

    Each disk carries the surface orientation of its face; a half-twisted band
    reverses it.  The surface is orientable iff orientations can be chosen
    consistently, i.e. iff the face-band multigraph of the color is bipartite
    (a band from a face to itself is an immediate obstruction).
    """
    if faces is None:
        faces = trace_faces(d)
    edges = _band_edges(d, faces, coloring, color)
    side: dict[int, int] = {}
    adj: dict[int, list[int]] = {}
    for f1, f2 in edges:
        if f1 == f2:
            return False
        adj.setdefault(f1, []).append(f2)
        adj.setdefault(f2, []).append(f1)
    for start in adj:
        if start in side:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            f = stack.pop()
            for g in adj[f]:
                if g not in side:
                    side[g] = 1 - side[f]
                    stack.append(g)
                elif side[g] == side[f]:
                    return False
    return True


def classify_surface(euler: int, orientable: bool) -> SurfaceClass:
    """Homeomorphism type of a connected surface with one boundary circle.

    Orientable: genus (1 - chi)/2, which must be an integer.  Non-orientable:
    crosscap number 1 - chi.
    """
    if euler > 1:
        raise ValueError(f"chi = {euler} impossible for a one-boundary surface")
    if orientable:
        if (1 - euler) % 2 != 0:
            raise ValueError(
                f"chi = {euler} has no orientable one-boundary realisation"
            )
        return SurfaceClass(orientable=True, genus=(1 - euler) // 2)
    if euler > 0:
        raise ValueError(f"chi = {euler} impossible for a non-orientable surface")
    return SurfaceClass(orientable=False, crosscaps=1 - euler)


def build_surfaces(
    d: SurfaceDiagram,
    coloring: Optional[Coloring] = None,
    faces: Optional[FaceSet] = None,
) -> tuple[CheckerboardSurface, CheckerboardSurface]:
    """Both checkerboard surfaces of a diagram, black first."""
    if faces is None:
        faces = trace_faces(d)
    if coloring is None:
        coloring = checkerboard_coloring(d, faces)
    out = []
    for color in (BLACK, WHITE):
        out.append(
            CheckerboardSurface(
                color=color,
                face_ids=coloring.faces_of(color),
                slope=boundary_slope(d, coloring, color, faces),
                euler=euler_characteristic(d, coloring, color, faces),
                orientable=orientability(d, coloring, color, faces),
            )
        )
    return out[0], out[1]
