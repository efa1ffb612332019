"""Independent slope check: linking number of the pushoff inside the surface.

For a planar diagram the boundary slope of a spanning surface equals
lk(K, K') where K' is the parallel copy of K obtained by pushing the knot
into the surface (the far boundary of a collar of K).  For a checkerboard
surface K' can be traced diagrammatically: along every arc it runs in the
face of the surface's color, and at every crossing it passes through the
half-twisted band alongside K.

In the band, K' consists of two strands, one next to the under-strand of K
and one next to the over-strand.  The strand next to the under-strand stays
near the bottom of the band, so it crosses over the under-strand of K and
under the over-strand; the strand next to the over-strand sits just below
the top, crossing under the over-strand of K and over the under-strand.
Both K' strands run diagonally from the colored sector at their entry side
to the colored sector at exit, which is what creates exactly four
K-to-K' crossings per band.  Their signs are computed here from the literal
2D directions of the strands; the linking number is half the signed count.

This is a from-scratch geometric computation sharing no constants with
:mod:`knotslope.invariants`; agreement on planar diagrams is a test oracle
for the calibrated slope table.
"""

from __future__ import annotations

from typing import Optional

from .diagram import Coloring, FaceSet, SurfaceDiagram, trace_faces

__all__ = ["pushoff_linking_oracle"]

# Port p of a crossing sits at compass position _POS[p]; ports are
# counterclockwise, under-strand on ports 0 and 2.
_POS = {0: (0, -1), 1: (1, 0), 2: (0, 1), 3: (-1, 0)}


def _cross(u: tuple[int, int], v: tuple[int, int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _ccw(u: tuple[int, int]) -> tuple[int, int]:
    return (-u[1], u[0])


def _sign(n: int) -> int:
    if n == 0:
        raise AssertionError("degenerate pushoff crossing")
    return 1 if n > 0 else -1


def _corner_direction(corner: int) -> tuple[int, int]:
    a = _POS[corner % 4]
    b = _POS[(corner + 1) % 4]
    return (a[0] + b[0], a[1] + b[1])


def _pushoff_direction(
    entry_port: int, heading: tuple[int, int], colored_corner: int
) -> tuple[int, int]:
    """Direction of the K' strand while it traverses the band.

    The strand enters beside K on the side of the colored sector at
    ``colored_corner`` and leaves on the opposite side, so its direction is
    K's heading deflected away from the entry side.
    """
    toward = _corner_direction(colored_corner)
    if _cross(heading, toward) < 0:  # color on the right: K' drifts left
        drift = _ccw(heading)
    else:
        drift = (-_ccw(heading)[0], -_ccw(heading)[1])
    return (heading[0] + drift[0], heading[1] + drift[1])


def pushoff_linking_oracle(
    d: SurfaceDiagram,
    coloring: Coloring,
    color: int,
    faces: Optional[FaceSet] = None,
) -> int:
    """lk(K, K') for the pushoff in the planar checkerboard surface.

    Rejects diagrams of nonzero genus: the construction reads the bands in
    the projection plane.
    """
    if d.claimed_genus != 0:
        raise ValueError("pushoff oracle is defined for planar diagrams only")
    if faces is None:
        faces = trace_faces(d)
    directions = d.strand_directions()
    signed = 0
    for x in range(d.crossing_count):
        u_in, o_in = directions[x]
        d_u = _POS[(u_in + 2) % 4]
        d_o = _POS[(o_in + 2) % 4]
        # The colored sector flanking the under entry: corners u_in-1, u_in.
        u_corner = next(
            k
            for k in ((u_in - 1) % 4, u_in)
            if coloring.color(faces.face_of[4 * x + k]) == color
        )
        o_corner = next(
            k
            for k in ((o_in - 1) % 4, o_in)
            if coloring.color(faces.face_of[4 * x + k]) == color
        )
        ku = _pushoff_direction(u_in, d_u, u_corner)  # K' beside the under-strand
        ko = _pushoff_direction(o_in, d_o, o_corner)  # K' beside the over-strand
        signed += _sign(_cross(ku, d_u))  # K'_under passes over K_under
        signed += _sign(_cross(d_o, ko))  # K_over passes over K'_over
        signed += _sign(_cross(d_o, ku))  # K_over passes over K'_under
        signed += _sign(_cross(ko, d_u))  # K'_over passes over K_under
    if signed % 2 != 0:
        raise AssertionError("signed pushoff crossings must come in pairs")
    return signed // 2
