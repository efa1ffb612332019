"""Build-time helpers for deriving and identifying fixture diagrams.

Not part of the installed package.  Used by the fixture search scripts to
construct candidate diagrams (braid closures, random surface maps) and to
verify their knot identity through invariants computed independently of the
package under construction: Goeritz determinant and the Alexander polynomial
via the Burau representation.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from knotslope.diagram import PortRef, StructureError, SurfaceDiagram, trace_faces, checkerboard_coloring
from knotslope.invariants import _diagonal_color  # build-time use only


def braid_closure(word, name="braid"):
    """Closure of a braid word, e.g. [1, -2, 1, -2] for (s1 s2^-1)^2.

    Positive k means strand k passes over strand k+1.  Returns a
    SurfaceDiagram (raises StructureError for links).
    """
    strands = max(abs(k) for k in word) + 1
    c = len(word)
    arcs = [-1] * (4 * c)
    dangling = [None] * strands  # dart waiting to connect upward, per position
    loose = [None] * strands     # first in-port per position, for the closure

    def connect(a, b):
        arcs[a], arcs[b] = b, a

    def feed(pos, in_dart):
        if dangling[pos] is None:
            loose[pos] = in_dart
        else:
            connect(dangling[pos], in_dart)

    for x, letter in enumerate(word):
        i = abs(letter) - 1
        if letter > 0:
            # over-strand bottom-left -> top-right: ports SW=3(in) NE=1(out);
            # under bottom-right -> top-left: SE=0(in) NW=2(out)
            feed(i, 4 * x + 3)
            feed(i + 1, 4 * x + 0)
            dangling[i] = 4 * x + 2
            dangling[i + 1] = 4 * x + 1
        else:
            # over bottom-right -> top-left: SE=1(in) NW=3(out);
            # under bottom-left -> top-right: SW=0(in) NE=2(out)
            feed(i, 4 * x + 0)
            feed(i + 1, 4 * x + 1)
            dangling[i] = 4 * x + 3
            dangling[i + 1] = 4 * x + 2
    for pos in range(strands):
        if dangling[pos] is None or loose[pos] is None:
            raise StructureError("strand position untouched by the braid word")
        connect(dangling[pos], loose[pos])
    base = loose[0]
    return SurfaceDiagram.from_arcs(
        name=name,
        crossing_count=c,
        arcs=arcs,
        basepoint=PortRef(base // 4, base % 4),
        claimed_genus=0,
        black_corner=PortRef(0, 0),
    )


def goeritz_determinant(d):
    """|det| of the Goeritz matrix on the white faces: the knot determinant."""
    faces = trace_faces(d)
    coloring = checkerboard_coloring(d, faces)
    whites = [f for f in range(len(faces.faces)) if coloring.color(f) == 1]
    index = {f: i for i, f in enumerate(whites)}
    n = len(whites)
    G = [[Fraction(0)] * n for _ in range(n)]
    for x in range(d.crossing_count):
        diag = _diagonal_color(d, faces, coloring, x)
        eta = 1 if diag == 0 else -1  # sign split by diagonal class
        k = 1 if diag == 0 else 0     # white corners of this crossing
        f1 = faces.face_of[4 * x + k]
        f2 = faces.face_of[4 * x + k + 2]
        i, j = index[f1], index[f2]
        if i != j:
            G[i][j] -= eta
            G[j][i] -= eta
            G[i][i] += eta
            G[j][j] += eta
        # a crossing joining a white face to itself contributes nothing
    if n <= 1:
        return 1
    minor = [row[1:] for row in G[1:]]
    return abs(_det(minor))


def _det(m):
    m = [row[:] for row in m]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            for cc in range(col, n):
                m[r][cc] -= factor * m[col][cc]
    return int(det)


def alexander_from_braid(word):
    """Normalized Alexander coefficient vector of a braid closure.

    Uses the unreduced Burau representation; the quotient by the invariant
    ones-vector gives the reduced representation, and
    det(reduced - I) / (1 + t + ... + t^(n-1)) is the Alexander polynomial up
    to units.  Returned as a tuple of integer coefficients, normalized so the
    leading coefficient is positive and the vector reads lowest degree first.
    """
    import sympy as sp

    t = sp.symbols("t")
    strands = max(abs(k) for k in word) + 1
    M = sp.eye(strands)
    for letter in word:
        i = abs(letter) - 1
        B = sp.eye(strands)
        if letter > 0:
            B[i, i], B[i, i + 1] = 1 - t, t
            B[i + 1, i], B[i + 1, i + 1] = 1, 0
        else:
            B[i, i], B[i, i + 1] = 0, 1
            B[i + 1, i], B[i + 1, i + 1] = t ** -1, 1 - t ** -1
        M = M * B
    # Basis e1-e2, ..., e_{n-1}-e_n, e1+...+en; M fixes the ones vector.
    P = sp.zeros(strands, strands)
    for j in range(strands - 1):
        P[j, j] = 1
        P[j + 1, j] = -1
    for j in range(strands):
        P[j, strands - 1] = 1
    T = (P.inv() * M * P).applyfunc(sp.simplify)
    A = T[: strands - 1, : strands - 1]
    num = sp.factor(sp.expand((A - sp.eye(strands - 1)).det()))
    denom = sum(t ** k for k in range(strands))
    poly = sp.simplify(sp.cancel(num / denom))
    poly = sp.expand(sp.simplify(poly * t ** 20))  # clear negative powers
    p = sp.Poly(poly, t)
    coeffs = [int(c) for c in reversed(p.all_coeffs())]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if coeffs and (coeffs[-1] < 0 or (coeffs[-1] == coeffs[0] < 0)):
        coeffs = [-c for c in coeffs]
    return tuple(coeffs)
