"""Knot projections on closed orientable surfaces as combinatorial maps.

A projection with c crossings is encoded by 4c *darts*.  Dart ``4*x + p``
is port ``p`` of crossing ``x``.  Ports are numbered 0..3 in counterclockwise
order with respect to the orientation of the projection surface; ports 1 and 3
carry the over-strand, ports 0 and 2 the under-strand.  A strand entering
port p leaves the crossing at port (p+2) mod 4.  The edges of the projection
(the *arcs*) are a fixed-point-free involution on the darts.

Corner ``k`` of a crossing is the sector between ports k and k+1 (mod 4);
corners are addressed by the same ``4*x + k`` index space as darts.  The
complementary regions of the projection are the orbits of the corner walk
(see :func:`trace_faces`); the genus of the surface follows from Euler's
formula V - E + F = 2 - 2g with V = c and E = 2c.

A diagram of positive genus additionally carries a *framing*: the even
integer lk(K, K_F) recording how the pushoff of the knot along the
projection surface links the knot once F is embedded in the 3-sphere.  The
combinatorial map alone cannot determine it (re-embedding F changes it by
any even amount), so it is declared alongside the map and enters the
boundary-slope computation as a constant offset.  On the sphere every
surface pushoff is the 0-framed longitude, so planar diagrams must declare
framing 0.  Reflection reverses the framing's sign.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence

__all__ = [
    "BLACK",
    "WHITE",
    "DiagramError",
    "ParseError",
    "StructureError",
    "NotColorableError",
    "PortRef",
    "SurfaceDiagram",
    "FaceSet",
    "Coloring",
    "parse_diagram",
    "ingest_pd_code",
    "serialize_diagram",
    "trace_faces",
    "surface_genus",
    "checkerboard_coloring",
    "is_alternating",
    "mirror",
    "canonical_form",
    "is_isomorphic",
]

BLACK = 0
WHITE = 1


class DiagramError(Exception):
    """Base class for all diagram construction failures."""


class ParseError(DiagramError):
    """Malformed input text; carries a 1-based line number when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class StructureError(DiagramError):
    """Input parses but violates a structural invariant of the encoding."""


class NotColorableError(DiagramError):
    """The face adjacency graph has an odd cycle; no checkerboard coloring."""


@dataclass(frozen=True, order=True)
class PortRef:
    """A port (or corner) of a crossing: ``crossing`` 0-based, ``port`` in 0..3."""

    crossing: int
    port: int

    def dart(self) -> int:
        return 4 * self.crossing + self.port


def _dart(crossing: int, port: int) -> int:
    return 4 * crossing + port


def _ref(dart: int) -> PortRef:
    return PortRef(dart // 4, dart % 4)


@dataclass(frozen=True)
class SurfaceDiagram:
    """A validated knot projection on a closed orientable surface.

    ``arcs[d]`` is the dart paired with dart ``d``; the involution is a
    perfect matching on all 4c darts.  ``basepoint`` is the dart at which the
    traversal of the knot starts (the knot is entered there).  ``black_corner``
    optionally designates the checkerboard coloring class: the face containing
    that corner is black.

    Instances are immutable; construct through :meth:`from_arcs`,
    :func:`parse_diagram` or :func:`ingest_pd_code`, which validate all
    structural invariants.
    """

    name: str
    crossing_count: int
    arcs: tuple[int, ...]
    basepoint: PortRef
    claimed_genus: int
    black_corner: Optional[PortRef] = None
    framing: int = 0

    @classmethod
    def from_arcs(
        cls,
        name: str,
        crossing_count: int,
        arcs: Sequence[int],
        basepoint: PortRef,
        claimed_genus: int,
        black_corner: Optional[PortRef] = None,
        framing: int = 0,
    ) -> "SurfaceDiagram":
        if crossing_count <= 0:
            raise StructureError("diagram must have at least one crossing")
        if framing % 2 != 0:
            raise StructureError(f"framing must be even, got {framing}")
        if claimed_genus == 0 and framing != 0:
            raise StructureError("planar diagrams have framing 0")
        n = 4 * crossing_count
        if len(arcs) != n:
            raise StructureError(f"expected {n} darts, got {len(arcs)}")
        for d, e in enumerate(arcs):
            if not 0 <= e < n:
                raise StructureError(f"dart {d} paired with out-of-range dart {e}")
            if e == d:
                raise StructureError(f"dart {d} paired with itself")
            if arcs[e] != d:
                raise StructureError(f"arc pairing is not an involution at dart {d}")
        diagram = cls(
            name=name,
            crossing_count=crossing_count,
            arcs=tuple(arcs),
            basepoint=basepoint,
            claimed_genus=claimed_genus,
            black_corner=black_corner,
            framing=framing,
        )
        walk = diagram.traversal()
        if len(set(walk)) != 2 * crossing_count:
            raise StructureError(
                "traversal from the basepoint does not cover the diagram: "
                "more than one component"
            )
        g = surface_genus(diagram)
        if g != claimed_genus:
            raise StructureError(
                f"declared genus {claimed_genus} but face tracing gives genus {g}"
            )
        return diagram

    # -- traversal -------------------------------------------------------

    def traversal(self) -> list[int]:
        """Entered darts along the knot, starting at the basepoint.

        From an entered port p the strand leaves at port (p+2) mod 4 and the
        arc there leads to the next entered dart.  For a knot the walk has
        length exactly 2c.
        """
        start = self.basepoint.dart()
        walk = []
        d = start
        for _ in range(2 * self.crossing_count):
            walk.append(d)
            x, p = d // 4, d % 4
            d = self.arcs[_dart(x, (p + 2) % 4)]
            if d == start:
                break
        return walk

    def strand_directions(self) -> dict[int, tuple[int, int]]:
        """Map each crossing to its (under-entry port, over-entry port)."""
        entries: dict[int, dict[bool, int]] = {}
        for d in self.traversal():
            x, p = d // 4, d % 4
            entries.setdefault(x, {})[p % 2 == 0] = p
        out = {}
        for x, by_level in entries.items():
            if len(by_level) != 2:
                raise StructureError(f"crossing {x} not visited on both strands")
            out[x] = (by_level[True], by_level[False])
        return out

    def crossing_sign(self, crossing: int, directions=None) -> int:
        """Sign of the crossing for the orientation induced by the basepoint.

        With ports 0..3 placed counterclockwise, the under-strand runs between
        ports 0 and 2 and the over-strand between 1 and 3.  The sign is the
        z-component of over-direction x under-direction, which depends only on
        the pair of entry ports.
        """
        if directions is None:
            directions = self.strand_directions()
        u_in, o_in = directions[crossing]
        return 1 if (u_in, o_in) in ((0, 3), (2, 1)) else -1

    def writhe(self) -> int:
        directions = self.strand_directions()
        return sum(self.crossing_sign(x, directions) for x in range(self.crossing_count))


@dataclass(frozen=True)
class FaceSet:
    """The complementary regions of a diagram.

    ``faces[i]`` lists the corners (as dart indices) of face i in walk order,
    starting from the smallest corner; faces are numbered by smallest
    contained corner, so identical input yields identical numbering.
    """

    faces: tuple[tuple[int, ...], ...]
    face_of: tuple[int, ...]  # corner dart -> face id

    def __len__(self) -> int:
        return len(self.faces)

    def corners(self, face: int) -> tuple[int, ...]:
        return self.faces[face]


@dataclass(frozen=True)
class Coloring:
    """A proper black/white 2-coloring of the faces across arcs."""

    colors: tuple[int, ...]  # face id -> BLACK or WHITE

    def color(self, face: int) -> int:
        return self.colors[face]

    def faces_of(self, color: int) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.colors) if c == color)

    def swapped(self) -> "Coloring":
        return Coloring(tuple(1 - c for c in self.colors))


def _next_corner(d: SurfaceDiagram, corner: int) -> int:
    """One step of the corner walk tracing the boundary of a face.

    From corner k of a crossing, follow the arc at port k+1 to a port m of
    the neighbouring crossing; the face continues at corner m there.
    """
    x, k = corner // 4, corner % 4
    far = d.arcs[_dart(x, (k + 1) % 4)]
    return far


def trace_faces(d: SurfaceDiagram) -> FaceSet:
    """Partition the 4c corners into faces via corner-walk orbits."""
    n = 4 * d.crossing_count
    face_of = [-1] * n
    faces: list[tuple[int, ...]] = []
    for start in range(n):
        if face_of[start] != -1:
            continue
        fid = len(faces)
        cycle = []
        c = start
        while face_of[c] == -1:
            face_of[c] = fid
            cycle.append(c)
            c = _next_corner(d, c)
        if c != start:
            raise StructureError("corner walk is not a permutation orbit")
        faces.append(tuple(cycle))
    return FaceSet(faces=tuple(faces), face_of=tuple(face_of))


def surface_genus(d: SurfaceDiagram, faces: Optional[FaceSet] = None) -> int:
    """Genus from Euler's formula with V = c, E = 2c, F = number of faces."""
    if faces is None:
        faces = trace_faces(d)
    euler = d.crossing_count - 2 * d.crossing_count + len(faces)
    if (2 - euler) % 2 != 0:
        raise StructureError("non-integer genus: corrupted combinatorial map")
    g = (2 - euler) // 2
    if g < 0:
        raise StructureError("negative genus: corrupted combinatorial map")
    return g


def arc_sides(d: SurfaceDiagram, dart: int) -> tuple[int, int]:
    """The corners on the two sides of the arc at ``dart``.

    The arc joining port p of x to port q of y separates the corner pair
    {(x, p), (y, q-1)} from {(x, p-1), (y, q)}; one representative corner per
    side is returned.
    """
    x, p = dart // 4, dart % 4
    return _dart(x, p), _dart(x, (p - 1) % 4)


def checkerboard_coloring(d: SurfaceDiagram, faces: Optional[FaceSet] = None) -> Coloring:
    """Proper 2-coloring of the faces, black class pinned by ``black_corner``.

    Faces on opposite sides of every arc receive opposite colors.  Raises
    :class:`NotColorableError` when the face adjacency graph has an odd cycle
    (possible on genus >= 1).
    """
    if faces is None:
        faces = trace_faces(d)
    colors = [-1] * len(faces)
    # Seed from face 0 and propagate; the diagram is connected, so every face
    # is reached through arc adjacencies.
    colors[0] = 0
    queue = [0]
    adj: dict[int, list[int]] = {i: [] for i in range(len(faces))}
    seen_arcs = set()
    for dart in range(4 * d.crossing_count):
        arc = frozenset((dart, d.arcs[dart]))
        if arc in seen_arcs:
            continue
        seen_arcs.add(arc)
        side_a, side_b = arc_sides(d, dart)
        fa, fb = faces.face_of[side_a], faces.face_of[side_b]
        adj[fa].append(fb)
        adj[fb].append(fa)
    while queue:
        f = queue.pop()
        for g in adj[f]:
            if colors[g] == -1:
                colors[g] = 1 - colors[f]
                queue.append(g)
            elif colors[g] == colors[f]:
                raise NotColorableError(
                    "faces are not checkerboard colorable (odd adjacency cycle)"
                )
    if d.black_corner is not None:
        pinned = faces.face_of[d.black_corner.dart()]
    else:
        pinned = faces.face_of[0]  # corner 0 of crossing 0
    coloring = Coloring(tuple(colors))
    if coloring.color(pinned) != BLACK:
        coloring = coloring.swapped()
    return coloring


def is_alternating(d: SurfaceDiagram) -> bool:
    """True iff the basepoint walk alternately enters under and over ports."""
    walk = d.traversal()
    parities = [dart % 4 % 2 for dart in walk]
    return all(parities[i] != parities[i - 1] for i in range(len(parities)))


def mirror(d: SurfaceDiagram) -> SurfaceDiagram:
    """Reflect the diagram in the projection surface: switch every crossing.

    Over and under strands are exchanged everywhere; the counterclockwise
    port order is unchanged, so the port labels rotate by one to restore the
    convention that ports 1 and 3 are over.  Faces, genus and the coloring
    classes are preserved under the induced corner correspondence; the
    framing changes sign, since reflection reverses all linking numbers.
    """
    n = 4 * d.crossing_count

    def relabel(dart: int) -> int:
        x, p = dart // 4, dart % 4
        return _dart(x, (p + 1) % 4)

    arcs = [0] * n
    for dart, far in enumerate(d.arcs):
        arcs[relabel(dart)] = relabel(far)
    base = PortRef(d.basepoint.crossing, (d.basepoint.port + 1) % 4)
    black = d.black_corner
    if black is not None:
        black = PortRef(black.crossing, (black.port + 1) % 4)
    return SurfaceDiagram.from_arcs(
        name=f"{d.name}*",
        crossing_count=d.crossing_count,
        arcs=arcs,
        basepoint=base,
        claimed_genus=d.claimed_genus,
        black_corner=black,
        framing=-d.framing,
    )


# -- surface-diagram text format ----------------------------------------

_PORT_RE = re.compile(r"^(\d+)\.([0-3])$")


def _parse_port(token: str, line: int, crossings: int) -> PortRef:
    m = _PORT_RE.match(token)
    if not m:
        raise ParseError(f"expected <crossing>.<port 0-3>, got {token!r}", line)
    x, p = int(m.group(1)), int(m.group(2))
    if x >= crossings:
        raise ParseError(f"crossing index {x} out of range (crossings {crossings})", line)
    return PortRef(x, p)


def parse_diagram(text: str) -> SurfaceDiagram:
    """Parse the line-oriented ``surface-diagram v1`` format.

    See the package README for the grammar.  All structural invariants
    (perfect matching on ports, single component, genus consistency) are
    checked; errors carry the offending line number where applicable.
    """
    lines = text.splitlines()
    records: list[tuple[int, list[str]]] = []
    for i, raw in enumerate(lines, start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            records.append((i, stripped.split()))
    if not records:
        raise ParseError("empty input")
    line, header = records[0]
    if header != ["surface-diagram", "v1"]:
        raise ParseError("expected header 'surface-diagram v1'", line)

    name = None
    genus = None
    crossings = None
    framing = 0
    arc_tokens: list[tuple[int, str, str, str]] = []
    basepoint_token = None
    black_token = None
    for line, fields in records[1:]:
        key = fields[0]
        if key == "knot" and len(fields) == 2:
            name = fields[1]
        elif key == "genus" and len(fields) == 2:
            genus = _parse_nonneg(fields[1], line, "genus")
        elif key == "crossings" and len(fields) == 2:
            crossings = _parse_nonneg(fields[1], line, "crossings")
        elif key == "framing" and len(fields) == 2:
            try:
                framing = int(fields[1])
            except ValueError:
                raise ParseError(f"framing must be an integer, got {fields[1]!r}", line)
        elif key == "arc" and len(fields) == 4:
            arc_tokens.append((line, fields[1], fields[2], fields[3]))
        elif key == "basepoint" and len(fields) == 2:
            basepoint_token = (line, fields[1])
        elif key == "black-corner" and len(fields) == 2:
            black_token = (line, fields[1])
        else:
            raise ParseError(f"unrecognised record {' '.join(fields)!r}", line)
    if name is None:
        raise ParseError("missing 'knot <name>' record")
    if genus is None:
        raise ParseError("missing 'genus <g>' record")
    if crossings is None:
        raise ParseError("missing 'crossings <c>' record")
    if crossings == 0:
        raise ParseError("diagram must have at least one crossing")
    if basepoint_token is None:
        raise ParseError("missing 'basepoint <x>.<p>' record")

    n = 4 * crossings
    arcs = [-1] * n
    for line, _ident, a_tok, b_tok in arc_tokens:
        a = _parse_port(a_tok, line, crossings).dart()
        b = _parse_port(b_tok, line, crossings).dart()
        if a == b:
            raise ParseError("arc joins a port to itself", line)
        for dart in (a, b):
            if arcs[dart] != -1:
                raise ParseError(f"port {_ref(dart).crossing}.{_ref(dart).port} reused", line)
        arcs[a], arcs[b] = b, a
    missing = [i for i, far in enumerate(arcs) if far == -1]
    if missing:
        ref = _ref(missing[0])
        raise ParseError(f"port missing: {ref.crossing}.{ref.port} has no arc")

    base = _parse_port(basepoint_token[1], basepoint_token[0], crossings)
    black = None
    if black_token is not None:
        black = _parse_port(black_token[1], black_token[0], crossings)
    return SurfaceDiagram.from_arcs(
        name=name,
        crossing_count=crossings,
        arcs=arcs,
        basepoint=base,
        claimed_genus=genus,
        black_corner=black,
        framing=framing,
    )


def _parse_nonneg(token: str, line: int, what: str) -> int:
    if not token.isdigit():
        raise ParseError(f"{what} must be a nonnegative integer, got {token!r}", line)
    return int(token)


def serialize_diagram(d: SurfaceDiagram) -> str:
    """Render a diagram back into the ``surface-diagram v1`` text format."""
    out = ["surface-diagram v1", f"knot {d.name}", f"genus {d.claimed_genus}",
           f"crossings {d.crossing_count}"]
    if d.framing:
        out.append(f"framing {d.framing}")
    seen = set()
    idx = 0
    for dart in range(4 * d.crossing_count):
        far = d.arcs[dart]
        if frozenset((dart, far)) in seen:
            continue
        seen.add(frozenset((dart, far)))
        a, b = _ref(dart), _ref(far)
        out.append(f"arc {idx} {a.crossing}.{a.port} {b.crossing}.{b.port}")
        idx += 1
    out.append(f"basepoint {d.basepoint.crossing}.{d.basepoint.port}")
    if d.black_corner is not None:
        out.append(f"black-corner {d.black_corner.crossing}.{d.black_corner.port}")
    return "\n".join(out) + "\n"


# -- PD notation ---------------------------------------------------------

_PD_TUPLE_RE = re.compile(r"X\[([^\]]*)\]")


def ingest_pd_code(text: str, name: str = "pd") -> SurfaceDiagram:
    """Build a planar diagram from PD notation.

    Each ``X[a,b,c,d]`` lists the arc labels incident to one crossing in
    counterclockwise order starting at the incoming under-strand, so PD
    position i becomes port i.  Only single-component codes are accepted.
    """
    body = text.strip()
    if not body:
        raise ParseError("empty PD code")
    consumed = _PD_TUPLE_RE.sub("", body).strip()
    if consumed and not re.fullmatch(r"[\s,]*", consumed):
        raise ParseError(f"unrecognised PD text: {consumed[:40]!r}")
    tuples = []
    for m in _PD_TUPLE_RE.finditer(body):
        entries = [t.strip() for t in m.group(1).split(",")]
        if len(entries) != 4 or not all(e.isdigit() and int(e) > 0 for e in entries):
            raise ParseError(f"malformed tuple X[{m.group(1)}]")
        tuples.append(tuple(int(e) for e in entries))
    if not tuples:
        raise ParseError("no crossings in PD code")

    positions: dict[int, list[int]] = {}
    for x, entry in enumerate(tuples):
        for p, label in enumerate(entry):
            positions.setdefault(label, []).append(_dart(x, p))
    n = 4 * len(tuples)
    arcs = [-1] * n
    for label, darts in positions.items():
        if len(darts) != 2:
            raise ParseError(
                f"arc label {label} appears {len(darts)} times (expected exactly 2)"
            )
        a, b = darts
        arcs[a], arcs[b] = b, a
    try:
        return SurfaceDiagram.from_arcs(
            name=name,
            crossing_count=len(tuples),
            arcs=arcs,
            basepoint=PortRef(0, 0),
            claimed_genus=0,
            black_corner=PortRef(0, 0),
        )
    except StructureError as exc:
        if "component" in str(exc):
            raise ParseError("PD code describes a link, not a knot") from exc
        raise


# -- isomorphism ---------------------------------------------------------

def canonical_form(d: SurfaceDiagram, basepoint: Optional[PortRef] = None) -> tuple:
    """Canonical relabeling rooted at a basepoint.

    Crossings are renamed in order of first visit along the traversal and each
    crossing's ports are rotated by 0 or 2 so that the first entry uses port 0
    or 1.  Two diagrams related by a crossing relabeling plus port rotations
    preserving the over/under convention yield equal canonical forms when
    rooted compatibly.
    """
    base = (basepoint or d.basepoint).dart()
    order: dict[int, int] = {}
    rot: dict[int, int] = {}
    walk = []
    dart = base
    for _ in range(2 * d.crossing_count):
        walk.append(dart)
        x, p = dart // 4, dart % 4
        if x not in order:
            order[x] = len(order)
            rot[x] = 0 if p < 2 else 2
        dart = d.arcs[_dart(x, (p + 2) % 4)]

    def canon(dart: int) -> int:
        x, p = dart // 4, dart % 4
        return _dart(order[x], (p - rot[x]) % 4)

    pairs = sorted(
        tuple(sorted((canon(a), canon(b))))
        for a, b in ((i, d.arcs[i]) for i in range(4 * d.crossing_count))
        if a < b
    )
    return (d.crossing_count, d.claimed_genus, d.framing, canon(base), tuple(pairs))


def is_isomorphic(a: SurfaceDiagram, b: SurfaceDiagram) -> bool:
    """Combinatorial-map isomorphism, allowing any basepoint on ``b``."""
    if a.crossing_count != b.crossing_count or a.claimed_genus != b.claimed_genus:
        return False
    target = canonical_form(a)
    for dart in range(4 * b.crossing_count):
        try:
            if canonical_form(b, _ref(dart)) == target:
                return True
        except StructureError:
            continue
    return False
