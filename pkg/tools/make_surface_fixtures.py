#!/usr/bin/env python3
"""Construct the positive-genus fixture diagrams.

Each figure fixture is a generalised alternating projection encoded as the
medial map of a multigraph G cellularly embedded in the surface: vertices of
G become the regions of one color, faces of G the regions of the other, and
edges of G the crossings.  The region counts of the targets follow from
their published Euler characteristics; the primality condition then forces
strong structure on G, which this script exploits:

* 8_17 on the torus needs 3 regions of one color against 8 of the other.
  Primality forces every face of G to be a triangle or bigon (six triangles,
  two bigons), i.e. G is a 3-vertex torus triangulation with two parallel
  edges inserted.  All such maps are enumerated; the first knot among them
  is taken.  Exhaustive enumeration also shows every such map has crossing
  sign split 3/8, fixing the framing the embedding must declare (see below).
* The 13-crossing double-torus diagram needs 7 regions of one color against
  4 of the other; primality of the 7-region class (each of its regions at
  most 4 boundary arcs against only 4 opposite regions) forces G, in the
  form where the 4 regions are the vertices, to be a genus-2 quadrangulation
  whose six quadrilaterals each visit all four vertices, plus one parallel
  edge.  The quadrangulations are enumerated by gluing directed 4-cycles.
* The 11-crossing torus diagram needs a vertex-prime 4-vertex torus map
  with 11 edges.  Bases are 4-vertex torus quadrangulations (8 edges, all
  enumerated by 4-cycle gluing) that are vertex-prime and whose underlying
  multigraph is non-bipartite — bipartite bases give an orientable
  checkerboard surface, which a nonzero-slope spanning surface cannot be —
  followed by three parallel edge insertions.

The local slope contributions of a positive-genus diagram are measured
against the pushoff along the projection surface; the declared framing
converts them to the standard longitude of the surface's embedding in the
3-sphere.  The framing of each fixture is chosen as the published slope
pair minus the computed local contributions (a single even offset common to
both colors — the consistency of that difference is asserted here).

The search is fully deterministic (exhaustive enumeration in a fixed order,
first hit taken); reruns reproduce the shipped files byte for byte.
"""

from __future__ import annotations

import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from knotslope.diagram import (
    PortRef,
    StructureError,
    SurfaceDiagram,
    checkerboard_coloring,
    is_alternating,
    mirror,
    serialize_diagram,
    trace_faces,
)
from knotslope.ga import validate_ga
from knotslope.invariants import build_surfaces

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "src" / "knotslope" / "fixtures"


# -- medial map of an embedded multigraph --------------------------------

def medial_diagram(vertex_of, sigma, alpha, genus, name, black_class, framing=0):
    """Medial knot diagram of an embedded multigraph rotation system.

    Crossing x sits on edge x of G.  Port labels are chosen so that corners
    0 and 2 of every crossing point at the faces of G and corners 1 and 3
    at its vertices: with one half-edge of the edge designated "down",
    ports are 0 = right of down, 1 = left of up, 2 = right of up,
    3 = left of down, which is counterclockwise.  ``black_class`` selects
    which region class the coloring calls black: "vertices" pins corner 1,
    "faces" corner 0.
    """
    half = len(sigma)
    edge_id = [0] * half
    is_down = [False] * half
    ne = 0
    for h in range(half):
        if h < alpha[h]:
            edge_id[h] = edge_id[alpha[h]] = ne
            is_down[h] = True
            ne += 1

    arcs = [-1] * (4 * ne)
    for h in range(half):
        a = 4 * edge_id[h] + (3 if is_down[h] else 1)
        b = 4 * edge_id[sigma[h]] + (0 if is_down[sigma[h]] else 2)
        arcs[a], arcs[b] = b, a
    black = PortRef(0, 1) if black_class == "vertices" else PortRef(0, 0)
    return SurfaceDiagram.from_arcs(
        name=name,
        crossing_count=ne,
        arcs=arcs,
        basepoint=PortRef(0, 0),
        claimed_genus=genus,
        black_corner=black,
        framing=framing,
    )


# -- 8_17 on the torus: exhaustive construction --------------------------

def torus_triangulations_3():
    """All rotation systems of 3-vertex, 9-edge torus maps with 6 triangles.

    Darts 0-2 join vertex 0 to vertex 1, darts 3-5 vertex 0 to vertex 2,
    darts 9-11 vertex 1 to vertex 2; the pairing is fixed and the rotations
    range over all cyclic orders (first dart of each vertex pinned, which
    loses nothing up to relabeling).
    """
    vertex_of = [0] * 6 + [1] * 6 + [2] * 6
    alpha = [0] * 18
    for i in range(3):
        alpha[i], alpha[6 + i] = 6 + i, i
        alpha[3 + i], alpha[12 + i] = 12 + i, 3 + i
        alpha[9 + i], alpha[15 + i] = 15 + i, 9 + i

    def face_sizes(sigma):
        orbit = [-1] * 18
        sizes = []
        for start in range(18):
            if orbit[start] != -1:
                continue
            h, n = start, 0
            while orbit[h] == -1:
                orbit[h] = len(sizes)
                h = sigma[alpha[h]]
                n += 1
            sizes.append(n)
        return sizes

    def connected(sigma):
        seen = {0}
        stack = [0]
        while stack:
            h = stack.pop()
            for g in (sigma[h], alpha[h]):
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
        return len(seen) == 18

    out = []
    for p0 in itertools.permutations([1, 2, 3, 4, 5]):
        for p1 in itertools.permutations([7, 8, 9, 10, 11]):
            for p2 in itertools.permutations([13, 14, 15, 16, 17]):
                sigma = [0] * 18
                for cyc in ([0, *p0], [6, *p1], [12, *p2]):
                    for i, h in enumerate(cyc):
                        sigma[h] = cyc[(i + 1) % 6]
                sizes = face_sizes(sigma)
                if len(sizes) == 6 and all(s == 3 for s in sizes) and connected(sigma):
                    out.append(sigma)
    return vertex_of, alpha, out


def insert_parallel(vertex_of, rot, alpha, h_a, side, new):
    """Add an edge parallel to the one at ``h_a``, creating a bigon."""
    h_b = alpha[h_a]
    n_a, n_b = new, new + 1
    alpha = dict(alpha)
    alpha[n_a], alpha[n_b] = n_b, n_a
    vertex_of = vertex_of + [vertex_of[h_a], vertex_of[h_b]]
    rot = [list(c) for c in rot]
    for c in rot:
        if h_a in c:
            c.insert(c.index(h_a) + (1 if side == 0 else 0), n_a)
    for c in rot:
        if h_b in c:
            c.insert(c.index(h_b) + (0 if side == 0 else 1), n_b)
    return vertex_of, rot, alpha


def rotation_cycles(sigma, half):
    cycles = []
    seen = set()
    for h in range(half):
        if h in seen:
            continue
        c = [h]
        seen.add(h)
        g = sigma[h]
        while g != h:
            c.append(g)
            seen.add(g)
            g = sigma[g]
        cycles.append(c)
    return cycles


def sigma_from_cycles(cycles, half):
    sigma = [0] * half
    for c in cycles:
        for i, h in enumerate(c):
            sigma[h] = c[(i + 1) % len(c)]
    return sigma


def find_817_torus():
    """First doubled triangulation that is a GA knot diagram."""
    vertex_of0, alpha0, tris = torus_triangulations_3()
    for sigma_t in tris:
        rot = rotation_cycles(sigma_t, 18)
        for h1 in range(18):
            if h1 > alpha0[h1]:
                continue
            for s1 in (0, 1):
                vo1, rot1, al1 = insert_parallel(
                    list(vertex_of0), rot, dict(enumerate(alpha0)), h1, s1, 18
                )
                for h2 in range(20):
                    if h2 > al1[h2]:
                        continue
                    for s2 in (0, 1):
                        vo2, rot2, al2 = insert_parallel(vo1, rot1, al1, h2, s2, 20)
                        alpha = [al2[h] for h in range(22)]
                        sigma = sigma_from_cycles(rot2, 22)
                        try:
                            d = medial_diagram(vo2, sigma, alpha, 1,
                                               "8_17-torus", "vertices")
                        except StructureError:
                            continue
                        v = validate_ga(d)
                        if v.overall and v.reduced:
                            return vo2, sigma, alpha
    raise SystemExit("no 8_17 torus candidate (unexpected: family is nonempty)")


# -- gluing directed cycles into embedded multigraphs --------------------

def glue_cycles(faces, nvertices):
    """All maps obtained by gluing the given directed face cycles.

    ``faces`` is a list of cyclic vertex-label sequences.  Slots traversing
    u -> v are matched with slots traversing v -> u (orientable gluing);
    every matching whose vertex orbits carry a single label, realise exactly
    ``nvertices`` vertices and form a connected map is yielded as
    (vertex_of, sigma, alpha) over the slot darts.
    """
    from collections import defaultdict

    slots = []
    for fi, cyc in enumerate(faces):
        n = len(cyc)
        for pos in range(n):
            slots.append((fi, pos, (cyc[pos], cyc[(pos + 1) % n])))
    nslots = len(slots)
    sid = {(fi, pos): i for i, (fi, pos, _) in enumerate(slots)}
    phi = [0] * nslots  # next slot along the same face walk
    for i, (fi, pos, _) in enumerate(slots):
        phi[i] = sid[(fi, (pos + 1) % len(faces[fi]))]

    byedge = defaultdict(list)
    for i, (_, _, e) in enumerate(slots):
        byedge[e].append(i)
    pairs = []
    done = set()
    for (u, v) in list(byedge):
        key = (min(u, v), max(u, v))
        if key in done:
            continue
        done.add(key)
        if len(byedge[(u, v)]) != len(byedge.get((v, u), [])):
            return  # unbalanced: no orientable gluing exists
        pairs.append((byedge[(u, v)], byedge[(v, u)]))

    perm_lists = [list(itertools.permutations(range(len(B)))) for _, B in pairs]
    for choice in itertools.product(*perm_lists):
        alpha = [0] * nslots
        ok = True
        for (A, B), perm in zip(pairs, choice):
            for ai, a in enumerate(A):
                b = B[perm[ai]]
                if a == b:
                    ok = False
                    break
                alpha[a], alpha[b] = b, a
            if not ok:
                break
        if not ok:
            continue
        sigma = [phi[alpha[h]] for h in range(nslots)]
        seen = [False] * nslots
        orbits = []
        good = True
        for s in range(nslots):
            if seen[s]:
                continue
            orb = []
            h = s
            while not seen[h]:
                seen[h] = True
                orb.append(h)
                h = sigma[h]
            if len({slots[h][2][0] for h in orb}) != 1:
                good = False
                break
            orbits.append(orb)
        if not good or len(orbits) != nvertices:
            continue
        reach = {0}
        stack = [0]
        while stack:
            h = stack.pop()
            for g in (sigma[h], alpha[h]):
                if g not in reach:
                    reach.add(g)
                    stack.append(g)
        if len(reach) != nslots:
            continue
        vertex_of = [slots[h][2][0] for h in range(nslots)]
        yield vertex_of, sigma, alpha


def canonical_quads(distinct):
    """Directed 4-cycles over labels 0..3, one per rotation class."""
    out = set()
    for t in itertools.product(range(4), repeat=4):
        a, b, c, d = t
        if a == b or b == c or c == d or d == a:
            continue
        if distinct and len(set(t)) != 4:
            continue
        out.add(min(tuple(t[i:] + t[:i]) for i in range(4)))
    return sorted(out)


def balanced_multisets(cycles, size):
    from collections import Counter

    for ms in itertools.combinations_with_replacement(cycles, size):
        c = Counter()
        for cyc in ms:
            for i in range(4):
                c[(cyc[i], cyc[(i + 1) % 4])] += 1
        if all(c.get((v, u), 0) == n for (u, v), n in c.items()):
            yield list(ms)


def insertion_closure(vertex_of, sigma, alpha, depth):
    """All maps reachable by ``depth`` parallel-edge insertions."""
    rot = rotation_cycles(sigma, len(sigma))
    stack = [(list(vertex_of), rot, dict(enumerate(alpha)), depth)]
    while stack:
        vo, rot, al, d = stack.pop()
        half = len(vo)
        if d == 0:
            yield vo, sigma_from_cycles(rot, half), [al[x] for x in range(half)]
            continue
        for h in range(half):
            if h > al[h]:
                continue
            for side in (0, 1):
                stack.append(
                    (*insert_parallel(list(vo), rot, dict(al), h, side, half), d - 1)
                )


def find_12a603_genus2():
    """First genus-2 quadrangulation-plus-bigon map meeting the target.

    Target: medial is a GA knot, black (7 faces of G) slope -10 with chi -6,
    white (4 vertices) slope +16 with chi -9, both non-orientable, with no
    framing offset, and crossing-type counts 5 and 8.
    """
    quads = canonical_quads(distinct=True)
    for ms in balanced_multisets(quads, 6):
        for base in glue_cycles(ms, 4):
            for vo, sigma, alpha in insertion_closure(*base, depth=1):
                try:
                    d = medial_diagram(vo, sigma, alpha, 2,
                                       "12a603-genus2", "faces")
                except StructureError:
                    continue
                v = validate_ga(d)
                if not (v.overall and v.reduced):
                    continue
                b, w = build_surfaces(d)
                if (b.slope, w.slope) != (-10, 16):
                    continue
                if b.orientable or w.orientable:
                    continue
                return d
    raise SystemExit("no 12a603 genus-2 candidate found")


def find_10_161_torus():
    """First torus map for the 11-crossing diagram.

    Bases are vertex-prime, non-bipartite 4-vertex torus quadrangulations;
    three parallel insertions bring them to 11 edges and 7 faces.  The first
    GA knot with both checkerboard surfaces non-orientable is taken.
    """
    quads = canonical_quads(distinct=False)
    for ms in balanced_multisets(quads, 4):
        for vo, sigma, alpha in glue_cycles(ms, 4):
            if _bipartite(vo, alpha):
                continue
            if not _vertex_prime(vo, sigma, alpha):
                continue
            for vo2, sigma2, alpha2 in insertion_closure(vo, sigma, alpha, 3):
                try:
                    d = medial_diagram(vo2, sigma2, alpha2, 1,
                                       "10_161-torus", "vertices")
                except StructureError:
                    continue
                v = validate_ga(d)
                if not (v.overall and v.reduced):
                    continue
                b, w = build_surfaces(d)
                if b.orientable or w.orientable:
                    continue
                return d
    raise SystemExit("no 10_161 torus candidate found")


def _bipartite(vertex_of, alpha):
    from collections import defaultdict

    adj = defaultdict(list)
    for h in range(len(vertex_of)):
        if h < alpha[h]:
            u, v = vertex_of[h], vertex_of[alpha[h]]
            adj[u].append(v)
            adj[v].append(u)
    color = {0: 0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in color:
                color[v] = 1 - color[u]
                stack.append(v)
            elif color[v] == color[u]:
                return False
    return True


def _vertex_prime(vertex_of, sigma, alpha):
    """Each vertex rotation must see pairwise distinct faces of the map."""
    half = len(sigma)
    orbit = [-1] * half
    nf = 0
    for start in range(half):
        if orbit[start] != -1:
            continue
        h = start
        while orbit[h] == -1:
            orbit[h] = nf
            h = sigma[alpha[h]]
        nf += 1
    for cyc in rotation_cycles(sigma, half):
        faces = [orbit[alpha[g]] for g in cyc]
        if len(faces) != len(set(faces)):
            return False
    return True


# -- framing assignment and output ---------------------------------------

def with_published_slopes(d, black_slope, white_slope, name):
    """Declare the framing that matches the published slope pair.

    The local contributions fix slope(black) - slope(white); the framing is
    the common offset.  If the difference has the wrong sign the reflected
    diagram is used, which negates the local contributions.
    """
    b, w = build_surfaces(d)
    assert d.framing == 0
    if b.slope - w.slope != black_slope - white_slope:
        m = mirror(d)
        b, w = build_surfaces(m)
        assert b.slope - w.slope == black_slope - white_slope, "spread mismatch"
        d = m
    offset = black_slope - b.slope
    assert offset == white_slope - w.slope and offset % 2 == 0
    out = SurfaceDiagram.from_arcs(
        name=name, crossing_count=d.crossing_count, arcs=d.arcs,
        basepoint=d.basepoint, claimed_genus=d.claimed_genus,
        black_corner=d.black_corner, framing=offset,
    )
    b, w = build_surfaces(out)
    assert (b.slope, w.slope) == (black_slope, white_slope)
    return out


def report(d):
    faces = trace_faces(d)
    col = checkerboard_coloring(d, faces)
    b, w = build_surfaces(d, col, faces)
    v = validate_ga(d)
    assert is_alternating(d)
    print(f"  {d.name}: c={d.crossing_count} g={d.claimed_genus} "
          f"framing={d.framing} faces={len(faces)} "
          f"black=({b.slope},{b.euler},{'or' if b.orientable else 'non-or'}) "
          f"white=({w.slope},{w.euler},{'or' if w.orientable else 'non-or'}) "
          f"ga={v.overall} reduced={v.reduced}")


def save(d, filename):
    report(d)
    (FIXTURE_DIR / filename).write_text(serialize_diagram(d))


def main():
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)

    # 8_17 on the torus: black = 3 vertex regions, slope +14 (chi -8),
    # white = 8 faces, slope -8 (chi -3).
    vo, sigma, alpha = find_817_torus()
    raw = medial_diagram(vo, sigma, alpha, 1, "8_17-torus", "vertices")
    fig1 = with_published_slopes(raw, 14, -8, "8_17-torus")
    save(fig1, "8_17_torus.sdg")

    m = mirror(fig1)
    m = SurfaceDiagram.from_arcs(
        name="8_17-torus-mirror", crossing_count=m.crossing_count, arcs=m.arcs,
        basepoint=m.basepoint, claimed_genus=m.claimed_genus,
        black_corner=m.black_corner, framing=m.framing,
    )
    save(m, "8_17_torus_mirror.sdg")

    # 12a603 on the double torus: 13 crossings, black = 7 faces of G
    # (slope -10), white = 4 vertex regions (slope +16, chi -9).  The
    # construction already lands on the published slopes with framing 0; the
    # crossing-type counts come out 5 and 8.
    fig2 = with_published_slopes(find_12a603_genus2(), -10, 16, "12a603-genus2")
    save(fig2, "12a603_genus2.sdg")

    # 10_161 on the torus: 11 crossings, black = 4 vertex regions
    # (slope +2), white = 7 faces (slope -20).
    fig3 = with_published_slopes(find_10_161_torus(), 2, -20, "10_161-torus")
    save(fig3, "10_161_torus.sdg")


if __name__ == "__main__":
    main()
