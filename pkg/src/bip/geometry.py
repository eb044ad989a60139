"""
Exact lattice polytopes: integer-point convex hulls, facets, face
lattices, f-vectors, products and combinatorial equivalence.

All arithmetic is integer or rational, never floating point.  Points
are projected onto an integer basis of their affine hull (so Bruhat
interval polytopes, which live in the hyperplane sum(x) = n(n+1)/2,
become full-dimensional), and facets are found by incremental insertion
in those intrinsic coordinates.  Degenerate inputs are expected: facets
are merged whenever inserted points are coplanar with existing ones.

Facet inequalities are stored back in ambient coordinates as primitive
integer vectors, oriented inwards: normal · x + offset >= 0 on the
polytope, with equality exactly on the facet.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Sequence

from . import isomorph
from .perms import Perm, check_permutation, format_permutation, identity
from .posets import bruhat_leq, lower_set

Point = tuple[int, ...]


def _gcd_all(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = _gcd(g, abs(v))
    return g


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def lattice_basis(vectors: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Echelon basis of the lattice spanned by integer vectors.

    Row operations are unimodular (swaps and integer eliminations), so
    every input vector is an integer combination of the basis rows.
    """
    basis: dict[int, list[int]] = {}
    queue = [list(v) for v in vectors]
    while queue:
        row = queue.pop()
        while True:
            col = next((i for i, x in enumerate(row) if x), None)
            if col is None:
                break
            if col not in basis:
                basis[col] = row
                break
            b = basis[col]
            if abs(row[col]) < abs(b[col]):
                basis[col], row = row, b
                b = basis[col]
            q = row[col] // b[col]
            row = [x - q * y for x, y in zip(row, b)]
    out = []
    for col in sorted(basis):
        b = basis[col]
        if b[col] < 0:
            b = [-x for x in b]
        out.append(tuple(b))
    return out


def _coordinates(basis: Sequence[Point], vector: Point) -> tuple[int, ...]:
    """Integer coordinates of a lattice vector in an echelon basis."""
    rest = list(vector)
    coords = []
    for b in basis:
        col = next(i for i, x in enumerate(b) if x)
        c, r = divmod(rest[col], b[col])
        if r:
            raise ValueError("vector is not in the lattice")
        coords.append(c)
        rest = [x - c * y for x, y in zip(rest, b)]
    if any(rest):
        raise ValueError("vector is not in the span of the basis")
    return tuple(coords)


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull of a set of integer points."""
    pts = [tuple(p) for p in points]
    if not pts:
        raise ValueError("no points")
    p0 = pts[0]
    return len(lattice_basis([tuple(a - b for a, b in zip(p, p0)) for p in pts[1:]]))


def _hyperplane_through(
    points: Sequence[Point], positive_at: Sequence[int], scale: int
) -> tuple[tuple[int, ...], int]:
    """Primitive integer hyperplane (a, c) with a·x + c = 0 on all the
    given points, oriented so that a·positive_at + scale*c > 0.

    positive_at is a scaled reference point (the sum of `scale` interior
    points), which keeps the orientation test in integers.
    """
    d = len(points[0])
    p0 = points[0]
    rows = [[Fraction(x - y) for x, y in zip(p, p0)] for p in points[1:]]
    # Gaussian elimination to find the 1-dimensional null space
    pivots: list[tuple[int, list[Fraction]]] = []
    for row in rows:
        for col, prow in pivots:
            if row[col]:
                f = row[col] / prow[col]
                row = [x - f * y for x, y in zip(row, prow)]
        col = next((i for i, x in enumerate(row) if x), None)
        if col is not None:
            pivots.append((col, row))
    if len(pivots) != d - 1:
        raise ValueError("points do not span a hyperplane")
    free = next(i for i in range(d) if i not in {c for c, _ in pivots})
    a = [Fraction(0)] * d
    a[free] = Fraction(1)
    for col, row in reversed(pivots):
        a[col] = -sum(row[i] * a[i] for i in range(d) if i != col) / row[col]
    denom = 1
    for x in a:
        denom = denom * x.denominator // _gcd(denom, x.denominator)
    ai = [int(x * denom) for x in a]
    g = _gcd_all(ai)
    ai = [x // g for x in ai]
    c = -sum(x * y for x, y in zip(ai, p0))
    orient = sum(x * y for x, y in zip(ai, positive_at)) + scale * c
    if orient == 0:
        raise ValueError("reference point lies on the hyperplane")
    if orient < 0:
        ai = [-x for x in ai]
        c = -c
    return tuple(ai), c


def _incremental_hull(coords: Sequence[Point]) -> dict[tuple[tuple[int, ...], int], set[int]]:
    """Facets of the convex hull of full-dimensional integer points.

    Returns {(normal, offset): point indices known on the facet}; the
    index sets contain every hull vertex on the facet (enough to detect
    ridges exactly), though not necessarily non-vertex incident points.
    """
    d = len(coords[0])
    # initial simplex: greedily pick d+1 affinely independent points
    simplex = [0]
    for i in range(1, len(coords)):
        trial = simplex + [i]
        diffs = [
            tuple(a - b for a, b in zip(coords[j], coords[trial[0]])) for j in trial[1:]
        ]
        if len(lattice_basis(diffs)) == len(trial) - 1:
            simplex.append(i)
        if len(simplex) == d + 1:
            break
    if len(simplex) != d + 1:
        raise ValueError("points are not full-dimensional")
    ref = tuple(sum(coords[i][k] for i in simplex) for k in range(d))
    scale = d + 1

    facets: dict[tuple[tuple[int, ...], int], set[int]] = {}
    for omit in simplex:
        pts = [coords[i] for i in simplex if i != omit]
        key = _hyperplane_through(pts, ref, scale)
        facets[key] = {i for i in simplex if i != omit}

    inserted = set(simplex)
    for i in range(len(coords)):
        if i in inserted:
            continue
        inserted.add(i)
        p = coords[i]
        vals = {
            key: sum(a * x for a, x in zip(key[0], p)) + key[1] for key in facets
        }
        visible = [key for key, v in vals.items() if v < 0]
        if not visible:
            # inside or on the boundary: p is in the hull of earlier
            # points, hence never a vertex of the final hull
            continue
        coplanar = [key for key, v in vals.items() if v == 0]
        invisible = [key for key, v in vals.items() if v > 0]
        updates: dict[tuple[tuple[int, ...], int], set[int]] = {}
        for key in coplanar:
            updates[key] = facets[key] | {i}
        for fkey in visible:
            fset = facets[fkey]
            for gkey in invisible:
                shared = fset & facets[gkey]
                if not shared:
                    continue
                spts = [coords[j] for j in shared]
                if affine_rank(spts) != d - 2:
                    continue
                nkey = _hyperplane_through(spts + [p], ref, scale)
                updates.setdefault(nkey, set()).update(shared | {i})
        for key in visible:
            del facets[key]
        for key, pts_on in updates.items():
            facets[key] = facets.get(key, set()) | pts_on
    return facets


def _solve_lift(basis: Sequence[Point], intrinsic_normal: Sequence[int]) -> list[Fraction]:
    """Solve A · basis_row_t = intrinsic_normal_t for one rational A."""
    n = len(basis[0])
    rows = [[Fraction(x) for x in b] + [Fraction(intrinsic_normal[t])] for t, b in enumerate(basis)]
    pivots: list[tuple[int, list[Fraction]]] = []
    for row in rows:
        for col, prow in pivots:
            if row[col]:
                f = row[col] / prow[col]
                row = [x - f * y for x, y in zip(row, prow)]
        col = next(i for i in range(n) if row[i])
        pivots.append((col, row))
    a = [Fraction(0)] * n
    for col, row in reversed(pivots):
        a[col] = (row[n] - sum(row[i] * a[i] for i in range(n) if i != col)) / row[col]
    return a


@dataclass(frozen=True)
class Facet:
    """Inward facet inequality: normal · x + offset >= 0."""

    normal: tuple[int, ...]
    offset: int

    def value(self, point: Sequence[int]) -> int:
        return sum(a * x for a, x in zip(self.normal, point)) + self.offset


@dataclass(frozen=True)
class LatticePolytope:
    ambient_dim: int
    dim: int
    points: tuple[Point, ...]
    vertices: tuple[Point, ...]
    facets: tuple[Facet, ...]
    incidence: tuple[frozenset[int], ...]

    @property
    def non_vertices(self) -> tuple[Point, ...]:
        vs = set(self.vertices)
        return tuple(p for p in self.points if p not in vs)

    def vertex_degrees(self) -> list[int]:
        degs = [0] * len(self.vertices)
        for inc in self.incidence:
            for i in inc:
                degs[i] += 1
        return degs


def hull(points: Iterable[Sequence[int]]) -> LatticePolytope:
    """Exact convex hull of integer points.

    Input points are classified: a point is kept as a vertex exactly
    when its active facet normals span the full intrinsic dimension.

    >>> f_vector(hull([(0, 0), (1, 0), (0, 1), (1, 1)]))
    (4, 4, 1)
    """
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if not pts:
        raise ValueError("no points")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise ValueError("points have mixed dimensions")
    if len(pts) == 1:
        return LatticePolytope(n, 0, tuple(pts), tuple(pts), (), ())
    p0 = pts[0]
    basis = lattice_basis([tuple(a - b for a, b in zip(p, p0)) for p in pts[1:]])
    d = len(basis)
    coords = [_coordinates(basis, tuple(a - b for a, b in zip(p, p0))) for p in pts]

    if d == 1:
        lo = min(c[0] for c in coords)
        hi = max(c[0] for c in coords)
        intrinsic = {((1,), -lo): None, ((-1,), hi): None}
        facet_keys = list(intrinsic)
    else:
        facet_keys = sorted(_incremental_hull(coords))

    # recompute incidences over all points, then classify vertices
    incident_pts: list[list[int]] = []
    for a, c in facet_keys:
        values = [sum(p * q for p, q in zip(a, x)) + c for x in coords]
        if min(values) < 0:
            raise AssertionError("hull facet violated by an input point")
        incident_pts.append([j for j, val in enumerate(values) if val == 0])
    active: list[list[tuple[int, ...]]] = [[] for _ in pts]
    for (a, _c), on in zip(facet_keys, incident_pts):
        for j in on:
            active[j].append(a)
    vertex_ids = [
        j for j in range(len(pts)) if len(lattice_basis(active[j])) == d
    ]
    vertices = tuple(pts[j] for j in vertex_ids)
    renumber = {j: k for k, j in enumerate(vertex_ids)}

    facets = []
    incidence = []
    for (a, c), on in zip(facet_keys, incident_pts):
        lifted = _solve_lift(basis, a)
        denom = 1
        for x in lifted:
            denom = denom * x.denominator // _gcd(denom, x.denominator)
        ai = [int(x * denom) for x in lifted]
        ci = denom * c - sum(x * y for x, y in zip(ai, p0))
        g = _gcd_all(ai + [ci])
        facet = Facet(tuple(x // g for x in ai), ci // g)
        values = [facet.value(p) for p in pts]
        on_set = set(on)
        if min(values) < 0 or any((values[j] == 0) != (j in on_set) for j in range(len(pts))):
            raise AssertionError("facet lift disagrees with intrinsic facet")
        facets.append(facet)
        incidence.append(frozenset(renumber[j] for j in on if j in renumber))
    for inc in incidence:
        if affine_rank([vertices[k] for k in inc]) != d - 1:
            raise AssertionError("facet incidence does not span dimension dim-1")

    order = sorted(range(len(facets)), key=lambda i: (facets[i].normal, facets[i].offset))
    return LatticePolytope(
        n,
        d,
        tuple(pts),
        vertices,
        tuple(facets[i] for i in order),
        tuple(incidence[i] for i in order),
    )


def bip_vertices(v: Perm, w: Perm) -> tuple[Point, ...]:
    """The points (u(1), ..., u(n)) for u in the Bruhat interval [v, w]."""
    v = check_permutation(v)
    w = check_permutation(w)
    if not bruhat_leq(v, w):
        raise ValueError(
            f"{format_permutation(v)} is not <= {format_permutation(w)} in Bruhat order"
        )
    if v == identity(len(v)):
        members = lower_set(w)
    else:
        members = frozenset(u for u in lower_set(w) if bruhat_leq(v, u))
    return tuple(sorted(members))


def bruhat_interval_polytope(v: Perm, w: Perm) -> LatticePolytope:
    """The polytope Q_{v,w}: the hull of the interval's permutation points."""
    return hull(bip_vertices(v, w))


@dataclass(frozen=True)
class FaceLattice:
    """Nonempty faces by dimension, each as a frozenset of vertex ids."""

    faces: tuple[tuple[frozenset[int], ...], ...]

    def all_faces(self) -> list[frozenset[int]]:
        return [f for level in self.faces for f in level]


def face_lattice(p: LatticePolytope) -> FaceLattice:
    """All nonempty faces as intersections of facet vertex sets."""
    top = frozenset(range(len(p.vertices)))
    faces = {top}
    frontier = set(p.incidence)
    faces |= frontier
    while frontier:
        new = set()
        for f in frontier:
            for g in p.incidence:
                h = f & g
                if h and h not in faces:
                    new.add(h)
        faces |= new
        frontier = new
    by_dim: dict[int, list[frozenset[int]]] = {}
    for f in faces:
        d = affine_rank([p.vertices[i] for i in f])
        by_dim.setdefault(d, []).append(f)
    if len(by_dim.get(p.dim, ())) != 1:
        raise AssertionError("face lattice must have a unique top face")
    levels = tuple(
        tuple(sorted(by_dim.get(d, ()), key=sorted)) for d in range(p.dim + 1)
    )
    return FaceLattice(levels)


def f_vector(p: LatticePolytope) -> tuple[int, ...]:
    """(f_0, ..., f_dim) with the polytope itself counted, so the last
    entry is always 1.

    >>> f_vector(hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    (4, 6, 4, 1)
    """
    return tuple(len(level) for level in face_lattice(p).faces)


def point_polytope() -> LatticePolytope:
    return hull([(0,)])


def segment() -> LatticePolytope:
    return hull([(0,), (1,)])


def cube(k: int) -> LatticePolytope:
    """The k-cube as a product of segments; cube(0) is a point."""
    p = point_polytope()
    for _ in range(k):
        p = product_polytope(p, segment())
    return p


def hexagon() -> LatticePolytope:
    """The permutohedron of S_3 (a hexagon in the plane x+y+z = 6)."""
    from itertools import permutations

    return hull(list(permutations((1, 2, 3))))


def product_polytope(p: LatticePolytope, q: LatticePolytope) -> LatticePolytope:
    """Geometric product in the direct-sum ambient space.

    Vertices are concatenated pairs of vertices; facets come from the
    factors, padded with zeros.  No hull computation is needed.
    """
    pairs = sorted(u + v for u in p.vertices for v in q.vertices)
    index = {pt: i for i, pt in enumerate(pairs)}
    pn = p.ambient_dim
    qn = q.ambient_dim
    facets: list[Facet] = []
    incidence: list[frozenset[int]] = []
    for facet, inc in zip(p.facets, p.incidence):
        facets.append(Facet(facet.normal + (0,) * qn, facet.offset))
        keep = {p.vertices[i] for i in inc}
        incidence.append(
            frozenset(index[u + v] for u in keep for v in q.vertices)
        )
    for facet, inc in zip(q.facets, q.incidence):
        facets.append(Facet((0,) * pn + facet.normal, facet.offset))
        keep = {q.vertices[i] for i in inc}
        incidence.append(
            frozenset(index[u + v] for u in p.vertices for v in keep)
        )
    order = sorted(range(len(facets)), key=lambda i: (facets[i].normal, facets[i].offset))
    return LatticePolytope(
        pn + qn,
        p.dim + q.dim,
        tuple(pairs),
        tuple(pairs),
        tuple(facets[i] for i in order),
        tuple(incidence[i] for i in order),
    )


def combinatorially_equivalent(p: LatticePolytope, q: LatticePolytope) -> bool:
    """Isomorphism of vertex-facet incidence structures.

    Cheap invariants (dimension, counts, facet sizes, vertex degrees)
    prune first; survivors go through bipartite-incidence backtracking.
    """
    if p.dim != q.dim:
        return False
    if len(p.vertices) != len(q.vertices) or len(p.facets) != len(q.facets):
        return False
    if sorted(len(i) for i in p.incidence) != sorted(len(i) for i in q.incidence):
        return False
    if sorted(p.vertex_degrees()) != sorted(q.vertex_degrees()):
        return False

    def graph(poly: LatticePolytope):
        nv = len(poly.vertices)
        edges = [
            (i, nv + f) for f, inc in enumerate(poly.incidence) for i in inc
        ]
        degs = poly.vertex_degrees()
        colors = [("v", degs[i]) for i in range(nv)] + [
            ("f", len(inc)) for inc in poly.incidence
        ]
        return nv + len(poly.facets), edges, colors

    n1, e1, c1 = graph(p)
    n2, e2, c2 = graph(q)
    return isomorph.digraph_isomorphic(n1, e1, c1, n2, e2, c2)


def polytope_json(p: LatticePolytope) -> dict:
    return {
        "ambient_dim": p.ambient_dim,
        "dim": p.dim,
        "points": [list(pt) for pt in p.points],
        "vertices": [list(v) for v in p.vertices],
        "facets": [
            {"normal": list(f.normal), "offset": f.offset, "vertices": sorted(inc)}
            for f, inc in zip(p.facets, p.incidence)
        ],
        "f_vector": list(f_vector(p)),
    }


def polytope_from_json(data: dict) -> LatticePolytope:
    return LatticePolytope(
        data["ambient_dim"],
        data["dim"],
        tuple(tuple(pt) for pt in data["points"]),
        tuple(tuple(v) for v in data["vertices"]),
        tuple(Facet(tuple(f["normal"]), f["offset"]) for f in data["facets"]),
        tuple(frozenset(f["vertices"]) for f in data["facets"]),
    )


def polytope_json_text(p: LatticePolytope) -> str:
    return json.dumps(polytope_json(p), sort_keys=True, indent=2) + "\n"


def _intrinsic_coordinates(p: LatticePolytope) -> list[tuple[int, ...]]:
    if len(p.vertices) == 1:
        return [(0,)]
    p0 = p.vertices[0]
    basis = lattice_basis(
        [tuple(a - b for a, b in zip(v, p0)) for v in p.vertices[1:]]
    )
    return [
        _coordinates(basis, tuple(a - b for a, b in zip(v, p0))) for v in p.vertices
    ]


def _polygon_cycle(coords2: Sequence[tuple[Fraction, Fraction]]) -> list[int]:
    """Order point indices counterclockwise around their centroid."""
    k = len(coords2)
    cx = sum(c[0] for c in coords2) / k
    cy = sum(c[1] for c in coords2) / k
    rel = [(c[0] - cx, c[1] - cy) for c in coords2]

    def half(v: tuple[Fraction, Fraction]) -> int:
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    def compare(i: int, j: int) -> int:
        hi, hj = half(rel[i]), half(rel[j])
        if hi != hj:
            return -1 if hi < hj else 1
        cross = rel[i][0] * rel[j][1] - rel[i][1] * rel[j][0]
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    return sorted(range(k), key=cmp_to_key(compare))


def polytope_off(p: LatticePolytope) -> str:
    """OFF text for a polytope of intrinsic dimension <= 3.

    Uses intrinsic coordinates padded with zeros; 2-faces are emitted as
    oriented vertex cycles.
    """
    if p.dim > 3:
        raise ValueError("OFF export requires dimension <= 3")
    coords = _intrinsic_coordinates(p)
    padded = [tuple(c) + (0,) * (3 - len(c)) for c in coords]
    if p.dim <= 1:
        faces: list[list[int]] = []
    elif p.dim == 2:
        pts2 = [(Fraction(c[0]), Fraction(c[1])) for c in padded]
        faces = [_polygon_cycle(pts2)]
    else:
        faces = []
        for inc in p.incidence:
            ids = sorted(inc)
            plane = lattice_basis(
                [
                    tuple(a - b for a, b in zip(padded[j], padded[ids[0]]))
                    for j in ids[1:]
                ]
            )
            # project out a coordinate axis transverse to the face plane
            drop = next(
                axis
                for axis in range(3)
                if len(lattice_basis(list(plane) + [tuple(1 if t == axis else 0 for t in range(3))])) == 3
            )
            keep = [axis for axis in range(3) if axis != drop]
            pts2 = [
                (Fraction(padded[j][keep[0]]), Fraction(padded[j][keep[1]]))
                for j in ids
            ]
            cycle = _polygon_cycle(pts2)
            faces.append([ids[k] for k in cycle])
    edge_count = sum(len(level) for level in face_lattice(p).faces[1:2])
    lines = ["OFF", f"{len(padded)} {len(faces)} {edge_count}"]
    for c in padded:
        lines.append(" ".join(str(x) for x in c))
    for face in faces:
        lines.append(str(len(face)) + " " + " ".join(str(i) for i in face))
    return "\n".join(lines) + "\n"
