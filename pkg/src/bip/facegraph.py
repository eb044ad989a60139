"""
The face criterion for Bruhat interval polytopes.

For u in [v, w], the set of transpositions moving u one step up inside
the interval is T̄(u,[v,w]) = {(i,j) : u < u(i,j) <= w, l(u(i,j)) = l(u)+1},
and T̲(u,[v,w]) moves one step down staying above v.  For a subinterval
[x, y] of [v, w], the contracted directed graph carries one node per
connected component of the undirected graph on {1, ..., n} with edges
T̄(x,[x,y]), a directed edge i -> j for (i,j) in T̄(y,[v,w]) and j -> i
for (i,j) in T̲(x,[v,w]).  Q_{x,y} is a face of Q_{v,w} exactly when
that graph is acyclic; a directed edge inside one merged component is a
self-loop and counts as a cycle.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .geometry import affine_rank
from .perms import Perm, apply_transposition, check_permutation, format_permutation, length
from .posets import bruhat_leq, interval

Pair = tuple[int, int]


def _check_chain(*perms: Perm) -> None:
    for a, b in zip(perms, perms[1:]):
        if not bruhat_leq(a, b):
            raise ValueError(
                f"{format_permutation(a)} is not <= {format_permutation(b)} in Bruhat order"
            )


def _upper(u: Perm, members: Optional[frozenset[Perm]], w: Perm) -> frozenset[Pair]:
    n = len(u)
    lu = length(u)
    out = []
    for i, j in combinations(range(1, n + 1), 2):
        b = apply_transposition(u, i, j)
        if length(b) != lu + 1:
            continue
        if (b in members) if members is not None else bruhat_leq(b, w):
            out.append((i, j))
    return frozenset(out)


def _lower(u: Perm, members: Optional[frozenset[Perm]], v: Perm) -> frozenset[Pair]:
    n = len(u)
    lu = length(u)
    out = []
    for i, j in combinations(range(1, n + 1), 2):
        b = apply_transposition(u, i, j)
        if length(b) != lu - 1:
            continue
        if (b in members) if members is not None else bruhat_leq(v, b):
            out.append((i, j))
    return frozenset(out)


def upper_transpositions(u: Perm, v: Perm, w: Perm) -> frozenset[Pair]:
    """T̄(u,[v,w]): pairs (i,j) with u < u(i,j) <= w one step up.

    >>> sorted(upper_transpositions((1,3,2,4), (1,3,2,4), (1,3,4,2)))
    [(3, 4)]
    """
    u, v, w = map(check_permutation, (u, v, w))
    _check_chain(v, u, w)
    return _upper(u, None, w)


def lower_transpositions(u: Perm, v: Perm, w: Perm) -> frozenset[Pair]:
    """T̲(u,[v,w]): pairs (i,j) with v <= u(i,j) < u one step down."""
    u, v, w = map(check_permutation, (u, v, w))
    _check_chain(v, u, w)
    return _lower(u, None, v)


@dataclass(frozen=True)
class FaceGraph:
    """Contracted directed graph deciding the face criterion.

    classes partition {1, ..., n}; edges hold directed pairs of class
    indices, self-loops included.
    """

    n: int
    classes: tuple[tuple[int, ...], ...]
    edges: frozenset[tuple[int, int]]

    def class_of(self, vertex: int) -> int:
        for k, cls in enumerate(self.classes):
            if vertex in cls:
                return k
        raise ValueError(f"vertex {vertex} out of range")

    def is_acyclic(self) -> bool:
        if any(a == b for a, b in self.edges):
            return False
        out: dict[int, set[int]] = {k: set() for k in range(len(self.classes))}
        indeg = {k: 0 for k in range(len(self.classes))}
        for a, b in self.edges:
            if b not in out[a]:
                out[a].add(b)
                indeg[b] += 1
        queue = [k for k, d in indeg.items() if d == 0]
        seen = 0
        while queue:
            a = queue.pop()
            seen += 1
            for b in out[a]:
                indeg[b] -= 1
                if indeg[b] == 0:
                    queue.append(b)
        return seen == len(self.classes)


def _merge_classes(n: int, pairs: Iterable[Pair]) -> tuple[tuple[int, ...], ...]:
    parent = list(range(n + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j in pairs:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for v in range(1, n + 1):
        groups.setdefault(find(v), []).append(v)
    return tuple(tuple(groups[r]) for r in sorted(groups))


def _face_graph(
    x: Perm,
    y: Perm,
    members: Optional[frozenset[Perm]],
    v: Perm,
    w: Perm,
    sub_members: Optional[frozenset[Perm]] = None,
) -> FaceGraph:
    n = len(x)
    undirected = _upper(x, sub_members, y)
    classes = _merge_classes(n, undirected)
    cls = {}
    for k, group in enumerate(classes):
        for a in group:
            cls[a] = k
    edges = set()
    for i, j in _upper(y, members, w):
        edges.add((cls[i], cls[j]))
    for i, j in _lower(x, members, v):
        edges.add((cls[j], cls[i]))
    return FaceGraph(n, classes, frozenset(edges))


def face_graph(x: Perm, y: Perm, v: Perm, w: Perm) -> FaceGraph:
    """The graph G_{x,y}^{v,w} for [x, y] contained in [v, w].

    >>> g = face_graph((1,3,2,4), (1,3,4,2), (1,2,3,4), (1,4,3,2))
    >>> g.classes
    ((1,), (2,), (3, 4))
    >>> sorted(g.edges)
    [(1, 2), (2, 1)]
    """
    x, y, v, w = map(check_permutation, (x, y, v, w))
    _check_chain(v, x, y, w)
    return _face_graph(x, y, None, v, w)


def is_face(x: Perm, y: Perm, v: Perm, w: Perm) -> bool:
    """Whether Q_{x,y} is a face of Q_{v,w}: acyclicity of G_{x,y}^{v,w}."""
    return face_graph(x, y, v, w).is_acyclic()


@dataclass(frozen=True)
class FaceRecord:
    x: Perm
    y: Perm
    dim: int


def _faces_with_points(v: Perm, w: Perm):
    v = check_permutation(v)
    w = check_permutation(w)
    box = interval(v, w)
    members = frozenset(box.elements)
    for x in box.elements:
        for y in box.elements:
            if length(x) > length(y) or not bruhat_leq(x, y):
                continue
            sub = frozenset(u for u in members if bruhat_leq(x, u) and bruhat_leq(u, y))
            g = _face_graph(x, y, members, v, w, sub_members=sub)
            if g.is_acyclic():
                yield x, y, sub


def enumerate_faces(v: Perm, w: Perm) -> tuple[FaceRecord, ...]:
    """All subintervals [x, y] of [v, w] passing the face criterion,
    with dim Q_{x,y} attached, sorted by (dim, x, y)."""
    records = [
        FaceRecord(x, y, affine_rank(sorted(sub)))
        for x, y, sub in _faces_with_points(v, w)
    ]
    return tuple(sorted(records, key=lambda r: (r.dim, r.x, r.y)))


def face_point_sets(v: Perm, w: Perm) -> dict[frozenset[Perm], tuple[FaceRecord, ...]]:
    """Faces keyed by their vertex-point sets.

    Distinct subintervals defining the same geometric face would
    collide here; callers can inspect the multiplicities rather than
    assume injectivity.
    """
    out: dict[frozenset[Perm], list[FaceRecord]] = {}
    for x, y, sub in _faces_with_points(v, w):
        out.setdefault(sub, []).append(FaceRecord(x, y, affine_rank(sorted(sub))))
    return {k: tuple(vs) for k, vs in out.items()}


def lemma_identity_report(u: Perm, v: Perm, w: Perm, r: int) -> tuple[bool, ...]:
    """Evaluate the seven exchange identities for T̄/T̲ under left and
    right multiplication by s_r, for v <= u <= w with s_r not in
    supp(w).  Returns seven booleans, one per part:

    (1) T̲(u,[v,s_r w]) = T̲(u,[v,w]) and T̲(u,[v,w s_r]) = T̲(u,[v,w])
    (2) T̄(u,[v,s_r w]) = T̄(u,[v,w]) ∪ {(u⁻¹(r), u⁻¹(r+1))}
    (3) T̄(u,[v,w s_r]) = T̄(u,[v,w]) ∪ {(r, r+1)}
    (4) T̄(s_r u,[v,s_r w]) = T̄(u,[v,w])
    (5) T̲(s_r u,[v,s_r w]) = T̲(u,[v,w]) ∪ {(u⁻¹(r), u⁻¹(r+1))}
    (6) T̄(u s_r,[v,w s_r]) = s_r-conjugate of T̄(u,[v,w])
    (7) T̲(u s_r,[v,w s_r]) = s_r-conjugate of T̲(u,[v,w]) ∪ {(r, r+1)}
    """
    from .perms import compose, inverse, simple, support

    u, v, w = map(check_permutation, (u, v, w))
    n = len(w)
    if not 1 <= r <= n - 1:
        raise ValueError(f"s_{r} does not exist in S_{n}")
    _check_chain(v, u, w)
    if r in support(w):
        raise ValueError(f"s_{r} lies in the support of {format_permutation(w)}")
    sr = simple(n, r)
    srw = compose(sr, w)
    wsr = compose(w, sr)
    sru = compose(sr, u)
    usr = compose(u, sr)
    uinv = inverse(u)

    def conj(pair: Pair) -> Pair:
        a, b = (sr[pair[0] - 1], sr[pair[1] - 1])
        return (a, b) if a < b else (b, a)

    base_up = upper_transpositions(u, v, w)
    base_down = lower_transpositions(u, v, w)
    swap_pair = tuple(sorted((uinv[r - 1], uinv[r])))

    part1 = (
        lower_transpositions(u, v, srw) == base_down
        and lower_transpositions(u, v, wsr) == base_down
    )
    part2 = upper_transpositions(u, v, srw) == base_up | {swap_pair}
    part3 = upper_transpositions(u, v, wsr) == base_up | {(r, r + 1)}
    part4 = upper_transpositions(sru, v, srw) == base_up
    part5 = lower_transpositions(sru, v, srw) == base_down | {swap_pair}
    part6 = upper_transpositions(usr, v, wsr) == frozenset(conj(p) for p in base_up)
    part7 = lower_transpositions(usr, v, wsr) == frozenset(conj(p) for p in base_down) | {
        (r, r + 1)
    }
    return (part1, part2, part3, part4, part5, part6, part7)


def face_graph_dot(g: FaceGraph, name: str = "facegraph") -> str:
    """DOT export with merged-class labels like "3,4"."""
    labels = [",".join(str(a) for a in cls) for cls in g.classes]
    lines = [f"digraph {name} {{", "  node [shape = circle];"]
    for lab in labels:
        lines.append(f'  "{lab}";')
    for a, b in sorted(g.edges):
        lines.append(f'  "{labels[a]}" -> "{labels[b]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
