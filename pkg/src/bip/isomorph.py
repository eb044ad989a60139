"""
Isomorphism testing for finite colored digraphs by partition refinement
followed by backtracking.

Both posets (Hasse diagrams colored by rank and degrees) and polytopes
(vertex-facet incidences as bipartite digraphs) reduce to this.  Graphs
here are small (a few hundred nodes), so a plain refine-then-backtrack
search is fast; refinement colors are computed jointly for both graphs
so color classes are directly comparable.
"""
from __future__ import annotations

from collections import Counter
from typing import Hashable, Iterable, Sequence


class _Graph:
    def __init__(self, n: int, edges: Iterable[tuple[int, int]], colors: Sequence[Hashable]):
        self.n = n
        self.out: list[set[int]] = [set() for _ in range(n)]
        self.inn: list[set[int]] = [set() for _ in range(n)]
        for a, b in edges:
            self.out[a].add(b)
            self.inn[b].add(a)
        self.colors = list(colors)


def _refine(g1: _Graph, g2: _Graph) -> tuple[list[int], list[int]] | None:
    """Jointly refine node colors; None if the color histograms ever differ."""
    table: dict[Hashable, int] = {}

    def recolor(g: _Graph, cols: list) -> list[int]:
        out = []
        for v in range(g.n):
            sig = (
                cols[v],
                tuple(sorted(cols[u] for u in g.out[v])),
                tuple(sorted(cols[u] for u in g.inn[v])),
            )
            if sig not in table:
                table[sig] = len(table)
            out.append(table[sig])
        return out

    c1 = list(g1.colors)
    c2 = list(g2.colors)
    # normalize initial colors through the shared table
    for v in range(g1.n):
        if c1[v] not in table:
            table[c1[v]] = len(table)
        c1[v] = table[c1[v]]
    for v in range(g2.n):
        if c2[v] not in table:
            table[c2[v]] = len(table)
        c2[v] = table[c2[v]]
    while True:
        if Counter(c1) != Counter(c2):
            return None
        table.clear()
        n1 = recolor(g1, c1)
        table_snapshot = dict(table)
        n2 = recolor(g2, c2)
        # recolor(g2) may only reuse signatures; new ones mean a mismatch
        if len(table) != len(table_snapshot) or Counter(n1) != Counter(n2):
            return None
        if len(set(n1)) == len(set(c1)):
            return n1, n2
        c1, c2 = n1, n2


def digraph_isomorphic(
    n1: int,
    edges1: Iterable[tuple[int, int]],
    colors1: Sequence[Hashable],
    n2: int,
    edges2: Iterable[tuple[int, int]],
    colors2: Sequence[Hashable],
) -> bool:
    """Decide whether two colored digraphs are isomorphic.

    A witness bijection must preserve colors, edges and non-edges (in
    both directions).
    """
    if n1 != n2:
        return False
    g1 = _Graph(n1, edges1, colors1)
    g2 = _Graph(n2, edges2, colors2)
    refined = _refine(g1, g2)
    if refined is None:
        return False
    c1, c2 = refined

    by_color: dict[int, list[int]] = {}
    for v in range(n2):
        by_color.setdefault(c2[v], []).append(v)
    # assign rare colors first to fail fast
    order = sorted(range(n1), key=lambda v: (len(by_color.get(c1[v], ())), c1[v], v))

    image = [-1] * n1
    used = [False] * n2
    assigned: list[int] = []

    def consistent(v: int, t: int) -> bool:
        for u in assigned:
            w = image[u]
            if (u in g1.out[v]) != (w in g2.out[t]):
                return False
            if (u in g1.inn[v]) != (w in g2.inn[t]):
                return False
        return True

    def search(k: int) -> bool:
        if k == n1:
            return True
        v = order[k]
        for t in by_color.get(c1[v], ()):
            if not used[t] and consistent(v, t):
                image[v] = t
                used[t] = True
                assigned.append(v)
                if search(k + 1):
                    return True
                assigned.pop()
                image[v] = -1
                used[t] = False
        return False

    return search(0)
