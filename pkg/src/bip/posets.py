"""
Bruhat order on the symmetric group: comparisons, intervals, Hasse
diagrams, rank polynomials, reference posets and poset isomorphism.

Bruhat comparison uses the prefix dominance criterion: u <= w iff for
every i the increasingly sorted {u(1), ..., u(i)} is entrywise <= the
sorted {w(1), ..., w(i)}.  Intervals are built by closing the top
element downwards along covers, so no global sweep of S_n is needed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Hashable, Iterable, Sequence, Union

from . import isomorph
from .perms import (
    Perm,
    apply_transposition,
    check_permutation,
    compose,
    format_permutation,
    identity,
    length,
    support,
)


@lru_cache(maxsize=None)
def bruhat_leq(u: Perm, w: Perm) -> bool:
    """Prefix dominance test for u <= w in Bruhat order.

    >>> bruhat_leq((2, 4, 1, 3), (3, 4, 1, 2))
    True
    """
    if len(u) != len(w):
        raise ValueError(f"size mismatch: {len(u)} vs {len(w)}")
    if length(u) > length(w):
        return False
    pu: list[int] = []
    pw: list[int] = []
    for a, b in zip(u[:-1], w[:-1]):
        _insort(pu, a)
        _insort(pw, b)
        for x, y in zip(pu, pw):
            if x > y:
                return False
    return True


def _insort(values: list[int], a: int) -> None:
    lo = 0
    hi = len(values)
    while lo < hi:
        mid = (lo + hi) // 2
        if values[mid] < a:
            lo = mid + 1
        else:
            hi = mid
    values.insert(lo, a)


@lru_cache(maxsize=None)
def lower_set(w: Perm) -> frozenset[Perm]:
    """All u <= w, found by closing {w} downwards along covers."""
    n = len(w)
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for u in frontier:
            lu = length(u)
            for i, j in combinations(range(1, n + 1), 2):
                b = apply_transposition(u, i, j)
                if length(b) == lu - 1 and b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return frozenset(seen)


@dataclass(frozen=True)
class AbstractPoset:
    """A finite poset given by its elements and cover relation.

    Ranks are the longest-chain heights from the minimal elements; the
    poset is graded when every cover raises the rank by exactly one.
    """

    elements: tuple[Hashable, ...]
    covers: tuple[tuple[Hashable, Hashable], ...]
    ranks: dict = field(init=False, compare=False, repr=False)
    graded: bool = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        index = {x: i for i, x in enumerate(self.elements)}
        if len(index) != len(self.elements):
            raise ValueError("duplicate poset elements")
        up: list[list[int]] = [[] for _ in self.elements]
        down: list[list[int]] = [[] for _ in self.elements]
        for a, b in self.covers:
            up[index[a]].append(index[b])
            down[index[b]].append(index[a])
        # longest-path ranks via repeated relaxation (posets here are tiny)
        rank = [0] * len(self.elements)
        changed = True
        steps = 0
        while changed:
            changed = False
            steps += 1
            if steps > len(self.elements) + 1:
                raise ValueError("cover relation contains a cycle")
            for b in range(len(self.elements)):
                for a in down[b]:
                    if rank[a] + 1 > rank[b]:
                        rank[b] = rank[a] + 1
                        changed = True
        graded = all(rank[index[b]] == rank[index[a]] + 1 for a, b in self.covers)
        object.__setattr__(self, "ranks", {x: rank[index[x]] for x in self.elements})
        object.__setattr__(self, "graded", graded)

    def rank(self, x: Hashable) -> int:
        return self.ranks[x]

    def atoms(self) -> tuple[Hashable, ...]:
        return tuple(x for x in self.elements if self.ranks[x] == 1)

    def coatoms(self) -> tuple[Hashable, ...]:
        top = max(self.ranks.values(), default=0)
        return tuple(x for x in self.elements if self.ranks[x] == top - 1)


def poset_from_covers(
    elements: Iterable[Hashable], covers: Iterable[tuple[Hashable, Hashable]]
) -> AbstractPoset:
    return AbstractPoset(tuple(elements), tuple(covers))


@dataclass(frozen=True)
class BruhatInterval:
    """The interval [v, w] with its Hasse covers.

    Element ranks are length(u) - length(v); covers are the Bruhat
    covers b = a·(i,j) with length(b) = length(a) + 1 inside the
    interval.
    """

    v: Perm
    w: Perm
    elements: tuple[Perm, ...]
    covers: tuple[tuple[Perm, Perm], ...]

    @property
    def n(self) -> int:
        return len(self.v)

    def rank(self, u: Perm) -> int:
        return length(u) - length(self.v)

    def poset(self) -> AbstractPoset:
        return AbstractPoset(self.elements, self.covers)


@lru_cache(maxsize=None)
def interval(v: Perm, w: Perm) -> BruhatInterval:
    """Construct [v, w]; raises if v is not below w.

    >>> len(interval((1, 2, 3, 4), (3, 4, 1, 2)).elements)
    14
    """
    v = check_permutation(v)
    w = check_permutation(w)
    if not bruhat_leq(v, w):
        raise ValueError(
            f"{format_permutation(v)} is not <= {format_permutation(w)} in Bruhat order"
        )
    n = len(w)
    if v == identity(n):
        members = lower_set(w)
    else:
        members = frozenset(u for u in lower_set(w) if bruhat_leq(v, u))
    elements = tuple(sorted(members, key=lambda u: (length(u), u)))
    covers = []
    for a in elements:
        la = length(a)
        for i, j in combinations(range(1, n + 1), 2):
            b = apply_transposition(a, i, j)
            if length(b) == la + 1 and b in members:
                covers.append((a, b))
    return BruhatInterval(v, w, elements, tuple(sorted(covers)))


Poset = Union[AbstractPoset, BruhatInterval]


def _as_poset(p: Poset) -> AbstractPoset:
    return p.poset() if isinstance(p, BruhatInterval) else p


def rank_polynomial(p: Poset) -> tuple[int, ...]:
    """Coefficients (f_0, ..., f_top): number of elements of each rank.

    >>> rank_polynomial(boolean_algebra(3))
    (1, 3, 3, 1)
    """
    ap = _as_poset(p)
    if not ap.graded:
        raise ValueError("poset is not graded")
    top = max(ap.ranks.values(), default=0)
    counts = [0] * (top + 1)
    for x in ap.elements:
        counts[ap.ranks[x]] += 1
    return tuple(counts)


def convolve(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def boolean_algebra(k: int) -> AbstractPoset:
    """The subset lattice of {1, ..., k}, elements encoded as bitmasks."""
    if k < 0:
        raise ValueError("rank must be >= 0")
    elements = tuple(range(1 << k))
    covers = tuple(
        (s, s | (1 << b))
        for s in elements
        for b in range(k)
        if not s & (1 << b)
    )
    return AbstractPoset(elements, covers)


def s3_poset() -> AbstractPoset:
    """Bruhat order on S_3."""
    return interval((1, 2, 3), (3, 2, 1)).poset()


def p3412_poset() -> AbstractPoset:
    """The 14-element interval below 3412."""
    return interval((1, 2, 3, 4), (3, 4, 1, 2)).poset()


def product(p: Poset, q: Poset) -> AbstractPoset:
    """Componentwise order on pairs; covers change one coordinate."""
    ap = _as_poset(p)
    aq = _as_poset(q)
    elements = tuple((x, y) for x in ap.elements for y in aq.elements)
    covers = []
    for a, b in ap.covers:
        for y in aq.elements:
            covers.append(((a, y), (b, y)))
    for x in ap.elements:
        for a, b in aq.covers:
            covers.append(((x, a), (x, b)))
    return AbstractPoset(elements, tuple(covers))


def poset_isomorphic(p: Poset, q: Poset) -> bool:
    """Rank-preserving order isomorphism, by refinement plus backtracking
    over the Hasse diagrams.

    >>> poset_isomorphic(interval((1,2,3,4), (1,4,3,2)), s3_poset())
    True
    """
    ap = _as_poset(p)
    aq = _as_poset(q)
    if len(ap.elements) != len(aq.elements) or len(ap.covers) != len(aq.covers):
        return False
    if sorted(ap.ranks.values()) != sorted(aq.ranks.values()):
        return False

    def graph(a: AbstractPoset):
        index = {x: i for i, x in enumerate(a.elements)}
        edges = [(index[s], index[t]) for s, t in a.covers]
        up = [0] * len(a.elements)
        down = [0] * len(a.elements)
        for s, t in edges:
            up[s] += 1
            down[t] += 1
        colors = [
            (a.ranks[x], up[index[x]], down[index[x]]) for x in a.elements
        ]
        return edges, colors

    e1, c1 = graph(ap)
    e2, c2 = graph(aq)
    return isomorph.digraph_isomorphic(
        len(ap.elements), e1, c1, len(aq.elements), e2, c2
    )


def interval_factorization(
    w: Perm, index_sets: Sequence[Iterable[int]], factors: Sequence[Perm]
) -> AbstractPoset:
    """Product poset [e,w_1] x ... x [e,w_r] for a factorization
    w = w_1 ··· w_r with each w_k supported in the pairwise disjoint
    index set I_k.  Verifies the product poset is isomorphic to [e,w].
    """
    n = len(w)
    sets = [frozenset(s) for s in index_sets]
    if len(sets) != len(factors):
        raise ValueError("index sets and factors differ in number")
    for a, b in combinations(range(len(sets)), 2):
        if sets[a] & sets[b]:
            raise ValueError(f"index sets {sorted(sets[a])} and {sorted(sets[b])} overlap")
    prod = identity(n)
    for k, (s, wk) in enumerate(zip(sets, factors), start=1):
        if not support(wk) <= s:
            raise ValueError(f"factor {k} is not supported in {sorted(s)}")
        prod = compose(prod, wk)
    if prod != w:
        raise ValueError(
            f"factors multiply to {format_permutation(prod)}, not {format_permutation(w)}"
        )
    # the empty factorization (w = e) yields the one-element poset
    result = interval(identity(n), identity(n)).poset()
    for k, wk in enumerate(factors):
        piece = interval(identity(n), wk).poset()
        result = piece if k == 0 else product(result, piece)
    if not poset_isomorphic(result, interval(identity(n), w)):
        raise ValueError("product of factor intervals is not isomorphic to [e, w]")
    return result


def hasse_dot(p: Poset, name: str = "hasse", label: Callable[[Hashable], str] | None = None) -> str:
    """Hasse diagram in DOT format with one rank per layer.

    Permutation labels render in one-line notation; anything else via
    str().  Output is deterministic: elements and edges are sorted.
    """
    ap = _as_poset(p)
    if label is None:
        def label(x: Hashable) -> str:
            if isinstance(x, tuple) and x and all(isinstance(a, int) for a in x):
                try:
                    return format_permutation(check_permutation(x))
                except ValueError:
                    return str(x)
            return str(x)
    names = {x: label(x) for x in ap.elements}
    if len(set(names.values())) != len(names):
        names = {x: f"{label(x)}#{i}" for i, x in enumerate(ap.elements)}
    lines = [f"digraph {name} {{", "  rankdir = BT;", "  node [shape = box];"]
    top = max(ap.ranks.values(), default=0)
    for r in range(top + 1):
        layer = sorted(names[x] for x in ap.elements if ap.ranks[x] == r)
        if layer:
            quoted = " ".join(f'"{s}";' for s in layer)
            lines.append(f"  {{ rank = same; {quoted} }}")
    for a, b in sorted(ap.covers, key=lambda e: (names[e[0]], names[e[1]])):
        lines.append(f'  "{names[a]}" -> "{names[b]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
