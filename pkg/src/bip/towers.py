"""
Integer tower data distilled from reduced words.

A reduced word s_{i_1} ··· s_{i_l} determines a strictly upper
triangular matrix a_{j,k} = <e_{i_j} - e_{i_j+1}, e_{i_k} - e_{i_k+1}>
(entries 2, -1 or 0 according to whether the letters are equal,
adjacent or far apart).  A complexity-one permutation factors through a
sequence of disjoint index sets, singletons except for one block
{i, i+1} (one repeated braid factor s_i s_{i+1} s_i) or {i, i+1, i+2}
(one factor s_{i+1} s_i s_{i+2} s_{i+1}); those interval sequences feed
the fiberwise integer vectors and, in the smooth case, an explicit
presentation of the cohomology ring with integer coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .perms import (
    KIND_321,
    KIND_3412,
    Perm,
    Word,
    check_permutation,
    complexity,
    find_single_repetition_factor,
    format_permutation,
    from_word,
    is_smooth,
    length,
)
from .polynomials import Polynomial, complete_homogeneous
from .posets import interval_factorization


def _inner(a: int, b: int, c: int, d: int) -> int:
    """<e_a - e_b, e_c - e_d> for standard basis vectors."""
    return (a == c) - (a == d) - (b == c) + (b == d)


@dataclass(frozen=True)
class BottMatrix:
    """Strictly upper triangular integer matrix indexed from 1."""

    size: int
    rows: tuple[tuple[int, ...], ...]

    def entry(self, j: int, k: int) -> int:
        if not 1 <= j < k <= self.size:
            raise ValueError(f"entry ({j},{k}) is not above the diagonal")
        return self.rows[j - 1][k - 1]


def bott_matrix(word: Sequence[int]) -> BottMatrix:
    """Matrix of a reduced word via the inner-product rule.

    >>> bott_matrix((1, 2, 1)).rows
    ((0, -1, 2), (0, 0, -1), (0, 0, 0))
    """
    word = tuple(word)
    n = max(word, default=1) + 1
    if length(from_word(n, word)) != len(word):
        raise ValueError(f"word {word} is not reduced")
    size = len(word)
    rows = tuple(
        tuple(
            _inner(word[j], word[j] + 1, word[k], word[k] + 1) if j < k else 0
            for k in range(size)
        )
        for j in range(size)
    )
    return BottMatrix(size, rows)


@dataclass(frozen=True)
class IntervalSequence:
    """Disjoint index sets I_1, ..., I_r with one designated block.

    kind is "smooth" (block {i, i+1}, word s_i s_{i+1} s_i) or
    "singular" (block {i, i+1, i+2}, word s_{i+1} s_i s_{i+2} s_{i+1});
    every other set is the singleton of its letter.
    """

    n: int
    sets: tuple[tuple[int, ...], ...]
    block_position: int
    kind: str
    factor_words: tuple[Word, ...]

    @property
    def block_word(self) -> Word:
        return self.factor_words[self.block_position - 1]

    def factor_permutations(self) -> tuple[Perm, ...]:
        return tuple(from_word(self.n, word) for word in self.factor_words)


def interval_sequence(w: Perm) -> IntervalSequence:
    """Split a complexity-one w into disjoint supported factors.

    The lexicographically least reduced word containing the braid
    factor is used; the factor becomes the block set and every other
    letter its own singleton.  The factorization is verified through
    the product of the factor intervals.
    """
    w = check_permutation(w)
    if complexity(w) != 1:
        raise ValueError(
            f"{format_permutation(w)} has complexity {complexity(w)}, not 1"
        )
    witness = find_single_repetition_factor(w, KIND_321)
    kind = "smooth"
    if witness is None:
        witness = find_single_repetition_factor(w, KIND_3412)
        kind = "singular"
    if witness is None:
        raise AssertionError("complexity-one word without a braid factor")
    word = witness.word
    q = witness.position
    i = witness.base_index
    skip = 3 if kind == "smooth" else 4
    sets: list[tuple[int, ...]] = []
    words: list[Word] = []
    for letter in word[: q - 1]:
        sets.append((letter,))
        words.append((letter,))
    if kind == "smooth":
        sets.append((i, i + 1))
        words.append((i, i + 1, i))
    else:
        sets.append((i, i + 1, i + 2))
        words.append((i + 1, i, i + 2, i + 1))
    for letter in word[q - 1 + skip:]:
        sets.append((letter,))
        words.append((letter,))
    seq = IntervalSequence(len(w), tuple(sets), q, kind, tuple(words))
    interval_factorization(w, seq.sets, seq.factor_permutations())
    return seq


@dataclass(frozen=True)
class FlagTowerData:
    """Fiber sizes n_1, ..., n_r and the integer vectors a_{j,k}^{(m)}.

    vectors maps (j, k, m) with 1 <= j < k <= r, 1 <= m <= n_k to a
    tuple of n_j integers.
    """

    fiber_sizes: tuple[int, ...]
    vectors: dict

    def vector(self, j: int, k: int, m: int) -> tuple[int, ...]:
        return self.vectors[(j, k, m)]


def flag_tower_vectors(seq: IntervalSequence) -> FlagTowerData:
    """Integer vectors of the iterated flag bundle for an interval
    sequence whose sets are integer intervals.

    >>> seq = interval_sequence(from_word(5, (1, 2, 3, 4, 3)))
    >>> flag_tower_vectors(seq).vector(2, 3, 1)
    (-1,)
    """
    us = []
    for s in seq.sets:
        s = tuple(sorted(s))
        if any(b - a != 1 for a, b in zip(s, s[1:])):
            raise ValueError(f"index set {s} is not an integer interval")
        us.append(s + (s[-1] + 1,))
    sizes = tuple(len(s) for s in seq.sets)
    vectors = {}
    r = len(sizes)
    for k in range(1, r + 1):
        for j in range(1, k):
            for m in range(1, sizes[k - 1] + 1):
                uj = us[j - 1]
                uk = us[k - 1]
                vec = tuple(
                    _inner(uj[p], uj[-1], uk[m - 1], uk[-1])
                    for p in range(len(uj) - 1)
                )
                vectors[(j, k, m)] = vec
    return FlagTowerData(sizes, vectors)


@dataclass(frozen=True)
class CohomologyPresentation:
    """Ideal generators of a cohomology presentation.

    Raw generators live in the variables y_{j,m} (1 <= m <= n_j + 1);
    the normalized form eliminates each y_{j,n_j+1} through the linear
    relations and renames the survivors y_1, y_2, ....  Presentations
    coming from a partition carry x-variables and no normalized form.
    """

    variables: tuple[str, ...]
    generators: tuple[Polynomial, ...]
    normalized_variables: Optional[tuple[str, ...]] = None
    normalized_generators: Optional[tuple[Polynomial, ...]] = None


def cohomology_presentation(w: Perm) -> CohomologyPresentation:
    """Integer cohomology presentation of a smooth complexity-one w.

    One generator per tower stage k:
    prod_m (1 - y_{k,m}) - prod_m (1 - sum_j a_{j,k}^{(m)} · y_j)
    expanded over the integers, plus the normalization pass.
    """
    w = check_permutation(w)
    if complexity(w) != 1 or not is_smooth(w):
        raise ValueError(
            f"{format_permutation(w)} is not a smooth complexity-one permutation"
        )
    seq = interval_sequence(w)
    data = flag_tower_vectors(seq)
    sizes = data.fiber_sizes
    r = len(sizes)

    slots = [(j, m) for j in range(1, r + 1) for m in range(1, sizes[j - 1] + 2)]
    index = {jm: t for t, jm in enumerate(slots)}
    nv = len(slots)
    names = tuple(f"y_{{{j},{m}}}" for j, m in slots)

    def var(j: int, m: int) -> Polynomial:
        return Polynomial.variable(index[(j, m)], nv)

    one = Polynomial.constant(1, nv)
    generators = []
    linears: list[list[Polynomial]] = []
    for k in range(1, r + 1):
        lhs = one
        for m in range(1, sizes[k - 1] + 2):
            lhs = lhs * (one - var(k, m))
        rhs = one
        row = []
        for m in range(1, sizes[k - 1] + 1):
            lin = Polynomial.zero(nv)
            for j in range(1, k):
                vec = data.vector(j, k, m)
                for p, coeff in enumerate(vec, start=1):
                    if coeff:
                        lin = lin + coeff * var(j, p)
            row.append(lin)
            rhs = rhs * (one - lin)
        linears.append(row)
        generators.append(lhs - rhs)

    # normalization: y_{k, n_k+1} = -(y_{k,1} + ... + y_{k,n_k}) + sum of
    # the linear bundle classes, which involves surviving variables only
    kept = [(j, m) for j, m in slots if m <= sizes[j - 1]]
    kept_index = {jm: t for t, jm in enumerate(kept)}
    small = len(kept)
    norm_names = tuple(f"y{t + 1}" for t in range(small))
    images: list[Polynomial] = []
    for j, m in slots:
        if m <= sizes[j - 1]:
            images.append(Polynomial.variable(kept_index[(j, m)], small))
        else:
            expr = Polynomial.zero(small)
            for mm in range(1, sizes[j - 1] + 1):
                expr = expr - Polynomial.variable(kept_index[(j, mm)], small)
            for lin in linears[j - 1]:
                expr = expr + lin.substitute(_partial_images(slots, kept_index, small))
            images.append(expr)

    full_images = images
    normalized = []
    for gen in generators:
        reduced = gen.substitute(full_images)
        parts = reduced.homogeneous_components()
        if any(d <= 1 and not p.is_zero() for d, p in parts.items()):
            raise AssertionError("linear part survived normalization")
        for d in sorted(parts):
            if d >= 2:
                normalized.append(parts[d].sign_normalized())
    return CohomologyPresentation(names, tuple(generators), norm_names, tuple(normalized))


def _partial_images(slots, kept_index, small) -> list[Polynomial]:
    """Images for substituting linear classes: kept variables map to
    themselves, eliminated ones never occur in bundle classes."""
    out = []
    for j, m in slots:
        if (j, m) in kept_index:
            out.append(Polynomial.variable(kept_index[(j, m)], small))
        else:
            out.append(Polynomial.zero(small))
    return out


def partition_permutation(shape: Sequence[int]) -> Perm:
    """Greedy permutation of a weakly increasing shape:
    w(i) = max({1, ..., shape_i} minus earlier values).

    >>> partition_permutation((2, 3, 5, 5, 5))
    (2, 3, 5, 4, 1)
    """
    n = len(shape)
    if any(a > b for a, b in zip(shape, shape[1:])):
        raise ValueError("shape must be weakly increasing")
    if shape and (shape[0] < 0 or shape[-1] > n):
        raise ValueError(f"shape entries must lie in 0..{n}")
    used: set[int] = set()
    out = []
    for i, bound in enumerate(shape, start=1):
        candidates = [a for a in range(1, bound + 1) if a not in used]
        if not candidates:
            raise ValueError(f"rule undefined at position {i}: no value available")
        a = max(candidates)
        used.add(a)
        out.append(a)
    return check_permutation(out)


def partition_presentation(shape: Sequence[int]) -> tuple[Perm, CohomologyPresentation]:
    """Permutation of a shape plus the symmetric-function presentation
    with generators h_{shape_i - i + 1}(x_1, ..., x_i)."""
    w = partition_permutation(shape)
    n = len(shape)
    names = tuple(f"x{i}" for i in range(1, n + 1))
    gens = tuple(
        complete_homogeneous(bound - i + 1, i, n)
        for i, bound in enumerate(shape, start=1)
    )
    return w, CohomologyPresentation(names, gens)


def tower_json(seq: IntervalSequence, data: FlagTowerData) -> dict:
    return {
        "n": seq.n,
        "sets": [list(s) for s in seq.sets],
        "block_position": seq.block_position,
        "kind": seq.kind,
        "factor_words": [list(word) for word in seq.factor_words],
        "fiber_sizes": list(data.fiber_sizes),
        "vectors": {
            f"{j},{k},{m}": list(vec) for (j, k, m), vec in sorted(data.vectors.items())
        },
    }


def tower_from_json(payload: dict) -> tuple[IntervalSequence, FlagTowerData]:
    seq = IntervalSequence(
        payload["n"],
        tuple(tuple(s) for s in payload["sets"]),
        payload["block_position"],
        payload["kind"],
        tuple(tuple(word) for word in payload["factor_words"]),
    )
    vectors = {
        tuple(int(part) for part in key.split(",")): tuple(vec)
        for key, vec in payload["vectors"].items()
    }
    return seq, FlagTowerData(tuple(payload["fiber_sizes"]), vectors)


def cohomology_json(pres: CohomologyPresentation) -> dict:
    from .polynomials import polynomial_json

    return {
        "variables": list(pres.variables),
        "generators": [polynomial_json(g) for g in pres.generators],
        "normalized_variables": (
            list(pres.normalized_variables) if pres.normalized_variables else None
        ),
        "normalized_generators": (
            [polynomial_json(g) for g in pres.normalized_generators]
            if pres.normalized_generators
            else None
        ),
    }


def cohomology_from_json(payload: dict) -> CohomologyPresentation:
    from .polynomials import polynomial_from_json

    return CohomologyPresentation(
        tuple(payload["variables"]),
        tuple(polynomial_from_json(g) for g in payload["generators"]),
        tuple(payload["normalized_variables"]) if payload["normalized_variables"] else None,
        (
            tuple(polynomial_from_json(g) for g in payload["normalized_generators"])
            if payload["normalized_generators"]
            else None
        ),
    )


def _default_substitution() -> tuple[Polynomial, ...]:
    x = [Polynomial.variable(i, 4) for i in range(4)]
    return (-x[0], x[0] + x[1], x[2], x[3])


def verify_substitution_identity(
    substitution: Optional[Sequence[Polynomial]] = None,
) -> bool:
    """Check the printed polynomial identities tying the two
    presentations of the cohomology of X_{23541}.

    The flag-tower generators in y_1, ..., y_4 map under
    y1 -> -x1, y2 -> x1+x2, y3 -> x3, y4 -> x4 onto explicit
    combinations of the symmetric-function generators; all identities
    are checked by exact polynomial arithmetic.  Passing a different
    substitution (e.g. with one coefficient perturbed) makes the check
    fail, which the tests use as a negative control.
    """
    w = from_word(5, (1, 2, 3, 4, 3))
    pres = cohomology_presentation(w)
    assert pres.normalized_generators is not None
    if len(pres.normalized_generators) != 4:
        return False
    g1, g2, g3, g4 = pres.normalized_generators
    images = tuple(substitution) if substitution is not None else _default_substitution()
    if len(images) != 4 or any(p.nvars != 4 for p in images):
        raise ValueError("substitution must give four polynomials in x1..x4")

    x = [Polynomial.variable(i, 4) for i in range(4)]
    j1 = x[0] * x[0]
    j2 = (x[0] + x[1]) * x[1]
    j3 = (x[0] + x[1] + x[2]) * x[2] * x[2]
    j4 = (x[0] + x[1] + x[2]) * x[2] + (x[0] + x[1] + x[2] + x[3]) * x[3]

    checks = [
        g1.substitute(images) == j1,
        g2.substitute(images) == j2,
        g3.substitute(images) == j4,
        g4.substitute(images) == x[2] * j4 - j3,
    ]

    # the same generators expressed through complete homogeneous sums
    shape = (2, 3, 5, 5, 5)
    wp, hpres = partition_presentation(shape)
    checks.append(wp == w)
    h = hpres.generators  # h_2(1), h_2(2), h_3(3), h_2(4), h_1(5) in x1..x5
    lift = [Polynomial.variable(i, 5) for i in range(4)]
    j1_5, j2_5, j3_5, j4_5 = (p.substitute(lift) for p in (j1, j2, j3, j4))
    x5 = [Polynomial.variable(i, 5) for i in range(5)]
    checks.append(h[0] == j1_5)
    checks.append(h[1] - h[0] == j2_5)
    checks.append(h[3] - h[1] == j4_5)
    checks.append(
        h[2] == (x5[0] + x5[1] + x5[2]) * j1_5 + (x5[1] + x5[2]) * j2_5 + j3_5
    )
    return all(checks)
