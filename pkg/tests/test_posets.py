"""Bruhat order, intervals, reference posets and poset isomorphism."""
from __future__ import annotations

from itertools import combinations

import pytest

from bip.perms import (
    all_permutations,
    canonical_reduced_word,
    compose,
    from_word,
    identity,
    length,
    simple,
    support,
)
from bip.posets import (
    AbstractPoset,
    boolean_algebra,
    bruhat_leq,
    convolve,
    hasse_dot,
    interval,
    interval_factorization,
    lower_set,
    p3412_poset,
    poset_from_covers,
    poset_isomorphic,
    product,
    rank_polynomial,
    s3_poset,
)


def leq_subword_oracle(u, w):
    """Oracle: u <= w iff a reduced word of u appears as a subword of a
    reduced word of w (one word of w suffices by the subword property)."""
    n = len(w)
    word = canonical_reduced_word(w)
    lu = length(u)
    if lu > len(word):
        return False
    return any(from_word(n, sub) == u for sub in combinations(word, lu))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bruhat_leq_matches_subword_oracle_exhaustive(n):
    for u in all_permutations(n):
        for w in all_permutations(n):
            assert bruhat_leq(u, w) == leq_subword_oracle(u, w)


def test_bruhat_leq_matches_subword_oracle_exhaustive_s5():
    perms5 = list(all_permutations(5))
    for w in perms5:
        for u in perms5:
            assert bruhat_leq(u, w) == leq_subword_oracle(u, w)


def test_bruhat_leq_examples():
    for w in all_permutations(4):
        assert bruhat_leq(identity(4), w)
    assert bruhat_leq((2, 4, 1, 3), (3, 4, 1, 2))
    assert not bruhat_leq((3, 1, 4, 2), (2, 4, 1, 3))
    with pytest.raises(ValueError):
        bruhat_leq((1, 2), (1, 2, 3))


def test_interval_examples():
    box = interval((1, 2, 3), (3, 2, 1))
    assert len(box.elements) == 6
    assert rank_polynomial(box) == (1, 2, 2, 1)

    box = interval((1, 2, 3, 4), (3, 4, 1, 2))
    assert len(box.elements) == 14
    assert rank_polynomial(box) == (1, 3, 5, 4, 1)

    box = interval(identity(3), identity(3))
    assert box.elements == (identity(3),)
    assert rank_polynomial(box) == (1,)

    with pytest.raises(ValueError):
        interval((3, 2, 1), (1, 2, 3))


def test_interval_covers_are_bruhat_covers():
    box = interval((1, 2, 3, 4), (3, 4, 1, 2))
    members = set(box.elements)
    for a, b in box.covers:
        assert length(b) == length(a) + 1
        assert a in members and b in members
        # b = a (i, j) for a transposition swap of two positions
        diff = [i for i in range(4) if a[i] != b[i]]
        assert len(diff) == 2


@pytest.mark.parametrize("n", [3, 4, 5])
def test_atoms_of_lower_interval_are_support(n):
    for w in all_permutations(n):
        box = interval(identity(n), w)
        atoms = {u for u in box.elements if length(u) == 1}
        assert {simple(n, i) for i in support(w)} == atoms


def test_atoms_of_lower_interval_are_support_s6():
    # ranks alone identify the atoms, so covers are not needed at n = 6
    for w in all_permutations(6):
        atoms = {u for u in lower_set(w) if length(u) == 1}
        assert {simple(6, i) for i in support(w)} == atoms


def test_rank_polynomial_references():
    assert rank_polynomial(boolean_algebra(3)) == (1, 3, 3, 1)
    assert rank_polynomial(boolean_algebra(0)) == (1,)
    assert rank_polynomial(s3_poset()) == (1, 2, 2, 1)
    assert rank_polynomial(p3412_poset()) == (1, 3, 5, 4, 1)
    prod = product(s3_poset(), boolean_algebra(1))
    assert rank_polynomial(prod) == (1, 3, 4, 3, 1)
    # product rank polynomial equals the convolution of the factors
    assert rank_polynomial(prod) == convolve(
        rank_polynomial(s3_poset()), rank_polynomial(boolean_algebra(1))
    )


def test_rank_polynomial_rejects_non_graded():
    # chain of length 2 next to a single cover: maximal chains differ
    poset = poset_from_covers(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("a", "d"), ("d", "c")])
    assert rank_polynomial(poset)  # graded diamond is fine
    bad = poset_from_covers(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
    with pytest.raises(ValueError):
        rank_polynomial(bad)


def test_reference_poset_shapes():
    assert len(boolean_algebra(0).elements) == 1
    s3 = s3_poset()
    assert len(s3.elements) == 6
    assert len(s3.atoms()) == 2
    assert len(s3.coatoms()) == 2
    assert len(product(s3, boolean_algebra(1)).elements) == 12


def test_poset_isomorphic_golden():
    assert poset_isomorphic(interval((1, 2, 3, 4), (1, 4, 3, 2)), s3_poset())
    assert poset_isomorphic(interval((1, 2, 3, 4), (3, 2, 1, 4)), s3_poset())
    prism = product(s3_poset(), boolean_algebra(1))
    assert poset_isomorphic(interval((1, 2, 3, 4), (4, 1, 3, 2)), prism)
    assert not poset_isomorphic(interval((1, 2, 3, 4), (3, 4, 1, 2)), prism)
    assert not poset_isomorphic(interval((1, 2, 3, 4), (3, 4, 1, 2)), boolean_algebra(4))


def test_poset_isomorphic_is_symmetric_and_reflexive():
    candidates = [
        boolean_algebra(2),
        s3_poset(),
        p3412_poset(),
        product(s3_poset(), boolean_algebra(1)),
    ]
    for p in candidates:
        assert poset_isomorphic(p, p)
    for p in candidates:
        for q in candidates:
            assert poset_isomorphic(p, q) == poset_isomorphic(q, p)


def test_poset_isomorphic_distinguishes_same_rank_vector():
    # both have rank vector (1, 2, 2, 1) but different covers
    ladder = poset_from_covers(
        ["0", "a", "b", "x", "y", "1"],
        [("0", "a"), ("0", "b"), ("a", "x"), ("b", "y"), ("x", "1"), ("y", "1")],
    )
    assert rank_polynomial(ladder) == (1, 2, 2, 1)
    assert not poset_isomorphic(ladder, s3_poset())


@pytest.mark.parametrize("n", [3, 4, 5])
def test_left_right_multiplication_preserves_order(n):
    # for a, b avoiding s_r: a <= b iff s_r a <= s_r b iff a s_r <= b s_r
    for r in range(1, n):
        sr = simple(n, r)
        avoiding = [w for w in all_permutations(n) if r not in support(w)]
        for a in avoiding:
            for b in avoiding:
                base = bruhat_leq(a, b)
                assert base == bruhat_leq(compose(sr, a), compose(sr, b))
                assert base == bruhat_leq(compose(a, sr), compose(b, sr))
                assert (length(b) - length(a)) == (
                    length(compose(sr, b)) - length(compose(sr, a))
                )


def test_interval_factorization_examples():
    w = from_word(4, (1, 2, 1, 3))
    prod = interval_factorization(
        w, [{1, 2}, {3}], [from_word(4, (1, 2, 1)), from_word(4, (3,))]
    )
    assert len(prod.elements) == 12
    assert sorted(prod.ranks.values()) == [0, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4]

    single = interval_factorization((3, 2, 1, 4), [{1, 2}], [(3, 2, 1, 4)])
    assert poset_isomorphic(single, interval(identity(4), (3, 2, 1, 4)))

    b2 = interval_factorization(
        from_word(4, (1, 3)), [{1}, {3}], [from_word(4, (1,)), from_word(4, (3,))]
    )
    assert poset_isomorphic(b2, boolean_algebra(2))


def test_interval_factorization_errors():
    w = from_word(4, (1, 2, 1, 3))
    with pytest.raises(ValueError):
        interval_factorization(w, [{1, 2}, {2, 3}], [from_word(4, (1, 2, 1)), from_word(4, (3,))])
    with pytest.raises(ValueError):
        interval_factorization(w, [{1, 2}, {3}], [from_word(4, (1, 2, 1)), from_word(4, (3,))][::-1])
    with pytest.raises(ValueError):
        interval_factorization(
            w, [{1, 2}], [from_word(4, (1, 2, 1))]
        )  # product is not w


@pytest.mark.parametrize("n,i", [(3, 1), (4, 1), (4, 2), (5, 3)])
def test_braid_block_intervals_are_reference_posets(n, i):
    # [e, s_i s_{i+1} s_i] looks like S_3 for every i, and
    # [e, s_{i+1} s_i s_{i+2} s_{i+1}] like [e, 3412]
    w = from_word(n, (i, i + 1, i))
    assert poset_isomorphic(interval(identity(n), w), s3_poset())
    if i + 2 <= n - 1:
        w = from_word(n, (i + 1, i, i + 2, i + 1))
        assert poset_isomorphic(interval(identity(n), w), p3412_poset())


def test_lower_set_matches_filter():
    for w in all_permutations(4):
        direct = {u for u in all_permutations(4) if bruhat_leq(u, w)}
        assert lower_set(w) == direct


def test_hasse_dot_output():
    dot = hasse_dot(interval((1, 2, 3), (3, 2, 1)))
    assert dot.startswith("digraph hasse {")
    assert '"123" -> "132";' in dot
    assert '{ rank = same; "231"; "312"; }' in dot
    assert dot == hasse_dot(interval((1, 2, 3), (3, 2, 1)))  # bit-stable
    abstract = hasse_dot(boolean_algebra(1))
    assert '"0" -> "1";' in abstract


def test_abstract_poset_rejects_cycles_and_duplicates():
    with pytest.raises(ValueError):
        AbstractPoset(("a", "a"), ())
    with pytest.raises(ValueError):
        AbstractPoset(("a", "b"), (("a", "b"), ("b", "a")))
