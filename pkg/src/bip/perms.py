"""
Permutations of {1, ..., n} in one-line notation, as plain tuples.

A permutation w is the tuple (w(1), ..., w(n)).  Words in the simple
transpositions s_1, ..., s_{n-1} are tuples of letters, so the word
s_2 s_1 s_3 s_2 is (2, 1, 3, 2).  Products are composed left to right:
the word (i_1, ..., i_l) denotes s_{i_1} ∘ s_{i_2} ∘ ... ∘ s_{i_l},
where (u ∘ v)(i) = u(v(i)).

Multiplying w on the right by the transposition (i, j) swaps the entries
in positions i and j of the one-line notation; multiplying on the left
by (i, j) swaps the values i and j.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Literal, Optional, Sequence

Perm = tuple[int, ...]
Word = tuple[int, ...]

PATTERN_321: Perm = (3, 2, 1)
PATTERN_3412: Perm = (3, 4, 1, 2)
PATTERN_4231: Perm = (4, 2, 3, 1)

FactorKind = Literal["braid-321", "braid-3412"]
KIND_321: FactorKind = "braid-321"
KIND_3412: FactorKind = "braid-3412"


def check_permutation(one_line: Sequence[int]) -> Perm:
    """Validate one-line notation and return it as a tuple.

    >>> check_permutation([3, 4, 1, 2])
    (3, 4, 1, 2)
    """
    w = tuple(one_line)
    n = len(w)
    if n == 0 or sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {w!r}")
    return w


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def all_permutations(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order."""
    return permutations(range(1, n + 1))


def parse_permutation(text: str, n: Optional[int] = None) -> Perm:
    """Parse "3412", "[3,4,1,2]" or "e" (identity; needs n for "e").

    The digit-string form only works for n <= 9; use brackets beyond that.
    """
    text = text.strip()
    if text == "e":
        if n is None:
            raise ValueError('parsing "e" needs the ambient size n')
        return identity(n)
    if text.startswith("["):
        if not text.endswith("]"):
            raise ValueError(f"unbalanced brackets: {text!r}")
        parts = [p for p in text[1:-1].replace(",", " ").split() if p]
        w = check_permutation([int(p) for p in parts])
    elif text.isdigit():
        w = check_permutation([int(c) for c in text])
    else:
        raise ValueError(f"cannot parse permutation: {text!r}")
    if n is not None and len(w) != n:
        raise ValueError(f"expected a permutation of 1..{n}, got {w!r}")
    return w


def format_permutation(w: Perm) -> str:
    if len(w) <= 9:
        return "".join(str(a) for a in w)
    return "[" + ",".join(str(a) for a in w) + "]"


def compose(u: Perm, v: Perm) -> Perm:
    """The product u ∘ v, defined by (u ∘ v)(i) = u(v(i)).

    >>> compose((2, 1, 3), (1, 3, 2))
    (2, 3, 1)
    """
    if len(u) != len(v):
        raise ValueError(f"size mismatch: {len(u)} vs {len(v)}")
    return tuple(u[b - 1] for b in v)


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, a in enumerate(w):
        inv[a - 1] = i + 1
    return tuple(inv)


def simple(n: int, i: int) -> Perm:
    """The simple transposition s_i in S_n."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"s_{i} does not exist in S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def transposition(n: int, i: int, j: int) -> Perm:
    """The transposition (i, j) in S_n."""
    if not 1 <= i < j <= n:
        raise ValueError(f"({i},{j}) is not a transposition of 1..{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return tuple(w)


def apply_transposition(w: Perm, i: int, j: int) -> Perm:
    """w · (i, j): swap the entries in positions i and j (1-based)."""
    u = list(w)
    u[i - 1], u[j - 1] = u[j - 1], u[i - 1]
    return tuple(u)


def from_word(n: int, word: Sequence[int]) -> Perm:
    """The product s_{i_1} ··· s_{i_l} as an element of S_n.

    >>> from_word(5, (1, 2, 3, 4, 3))
    (2, 3, 5, 4, 1)
    """
    w = list(range(1, n + 1))
    for i in word:
        if not 1 <= i <= n - 1:
            raise ValueError(f"letter {i} out of range for S_{n}")
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


@lru_cache(maxsize=None)
def length(w: Perm) -> int:
    """Number of inversions of w; equals the minimal word length.

    >>> length((3, 5, 4, 1, 2))
    7
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def right_descents(w: Perm) -> list[int]:
    """Letters i with w(i) > w(i+1), i.e. length(w s_i) = length(w) - 1."""
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def left_descents(w: Perm) -> list[int]:
    return right_descents(inverse(w))


def support(w: Perm) -> frozenset[int]:
    """The set of letters appearing in any reduced word of w.

    Equivalently {i : s_i <= w}, the atoms of the interval [e, w]; the
    letter i occurs exactly when the prefix {w(1), ..., w(i)} differs
    from {1, ..., i}.

    >>> sorted(support((4, 1, 3, 2)))
    [1, 2, 3]
    """
    top = 0
    out = []
    for i, a in enumerate(w[:-1], start=1):
        top = max(top, a)
        # the prefix is {1, ..., i} exactly when its maximum is i
        if top != i:
            out.append(i)
    return frozenset(out)


def complexity(w: Perm) -> int:
    """length(w) - |support(w)|: the number of repeated letters in a
    reduced word of w.

    >>> complexity((4, 1, 3, 2))
    1
    """
    return length(w) - len(support(w))


def _order_isomorphic(values: Sequence[int], p: Perm) -> bool:
    return all(
        (values[a] < values[b]) == (p[a] < p[b])
        for a in range(len(p))
        for b in range(a + 1, len(p))
    )


def count_pattern(w: Perm, p: Perm) -> int:
    """Number of subsequences of w in the same relative order as p.

    >>> count_pattern((4, 2, 3, 1), (3, 2, 1))
    2
    """
    if len(p) > len(w):
        return 0
    return sum(
        1 for idx in combinations(range(len(w)), len(p))
        if _order_isomorphic([w[i] for i in idx], p)
    )


@dataclass(frozen=True)
class PatternCount:
    """Counts of 321 and 3412 occurrences and their total."""

    count_321: int
    count_3412: int

    @property
    def combined(self) -> int:
        return self.count_321 + self.count_3412


def pattern_profile(w: Perm) -> PatternCount:
    return PatternCount(count_pattern(w, PATTERN_321), count_pattern(w, PATTERN_3412))


def is_smooth(w: Perm) -> bool:
    """Pattern test: w avoids both 3412 and 4231."""
    return count_pattern(w, PATTERN_3412) == 0 and count_pattern(w, PATTERN_4231) == 0


@lru_cache(maxsize=None)
def reduced_words(w: Perm) -> tuple[Word, ...]:
    """All reduced words of w, sorted lexicographically.

    Recurses on right descents: every reduced word of w ends in a right
    descent i and extends a reduced word of w s_i.

    >>> reduced_words((3, 2, 1))
    ((1, 2, 1), (2, 1, 2))
    """
    descents = right_descents(w)
    if not descents:
        return ((),)
    words = set()
    for i in descents:
        shorter = apply_transposition(w, i, i + 1)
        for word in reduced_words(shorter):
            words.add(word + (i,))
    return tuple(sorted(words))


def canonical_reduced_word(w: Perm) -> Word:
    """The lexicographically least reduced word, built greedily from
    the smallest left descent."""
    v = w
    word = []
    pos = inverse(v)
    while True:
        for i in range(1, len(w)):
            if pos[i - 1] > pos[i]:
                word.append(i)
                v = compose(simple(len(w), i), v)
                pos = inverse(v)
                break
        else:
            return tuple(word)


def word_is_reduced(n: int, word: Sequence[int]) -> bool:
    return length(from_word(n, word)) == len(word)


def parse_word(text: str) -> Word:
    """Parse a word like "s2 s1 s3 s2" or "2 1 3 2"."""
    parts = [p for p in text.replace(",", " ").split() if p]
    letters = []
    for p in parts:
        if p.startswith("s"):
            p = p[1:]
        if not p.isdigit() or int(p) < 1:
            raise ValueError(f"cannot parse word letter: {p!r}")
        letters.append(int(p))
    return tuple(letters)


def format_word(word: Word) -> str:
    if not word:
        return "e"
    return " ".join(f"s{i}" for i in word)


@dataclass(frozen=True)
class FactorWitness:
    """A reduced word carrying the designated braid factor.

    position is the 1-based index of the factor's first letter;
    base_index is the i of the factor s_i s_{i+1} s_i, respectively
    s_{i+1} s_i s_{i+2} s_{i+1}.
    """

    word: Word
    position: int
    base_index: int
    kind: FactorKind


def _has_single_repetition(word: Word, repeated: int) -> bool:
    counts = Counter(word)
    return counts[repeated] == 2 and all(
        c == 1 for letter, c in counts.items() if letter != repeated
    )


def find_single_repetition_factor(w: Perm, kind: FactorKind) -> Optional[FactorWitness]:
    """Search the reduced words of w for one whose letters are all
    distinct except for the consecutive factor s_i s_{i+1} s_i
    (kind "braid-321") or s_{i+1} s_i s_{i+2} s_{i+1} ("braid-3412").

    Returns the lexicographically least such word with the leftmost
    factor position, or None.  Only permutations of complexity one can
    qualify: every reduced word of w repeats exactly complexity(w)
    letters, so any other complexity is rejected without enumeration.
    """
    if kind not in (KIND_321, KIND_3412):
        raise ValueError(f"unknown factor kind: {kind!r}")
    if complexity(w) != 1:
        return None
    size = 3 if kind == KIND_321 else 4
    for word in reduced_words(w):
        for pos in range(len(word) - size + 1):
            seg = word[pos:pos + size]
            if kind == KIND_321:
                i = seg[0]
                ok = seg == (i, i + 1, i)
            else:
                i = seg[1]
                ok = seg == (i + 1, i, i + 2, i + 1)
            if ok and _has_single_repetition(word, seg[0] if kind == KIND_321 else i + 1):
                return FactorWitness(word, pos + 1, i, kind)
    return None
