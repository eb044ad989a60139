"""
Per-permutation classification and exhaustive verification sweeps.

classify() computes every characterization of a permutation through an
independent module path (patterns, reduced words, posets, polytopes,
towers) and cross-checks them against the classification table:
complexity zero is the Boolean/cube case, complexity one splits into
the smooth (hexagon) and singular (Q_{e,3412}) cases.  The sweeps
rerun those equivalences over whole symmetric groups and report the
lexicographically least counterexample first.
"""
from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from . import facegraph, geometry, perms, posets, towers
from .perms import (
    KIND_321,
    KIND_3412,
    FactorWitness,
    PatternCount,
    Perm,
    all_permutations,
    canonical_reduced_word,
    complexity,
    format_permutation,
    identity,
    inverse,
    is_smooth,
    length,
    pattern_profile,
    simple,
    support,
)

POSET_NONE = "none"
POSET_BOOLEAN = "boolean"
POSET_S3 = "s3-product"
POSET_3412 = "p3412-product"
POLYTOPE_NONE = "none"
POLYTOPE_CUBE = "cube"
POLYTOPE_HEX = "hexagon-prism"
POLYTOPE_3412 = "p3412-prism"

S3_RANKS = (1, 2, 2, 1)
P3412_RANKS = (1, 3, 5, 4, 1)


def _interval_rank_poly(w: Perm) -> tuple[int, ...]:
    counts = [0] * (length(w) + 1)
    for u in posets.lower_set(w):
        counts[length(u)] += 1
    return tuple(counts)


def _reference_rank_poly(base: Sequence[int], cube_rank: int) -> tuple[int, ...]:
    out = tuple(base)
    for _ in range(cube_rank):
        out = posets.convolve(out, (1, 1))
    return out


def poset_verdict(w: Perm) -> str:
    """Which reference poset [e, w] matches.

    Rank polynomials prune first, so the reference posets (exponential
    in the length) are only built for genuine candidates.
    """
    n = len(w)
    ell = length(w)
    box = None

    def matches(
        base: Sequence[int], cube_rank: int, reference: Callable[[], posets.AbstractPoset]
    ) -> bool:
        nonlocal box
        if cube_rank < 0:
            return False
        if _interval_rank_poly(w) != _reference_rank_poly(base, cube_rank):
            return False
        if box is None:
            box = posets.interval(identity(n), w)
        return posets.poset_isomorphic(box, reference())

    if matches((1,), ell, lambda: posets.boolean_algebra(ell)):
        return POSET_BOOLEAN
    if ell >= 3 and matches(
        S3_RANKS,
        ell - 3,
        lambda: posets.product(posets.s3_poset(), posets.boolean_algebra(ell - 3)),
    ):
        return POSET_S3
    if ell >= 4 and matches(
        P3412_RANKS,
        ell - 4,
        lambda: posets.product(posets.p3412_poset(), posets.boolean_algebra(ell - 4)),
    ):
        return POSET_3412
    return POSET_NONE


def polytope_verdict(w: Perm) -> str:
    """Which reference polytope Q_{e, w} matches combinatorially."""
    n = len(w)
    ell = length(w)
    q = geometry.bruhat_interval_polytope(identity(n), w)

    if q.dim == ell and len(q.vertices) == 2 ** ell:
        if geometry.combinatorially_equivalent(q, geometry.cube(ell)):
            return POLYTOPE_CUBE
    if ell >= 3 and q.dim == ell - 1 and len(q.vertices) == 6 * 2 ** (ell - 3):
        ref = geometry.product_polytope(geometry.hexagon(), geometry.cube(ell - 3))
        if geometry.combinatorially_equivalent(q, ref):
            return POLYTOPE_HEX
    if ell >= 4 and q.dim == ell - 1 and len(q.vertices) == 14 * 2 ** (ell - 4):
        base = geometry.bruhat_interval_polytope(identity(4), (3, 4, 1, 2))
        ref = geometry.product_polytope(base, geometry.cube(ell - 4))
        if geometry.combinatorially_equivalent(q, ref):
            return POLYTOPE_3412
    return POLYTOPE_NONE


@dataclass(frozen=True)
class ClassificationReport:
    w: Perm
    length: int
    support: tuple[int, ...]
    complexity: int
    smooth: bool
    profile: PatternCount
    factor: Optional[FactorWitness]
    poset: str
    polytope: Optional[str]
    tower: Optional[towers.IntervalSequence]
    consistent: bool


def _expected_verdicts(c: int, smooth: bool) -> tuple[str, str, Optional[str]]:
    """(poset, polytope, factor kind) demanded by the classification table."""
    if c == 0:
        return POSET_BOOLEAN, POLYTOPE_CUBE, None
    if c == 1 and smooth:
        return POSET_S3, POLYTOPE_HEX, KIND_321
    if c == 1:
        return POSET_3412, POLYTOPE_3412, KIND_3412
    return POSET_NONE, POLYTOPE_NONE, None


def classify(
    w: Perm, include_polytope: bool = True, include_tower: bool = True
) -> ClassificationReport:
    """Full report for one permutation; every field is computed by its
    own module path and then cross-checked for consistency.

    >>> classify((3, 1, 4, 2), include_polytope=False).poset
    'boolean'
    """
    w = perms.check_permutation(w)
    c = complexity(w)
    smooth = is_smooth(w)
    profile = pattern_profile(w)
    factor = perms.find_single_repetition_factor(w, KIND_321) or perms.find_single_repetition_factor(w, KIND_3412)
    pverdict = poset_verdict(w)
    qverdict = polytope_verdict(w) if include_polytope else None
    tower: Optional[towers.IntervalSequence] = None
    if include_tower and c == 1:
        tower = towers.interval_sequence(w)

    exp_poset, exp_polytope, exp_kind = _expected_verdicts(c, smooth)
    checks = [pverdict == exp_poset]
    if qverdict is not None:
        checks.append(qverdict == exp_polytope)
    checks.append((factor.kind if factor else None) == exp_kind)
    if c == 0:
        checks.append(smooth and profile.combined == 0)
    elif c == 1:
        expected_profile = PatternCount(1, 0) if smooth else PatternCount(0, 1)
        checks.append(profile == expected_profile)
        if tower is not None:
            checks.append(tower.kind == ("smooth" if smooth else "singular"))
    return ClassificationReport(
        w,
        length(w),
        tuple(sorted(support(w))),
        c,
        smooth,
        profile,
        factor,
        pverdict,
        qverdict,
        tower,
        all(checks),
    )


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    n: int
    checked: int
    failures: tuple[dict, ...]
    details: dict

    @property
    def passed(self) -> bool:
        return not self.failures


def _map_ordered(fn: Callable, items: Iterable, jobs: int) -> list:
    items = list(items)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _condition_failures(
    n: int, jobs: int, conditions: Callable[[Perm], dict[str, bool]]
) -> tuple[list[dict], int]:
    """Evaluate per-permutation condition dicts; a failure is any w
    whose conditions are not all equal."""

    def check(w: Perm) -> Optional[dict]:
        cond = conditions(w)
        if len(set(cond.values())) > 1:
            return {"w": format_permutation(w), "conditions": cond}
        return None

    results = _map_ordered(check, all_permutations(n), jobs)
    return [r for r in results if r is not None], len(results)


def _distinct_letter_factorization(w: Perm) -> bool:
    word = canonical_reduced_word(w)
    if len(set(word)) != len(word):
        return False
    n = len(w)
    try:
        posets.interval_factorization(
            w, [{letter} for letter in word], [simple(n, letter) for letter in word]
        )
    except ValueError:
        return False
    return True


def _interval_sequence_kind(w: Perm) -> Optional[str]:
    if complexity(w) != 1:
        return None
    try:
        return towers.interval_sequence(w).kind
    except ValueError:
        return None


def _theorem_toric_conditions(w: Perm, include_polytopes: bool) -> dict[str, bool]:
    ell = length(w)
    cond = {
        "complexity-zero": complexity(w) == 0,
        "avoids-321-3412": pattern_profile(w).combined == 0,
        "distinct-letter-word": len(set(canonical_reduced_word(w))) == ell,
        "interval-factorization": _distinct_letter_factorization(w),
        "boolean-poset": poset_verdict(w) == POSET_BOOLEAN,
    }
    if include_polytopes:
        cond["cube-polytope"] = polytope_verdict(w) == POLYTOPE_CUBE
    return cond


def _theorem_smooth_conditions(w: Perm, include_polytopes: bool) -> dict[str, bool]:
    profile = pattern_profile(w)
    cond = {
        "smooth-complexity-one": is_smooth(w) and complexity(w) == 1,
        "pattern-321-once": profile.count_321 == 1 and profile.count_3412 == 0,
        "braid-321-factor": perms.find_single_repetition_factor(w, KIND_321) is not None,
        "flag-tower-factorization": _interval_sequence_kind(w) == "smooth",
        "s3-product-poset": poset_verdict(w) == POSET_S3,
    }
    if include_polytopes:
        cond["hexagon-prism-polytope"] = polytope_verdict(w) == POLYTOPE_HEX
    return cond


def _theorem_singular_conditions(w: Perm, include_polytopes: bool) -> dict[str, bool]:
    profile = pattern_profile(w)
    cond = {
        "singular-complexity-one": (not is_smooth(w)) and complexity(w) == 1,
        "pattern-3412-once": profile.count_321 == 0 and profile.count_3412 == 1,
        "braid-3412-factor": perms.find_single_repetition_factor(w, KIND_3412) is not None,
        "tower-factorization": _interval_sequence_kind(w) == "singular",
        "p3412-product-poset": poset_verdict(w) == POSET_3412,
    }
    if include_polytopes:
        cond["p3412-prism-polytope"] = polytope_verdict(w) == POLYTOPE_3412
    return cond


def suite_complexity_one_list(n: int, jobs: int = 1, **_: object) -> SuiteReport:
    smooth = []
    singular = []
    for w in all_permutations(n):
        if complexity(w) == 1:
            (smooth if is_smooth(w) else singular).append(format_permutation(w))
    details = {"smooth": smooth, "singular": singular, "all": sorted(smooth + singular)}
    return SuiteReport("complexity-one-list", n, 0, (), details)


def _theorem_suite(
    name: str, conditions: Callable[[Perm, bool], dict[str, bool]]
) -> Callable[..., SuiteReport]:
    def run(
        n: int, jobs: int = 1, include_polytopes: Optional[bool] = None, **_: object
    ) -> SuiteReport:
        if include_polytopes is None:
            include_polytopes = n <= 5
        failures, checked = _condition_failures(
            n, jobs, lambda w: conditions(w, include_polytopes)
        )
        return SuiteReport(
            name,
            n,
            checked,
            tuple(sorted(failures, key=lambda f: f["w"])),
            {"include_polytopes": include_polytopes},
        )

    return run


def suite_toric_smooth(n: int, jobs: int = 1, **_: object) -> SuiteReport:
    failures = []
    checked = 0
    for w in all_permutations(n):
        if complexity(w) == 0:
            checked += 1
            if not is_smooth(w):
                failures.append({"w": format_permutation(w)})
    return SuiteReport("toric-smooth", n, checked, tuple(failures), {})


def suite_counting_bijection(n: int, jobs: int = 1, **_: object) -> SuiteReport:
    def count(size: int, profile: PatternCount) -> int:
        return sum(1 for w in all_permutations(size) if pattern_profile(w) == profile)

    smooth_n = count(n, PatternCount(1, 0))
    singular_next = count(n + 1, PatternCount(0, 1))
    failures: tuple[dict, ...] = ()
    if smooth_n != singular_next:
        failures = ({"n": n, "smooth": smooth_n, "singular_next": singular_next},)
    details = {"smooth_count": smooth_n, "singular_next_count": singular_next}
    return SuiteReport("counting-bijection", n, smooth_n + singular_next, failures, details)


def suite_inverse_symmetry(n: int, jobs: int = 1, **_: object) -> SuiteReport:
    def check(w: Perm) -> Optional[dict]:
        wi = inverse(w)
        ok = (pattern_profile(w).combined == 1) == (pattern_profile(wi).combined == 1)
        ok = ok and (
            (is_smooth(w) and complexity(w) == 1)
            == (is_smooth(wi) and complexity(wi) == 1)
        )
        return None if ok else {"w": format_permutation(w)}

    results = _map_ordered(check, all_permutations(n), jobs)
    return SuiteReport(
        "inverse-symmetry",
        n,
        len(results),
        tuple(r for r in results if r is not None),
        {},
    )


def _parabolic_tops(n: int, r: int) -> list[Perm]:
    return [w for w in all_permutations(n) if r not in support(w)]


def _lemma_tuples_exhaustive(n: int):
    for r in range(1, n):
        for w in _parabolic_tops(n, r):
            for u in sorted(posets.lower_set(w)):
                for v in sorted(posets.lower_set(u)):
                    yield u, v, w, r


def _lemma_tuples_sampled(n: int, sample: int, seed: int):
    rng = random.Random(seed)
    tops = {r: _parabolic_tops(n, r) for r in range(1, n)}
    for _ in range(sample):
        r = rng.randrange(1, n)
        w = rng.choice(tops[r])
        u = rng.choice(sorted(posets.lower_set(w)))
        v = rng.choice(sorted(posets.lower_set(u)))
        yield u, v, w, r


def suite_lemma_identities(
    n: int, jobs: int = 1, sample: Optional[int] = None, seed: int = 0, **_: object
) -> SuiteReport:
    if sample is None and n >= 5:
        sample = 10_000
    tuples = (
        _lemma_tuples_sampled(n, sample, seed)
        if sample is not None
        else _lemma_tuples_exhaustive(n)
    )

    def check(args) -> Optional[dict]:
        u, v, w, r = args
        report = facegraph.lemma_identity_report(u, v, w, r)
        if all(report):
            return None
        return {
            "u": format_permutation(u),
            "v": format_permutation(v),
            "w": format_permutation(w),
            "r": r,
            "parts": list(report),
        }

    results = _map_ordered(check, tuples, jobs)
    failures = tuple(
        sorted((r for r in results if r is not None), key=lambda f: (f["w"], f["u"]))
    )
    return SuiteReport(
        "lemma-identities", n, len(results), failures, {"sampled": sample is not None}
    )


def _geometric_face_sets(v: Perm, w: Perm) -> set[frozenset[Perm]]:
    poly = geometry.bruhat_interval_polytope(v, w)
    lattice = geometry.face_lattice(poly)
    return {
        frozenset(poly.vertices[i] for i in face)
        for level in lattice.faces
        for face in level
    }


def _interval_pairs(n: int):
    for w in all_permutations(n):
        for v in sorted(posets.lower_set(w)):
            yield v, w


def suite_face_oracle(
    n: int, jobs: int = 1, sample: Optional[int] = None, seed: int = 0, **_: object
) -> SuiteReport:
    if sample is None and n >= 5:
        sample = 200
    if sample is None:
        pairs = list(_interval_pairs(n))
    else:
        rng = random.Random(seed)
        pairs = []
        perm_list = [tuple(w) for w in all_permutations(n)]
        for _ in range(sample):
            w = rng.choice(perm_list)
            v = rng.choice(sorted(posets.lower_set(w)))
            pairs.append((v, w))

    def check(pair) -> Optional[dict]:
        v, w = pair
        combinatorial = set(facegraph.face_point_sets(v, w))
        geometric = _geometric_face_sets(v, w)
        if combinatorial == geometric:
            return None
        return {
            "v": format_permutation(v),
            "w": format_permutation(w),
            "only_combinatorial": len(combinatorial - geometric),
            "only_geometric": len(geometric - combinatorial),
        }

    results = _map_ordered(check, pairs, jobs)
    failures = tuple(
        sorted((r for r in results if r is not None), key=lambda f: (f["w"], f["v"]))
    )
    return SuiteReport(
        "face-oracle", n, len(results), failures, {"sampled": sample is not None}
    )


def _product_cases_exhaustive(n: int):
    for r in range(1, n):
        for w in _parabolic_tops(n, r):
            for v in sorted(posets.lower_set(w)):
                yield v, w, r


def suite_product_proposition(
    n: int, jobs: int = 1, sample: Optional[int] = None, seed: int = 0, **_: object
) -> SuiteReport:
    if sample is None and n >= 5:
        sample = 300
    if sample is None:
        cases = list(_product_cases_exhaustive(n))
    else:
        rng = random.Random(seed)
        tops = {r: _parabolic_tops(n, r) for r in range(1, n)}
        cases = []
        for _ in range(sample):
            r = rng.randrange(1, n)
            w = rng.choice(tops[r])
            v = rng.choice(sorted(posets.lower_set(w)))
            cases.append((v, w, r))

    def check(case) -> Optional[dict]:
        v, w, r = case
        n_local = len(w)
        sr = simple(n_local, r)
        base = geometry.bruhat_interval_polytope(v, w)
        prism = geometry.product_polytope(base, geometry.segment())
        for hat in (perms.compose(w, sr), perms.compose(sr, w)):
            q = geometry.bruhat_interval_polytope(v, hat)
            if not geometry.combinatorially_equivalent(q, prism):
                return {
                    "v": format_permutation(v),
                    "w": format_permutation(w),
                    "r": r,
                    "w_hat": format_permutation(hat),
                }
        return None

    results = _map_ordered(check, cases, jobs)
    failures = tuple(
        sorted((r for r in results if r is not None), key=lambda f: (f["w"], f["v"]))
    )
    return SuiteReport(
        "product-proposition", n, len(results), failures, {"sampled": sample is not None}
    )


def suite_rank_factorization(n: int, jobs: int = 1, **_: object) -> SuiteReport:
    failures = []
    checked = 0
    for w in all_permutations(n):
        if complexity(w) != 1:
            continue
        checked += 1
        ell = length(w)
        if is_smooth(w):
            expected = _reference_rank_poly(S3_RANKS, ell - 3)
        else:
            expected = _reference_rank_poly(P3412_RANKS, ell - 4)
        actual = _interval_rank_poly(w)
        if actual != expected:
            failures.append(
                {
                    "w": format_permutation(w),
                    "expected": list(expected),
                    "actual": list(actual),
                }
            )
    return SuiteReport(
        "rank-factorization", n, checked, tuple(sorted(failures, key=lambda f: f["w"])), {}
    )


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "complexity-one-list": suite_complexity_one_list,
    "theorem-toric": _theorem_suite("theorem-toric", _theorem_toric_conditions),
    "theorem-smooth": _theorem_suite("theorem-smooth", _theorem_smooth_conditions),
    "theorem-singular": _theorem_suite("theorem-singular", _theorem_singular_conditions),
    "toric-smooth": suite_toric_smooth,
    "counting-bijection": suite_counting_bijection,
    "inverse-symmetry": suite_inverse_symmetry,
    "lemma-identities": suite_lemma_identities,
    "face-oracle": suite_face_oracle,
    "product-proposition": suite_product_proposition,
    "rank-factorization": suite_rank_factorization,
}


def sweep(
    n: int,
    suite: str,
    jobs: int = 1,
    include_polytopes: Optional[bool] = None,
    sample: Optional[int] = None,
    seed: int = 0,
) -> SuiteReport:
    """Run a named verification suite over S_n.

    >>> sweep(4, "complexity-one-list").details["all"]
    ['1432', '2431', '3214', '3241', '3412', '4132', '4213']
    """
    if not 2 <= n <= 7:
        raise ValueError(f"suites run for 2 <= n <= 7, got n = {n}")
    if suite not in SUITES:
        raise ValueError(f"unknown suite: {suite!r} (known: {', '.join(sorted(SUITES))})")
    return SUITES[suite](
        n, jobs=jobs, include_polytopes=include_polytopes, sample=sample, seed=seed
    )


def suite_report_json(report: SuiteReport) -> dict:
    return {
        "suite": report.suite,
        "n": report.n,
        "checked": report.checked,
        "passed": report.passed,
        "failures": [dict(f) for f in report.failures],
        "details": report.details,
    }


def suite_report_from_json(data: dict) -> SuiteReport:
    return SuiteReport(
        data["suite"],
        data["n"],
        data["checked"],
        tuple(data["failures"]),
        data["details"],
    )


def classification_json(report: ClassificationReport) -> dict:
    data: dict = {
        "w": format_permutation(report.w),
        "n": len(report.w),
        "length": report.length,
        "support": list(report.support),
        "complexity": report.complexity,
        "smooth": report.smooth,
        "pattern_321": report.profile.count_321,
        "pattern_3412": report.profile.count_3412,
        "pattern_combined": report.profile.combined,
        "poset": report.poset,
        "polytope": report.polytope,
        "consistent": report.consistent,
    }
    if report.factor is not None:
        data["factor"] = {
            "word": list(report.factor.word),
            "position": report.factor.position,
            "base_index": report.factor.base_index,
            "kind": report.factor.kind,
        }
    else:
        data["factor"] = None
    if report.tower is not None:
        data["tower"] = {
            "sets": [list(s) for s in report.tower.sets],
            "block_position": report.tower.block_position,
            "kind": report.tower.kind,
            "factor_words": [list(word) for word in report.tower.factor_words],
        }
    else:
        data["tower"] = None
    return data


def classification_from_json(data: dict) -> ClassificationReport:
    w = perms.parse_permutation(data["w"], data["n"])
    factor = None
    if data["factor"] is not None:
        factor = FactorWitness(
            tuple(data["factor"]["word"]),
            data["factor"]["position"],
            data["factor"]["base_index"],
            data["factor"]["kind"],
        )
    tower = None
    if data["tower"] is not None:
        tower = towers.IntervalSequence(
            data["n"],
            tuple(tuple(s) for s in data["tower"]["sets"]),
            data["tower"]["block_position"],
            data["tower"]["kind"],
            tuple(tuple(word) for word in data["tower"]["factor_words"]),
        )
    return ClassificationReport(
        w,
        data["length"],
        tuple(data["support"]),
        data["complexity"],
        data["smooth"],
        PatternCount(data["pattern_321"], data["pattern_3412"]),
        factor,
        data["poset"],
        data["polytope"],
        tower,
        data["consistent"],
    )
