"""
Command-line front end.

Verbs map one-to-one onto module operations: classify/report for a
single permutation, enumerate for filtered listings, polytope/faces/
hasse for geometry and poset exports (JSON, OFF, DOT), bott/tower/
cohomology for integer tower data, and verify to run a sweep suite.
Exit codes: 0 success, 1 verification failure, 2 usage error.  All
machine output is sorted, so identical invocations are bit-stable.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import facegraph, geometry, posets, towers
from .classification import (
    SUITES,
    classification_json,
    classify,
    suite_report_json,
    sweep,
)
from .perms import (
    Perm,
    format_permutation,
    format_word,
    identity,
    parse_permutation,
    parse_word,
)
from .polynomials import format_polynomial


def _load_config() -> dict:
    path = os.environ.get("BIP_CONFIG")
    if not path:
        return {}
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("config file must hold a JSON object")
    return data


def _default_jobs(config: dict) -> int:
    if "BIP_JOBS" in os.environ:
        return max(1, int(os.environ["BIP_JOBS"]))
    return max(1, int(config.get("jobs", 1)))


def _parse_pair(first: str, second: str) -> tuple[Perm, Perm]:
    """Parse two permutation arguments, letting "e" borrow its size."""
    if first == "e" and second == "e":
        raise ValueError('cannot infer the size of "e e"; give one explicitly')
    if first == "e":
        w = parse_permutation(second)
        return identity(len(w)), w
    if second == "e":
        v = parse_permutation(first)
        return v, identity(len(v))
    v = parse_permutation(first)
    return v, parse_permutation(second, len(v))


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _cmd_classify(args: argparse.Namespace) -> int:
    w = parse_permutation(args.perm)
    report = classify(w, include_polytope=not args.no_polytope)
    lines = [
        f"w = {format_permutation(report.w)}  (n = {len(report.w)})",
        f"length      = {report.length}",
        "support     = {" + ", ".join(str(i) for i in report.support) + "}",
        f"complexity  = {report.complexity}",
        f"smooth      = {'yes' if report.smooth else 'no'}",
        f"patterns    = 321 x {report.profile.count_321}, 3412 x {report.profile.count_3412},"
        f" combined {report.profile.combined}",
    ]
    if report.factor is not None:
        lines.append(
            f"factor      = {format_word(report.factor.word)} "
            f"(position {report.factor.position}, i = {report.factor.base_index}, {report.factor.kind})"
        )
    else:
        lines.append("factor      = none")
    lines.append(f"poset       = {report.poset}")
    lines.append(f"polytope    = {report.polytope if report.polytope is not None else 'skipped'}")
    if report.tower is not None:
        sets = ", ".join("{" + ",".join(map(str, s)) + "}" for s in report.tower.sets)
        lines.append(
            f"tower       = ({sets}), block at {report.tower.block_position}, {report.tower.kind}"
        )
    else:
        lines.append("tower       = none")
    lines.append(f"consistent  = {'yes' if report.consistent else 'NO'}")
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    w = parse_permutation(args.perm)
    report = classify(w, include_polytope=not args.no_polytope)
    _emit(_json_text(classification_json(report)), args.output)
    return 0


def _parse_filters(specs: Sequence[str]):
    allowed = {"complexity", "length", "smooth", "combined", "pattern321", "pattern3412"}
    filters = []
    for spec in specs:
        if "=" not in spec:
            raise ValueError(f"filter must look like key=value: {spec!r}")
        key, value = spec.split("=", 1)
        if key not in allowed:
            raise ValueError(f"unknown filter key {key!r} (allowed: {', '.join(sorted(allowed))})")
        if key == "smooth":
            if value not in ("true", "false"):
                raise ValueError("smooth filter takes true or false")
            filters.append((key, value == "true"))
        else:
            filters.append((key, int(value)))
    return filters


def _cmd_enumerate(args: argparse.Namespace) -> int:
    from .perms import all_permutations, complexity, is_smooth, length, pattern_profile

    filters = _parse_filters(args.filter or [])
    rows = []
    for w in all_permutations(args.n):
        profile = None
        keep = True
        for key, value in filters:
            if key == "complexity":
                keep = complexity(w) == value
            elif key == "length":
                keep = length(w) == value
            elif key == "smooth":
                keep = is_smooth(w) == value
            else:
                profile = profile or pattern_profile(w)
                actual = {
                    "combined": profile.combined,
                    "pattern321": profile.count_321,
                    "pattern3412": profile.count_3412,
                }[key]
                keep = actual == value
            if not keep:
                break
        if keep:
            rows.append(format_permutation(w))
    if args.json:
        _emit(_json_text({"n": args.n, "permutations": rows}), args.output)
    else:
        _emit("".join(r + "\n" for r in rows), args.output)
    return 0


def _cmd_polytope(args: argparse.Namespace) -> int:
    v, w = _parse_pair(args.v, args.w)
    poly = geometry.bruhat_interval_polytope(v, w)
    if args.f_vector:
        fv = geometry.f_vector(poly)
        _emit("(" + ", ".join(map(str, fv)) + ")\n", args.output)
        return 0
    if args.format == "json":
        _emit(_json_text(geometry.polytope_json(poly)), args.output)
    elif args.format == "off":
        _emit(geometry.polytope_off(poly), args.output)
    else:
        fv = geometry.f_vector(poly)
        lines = [
            f"Q[{format_permutation(v)}, {format_permutation(w)}]",
            f"ambient dim = {poly.ambient_dim}",
            f"dim         = {poly.dim}",
            f"vertices    = {len(poly.vertices)}",
            f"facets      = {len(poly.facets)}",
            "f-vector    = (" + ", ".join(map(str, fv)) + ")",
        ]
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_faces(args: argparse.Namespace) -> int:
    v, w = _parse_pair(args.v, args.w)
    if args.graph:
        x = parse_permutation(args.graph[0], len(v))
        y = parse_permutation(args.graph[1], len(v))
        g = facegraph.face_graph(x, y, v, w)
        _emit(facegraph.face_graph_dot(g), args.output)
        return 0
    records = facegraph.enumerate_faces(v, w)
    if args.json:
        data = [
            {
                "x": format_permutation(r.x),
                "y": format_permutation(r.y),
                "dim": r.dim,
            }
            for r in records
        ]
        _emit(_json_text({"faces": data}), args.output)
        return 0
    lines = []
    top = max((r.dim for r in records), default=0)
    for d in range(top + 1):
        level = [r for r in records if r.dim == d]
        lines.append(f"dim {d}: {len(level)} faces")
        for r in level:
            lines.append(f"  [{format_permutation(r.x)}, {format_permutation(r.y)}]")
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_hasse(args: argparse.Namespace) -> int:
    v, w = _parse_pair(args.v, args.w)
    box = posets.interval(v, w)
    _emit(posets.hasse_dot(box, name="interval"), args.output)
    return 0


def _cmd_bott(args: argparse.Namespace) -> int:
    word = parse_word(" ".join(args.letters))
    matrix = towers.bott_matrix(word)
    lines = [" ".join(f"{x:3d}" for x in row) for row in matrix.rows]
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_tower(args: argparse.Namespace) -> int:
    w = parse_permutation(args.perm)
    seq = towers.interval_sequence(w)
    data = towers.flag_tower_vectors(seq)
    if args.json:
        payload = {"w": format_permutation(w)}
        payload.update(towers.tower_json(seq, data))
        _emit(_json_text(payload), args.output)
        return 0
    sets = ", ".join("{" + ",".join(map(str, s)) + "}" for s in seq.sets)
    lines = [
        f"w     = {format_permutation(w)}",
        f"I     = ({sets})",
        f"block = position {seq.block_position} ({seq.kind}, word {format_word(seq.block_word)})",
        f"fiber sizes = {list(data.fiber_sizes)}",
    ]
    for (j, k, m), vec in sorted(data.vectors.items()):
        lines.append(f"a[{j},{k}]^({m}) = ({', '.join(map(str, vec))})")
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_cohomology(args: argparse.Namespace) -> int:
    w = parse_permutation(args.perm)
    pres = towers.cohomology_presentation(w)
    if args.json:
        payload = {"w": format_permutation(w)}
        payload.update(towers.cohomology_json(pres))
        _emit(_json_text(payload), args.output)
        return 0
    lines = [f"w = {format_permutation(w)}", "raw generators:"]
    for i, g in enumerate(pres.generators, start=1):
        lines.append(f"  I{i} = {format_polynomial(g, pres.variables)}")
    lines.append("normalized generators:")
    assert pres.normalized_generators is not None and pres.normalized_variables is not None
    for i, g in enumerate(pres.normalized_generators, start=1):
        lines.append(f"  g{i} = {format_polynomial(g, pres.normalized_variables)}")
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = sweep(
        args.n,
        args.suite,
        jobs=args.jobs,
        include_polytopes=args.include_polytopes,
        sample=args.sample,
        seed=args.seed,
    )
    if args.json:
        _emit(_json_text(suite_report_json(report)), args.output)
    else:
        lines = [
            f"suite {report.suite} (n = {report.n}): checked {report.checked},"
            f" failures {len(report.failures)}"
        ]
        for failure in report.failures[:10]:
            lines.append(f"  {json.dumps(failure, sort_keys=True)}")
        if len(report.failures) > 10:
            lines.append(f"  ... and {len(report.failures) - 10} more")
        if report.details:
            lines.append(f"details: {json.dumps(report.details, sort_keys=True)}")
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if report.passed else 1


def build_parser(config: dict) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bip",
        description="Bruhat interval polytopes and the complexity of Schubert varieties",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_output(p: argparse.ArgumentParser) -> None:
        p.add_argument("-o", "--output", help="write to this file instead of stdout")

    p = sub.add_parser("classify", help="human-readable classification of one permutation")
    p.add_argument("perm")
    p.add_argument("--no-polytope", action="store_true", help="skip the polytope verdict")
    add_output(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("report", help="JSON classification report")
    p.add_argument("perm")
    p.add_argument("--no-polytope", action="store_true")
    add_output(p)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("enumerate", help="list permutations matching filters")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--filter",
        action="append",
        help="key=value with key in complexity, length, smooth, combined, pattern321, pattern3412",
    )
    p.add_argument("--json", action="store_true")
    add_output(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("polytope", help="Bruhat interval polytope of [v, w]")
    p.add_argument("v")
    p.add_argument("w")
    p.add_argument("--f-vector", action="store_true", help="print only the f-vector")
    p.add_argument("--format", choices=["text", "json", "off"], default="text")
    add_output(p)
    p.set_defaults(func=_cmd_polytope)

    p = sub.add_parser("faces", help="faces of Q[v,w] via the acyclicity criterion")
    p.add_argument("v")
    p.add_argument("w")
    p.add_argument(
        "--graph",
        nargs=2,
        metavar=("x", "y"),
        help="export the contracted graph for the subinterval [x, y] as DOT",
    )
    p.add_argument("--json", action="store_true")
    add_output(p)
    p.set_defaults(func=_cmd_faces)

    p = sub.add_parser("hasse", help="Hasse diagram of [v, w] as DOT")
    p.add_argument("v")
    p.add_argument("w")
    add_output(p)
    p.set_defaults(func=_cmd_hasse)

    p = sub.add_parser("bott", help="upper-triangular matrix of a reduced word")
    p.add_argument("letters", nargs="+", help='word letters, e.g. "s1 s2 s1" or "1 2 1"')
    add_output(p)
    p.set_defaults(func=_cmd_bott)

    p = sub.add_parser("tower", help="interval sequence and flag-tower vectors")
    p.add_argument("perm")
    p.add_argument("--json", action="store_true")
    add_output(p)
    p.set_defaults(func=_cmd_tower)

    p = sub.add_parser("cohomology", help="cohomology presentation (smooth complexity one)")
    p.add_argument("perm")
    p.add_argument("--json", action="store_true")
    add_output(p)
    p.set_defaults(func=_cmd_cohomology)

    p = sub.add_parser("verify", help="run a verification suite over S_n")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=_default_jobs(config))
    p.add_argument("--sample", type=int, help="sample size for randomized suites")
    p.add_argument("--seed", type=int, default=0)
    group = p.add_mutually_exclusive_group()
    group.add_argument(
        "--include-polytopes", dest="include_polytopes", action="store_true", default=None
    )
    group.add_argument(
        "--no-polytopes", dest="include_polytopes", action="store_false", default=None
    )
    p.add_argument("--json", action="store_true")
    add_output(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = _load_config()
        parser = build_parser(config)
        args = parser.parse_args(argv)
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
