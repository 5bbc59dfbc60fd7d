"""Command-line front end.

Machine-readable JSON goes to stdout, human-oriented notes to stderr.  Exit
codes: 0 success, 1 validation or input failure, 2 bad usage.  All
subcommands are deterministic: identical inputs and flags give byte-identical
output.  The environment variable OUTERSTRING_SEED_OVERRIDE (an integer)
overrides --seed wherever a seed is used.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bounds import explicit_chi_bound
from .errors import FamilyValidationError, OuterstringError
from .extract import (BoundParams, attempt_bracket_system,
                      attempt_clique_system, bfs_supported,
                      find_skeleton_supported, mcguinness)
from .gen import GenSpec, generate
from .geom import dump_family, find_violations, loads_family
from .graph import chromatic_number, clique_number, intersection_graph
from .structures import skeleton_to_dict
from .svg import render_family


def _emit(data) -> None:
    sys.stdout.write(json.dumps(data, indent=1, sort_keys=False) + "\n")


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        sys.stderr.write(f"cannot read {path}: {exc}\n")
        raise SystemExit(1)
    try:
        return loads_family(text)
    except json.JSONDecodeError as exc:
        sys.stderr.write(
            f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}\n")
        raise SystemExit(1)
    except FamilyValidationError as exc:
        sys.stderr.write(f"{path}: invalid family: {exc}\n")
        raise SystemExit(1)


def _cmd_validate(args) -> int:
    with open(args.family, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            sys.stderr.write(
                f"{args.family}: malformed JSON at line {exc.lineno}, "
                f"column {exc.colno}: {exc.msg}\n")
            return 1
    from .geom import GroundedCurve
    from .geom.io import _coord_from_json
    try:
        curves = [GroundedCurve(e["id"],
                                tuple((_coord_from_json(x), _coord_from_json(y))
                                      for x, y in e["vertices"]))
                  for e in data["curves"]]
    except (KeyError, ValueError, TypeError) as exc:
        sys.stderr.write(f"{args.family}: bad family structure: {exc}\n")
        return 1
    violations = find_violations(curves)
    _emit({"valid": not violations,
           "violations": [{"kind": v.kind, "curves": list(v.curves), "detail": v.detail}
                          for v in violations]})
    return 1 if violations else 0


def _cmd_stats(args) -> int:
    fam = _load(args.family)
    graph = intersection_graph(fam)
    w, clique = clique_number(graph)
    chi, coloring = chromatic_number(graph)
    _emit({"n": len(fam), "omega": w, "chi": chi,
           "clique": sorted(clique), "coloring": {c: coloring[c] for c in fam.ids()}})
    return 0


def _params_from(args) -> BoundParams:
    return BoundParams(k=args.k, xi=args.xi, alpha=args.alpha, beta=args.beta,
                       n=args.n, t=args.t, gamma=args.gamma)


def _cmd_extract(args) -> int:
    fam = _load(args.family)
    try:
        if args.procedure == "mcguinness":
            _, report = mcguinness(fam, args.alpha, args.beta)
        elif args.procedure == "bfs":
            _, _, report = bfs_supported(fam)
        elif args.procedure == "bracket-system":
            report = attempt_bracket_system(fam, _params_from(args))
        elif args.procedure == "clique-system":
            report = attempt_clique_system(fam, args.t, args.n, _params_from(args))
        else:  # pragma: no cover - argparse restricts choices
            return 2
    except OuterstringError as exc:
        sys.stderr.write(f"extraction precondition failed: {exc}\n")
        return 1
    _emit(report.to_dict())
    return 0


def _cmd_skeleton(args) -> int:
    fam = _load(args.family)
    found = find_skeleton_supported(fam, args.alpha)
    if found is None:
        _emit({"found": False})
        return 0
    sk, P = found
    chi, _ = chromatic_number(intersection_graph(P))
    _emit({"found": True, "skeleton": skeleton_to_dict(sk),
           "supported": list(P.ids()), "chi": chi})
    return 0


def _cmd_bounds(args) -> int:
    value = explicit_chi_bound(args.k)
    digits = len(str(value))
    if digits > 10 ** 6:
        text = str(value)
        mantissa = f"{text[0]}.{text[1:11]}"
        _emit({"k": args.k, "digits": digits,
               "scientific": f"{mantissa}e+{digits - 1}"})
    else:
        sys.stdout.write(str(value) + "\n")
    return 0


def _cmd_generate(args) -> int:
    seed = args.seed
    override = os.environ.get("OUTERSTRING_SEED_OVERRIDE")
    if override is not None:
        seed = int(override)
    spec = GenSpec(kind=args.kind, n=args.n, bends=args.bends, seed=seed,
                   grid=args.grid)
    fam = generate(spec)
    if args.out:
        dump_family(fam, args.out)
        _emit({"out": args.out, "n": len(fam), "seed": seed})
    else:
        from .geom import family_to_dict
        _emit(family_to_dict(fam))
    return 0


def _cmd_render(args) -> int:
    fam = _load(args.family)
    skeleton = bracket = None
    if args.skeleton:
        with open(args.skeleton, "r", encoding="utf-8") as fh:
            skeleton = json.load(fh)
    if args.bracket:
        with open(args.bracket, "r", encoding="utf-8") as fh:
            bracket = json.load(fh)
    text = render_family(fam, highlight=args.highlight or (), skeleton=skeleton,
                         bracket=bracket)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    _emit({"out": args.out, "curves": len(fam)})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="outerstring",
        description="Exact analysis of grounded curve families")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check groundedness and general position")
    p.add_argument("family")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("stats", help="n, clique number, chromatic number, witnesses")
    p.add_argument("family")
    p.set_defaults(fn=_cmd_stats)

    p = sub.add_parser("extract", help="run an extraction procedure")
    p.add_argument("procedure",
                   choices=["mcguinness", "bfs", "bracket-system", "clique-system"])
    p.add_argument("family")
    p.add_argument("--alpha", type=int, default=0)
    p.add_argument("--beta", type=int, default=0)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--xi", type=int, default=1)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--gamma", type=int, default=None)
    p.set_defaults(fn=_cmd_extract)

    p = sub.add_parser("skeleton", help="search for a skeleton-supported subfamily")
    p.add_argument("family")
    p.add_argument("--alpha", type=int, default=0)
    p.set_defaults(fn=_cmd_skeleton)

    p = sub.add_parser("bounds", help="evaluate the explicit chi bound for k")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("generate", help="emit a random grounded family")
    p.add_argument("--kind", choices=["segments", "polylines"], default="segments")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--bends", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid", type=int, default=12)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_generate)

    p = sub.add_parser("render", help="render a family to SVG")
    p.add_argument("family")
    p.add_argument("--out", required=True)
    p.add_argument("--highlight", nargs="*", default=None)
    p.add_argument("--skeleton", default=None)
    p.add_argument("--bracket", default=None)
    p.set_defaults(fn=_cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    except OuterstringError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
