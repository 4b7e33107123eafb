"""Command-line front end.

Exit codes: 0 success or EQUAL, 1 a check came out false, 2 usage or input
error, 3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import json
import sys

from .homology import (
    abelianization,
    fibration_homology,
    st_star_presentation,
    solve_extension,
    surface_homology_mod_m,
)
from .invariants import InvariantTable, invariant_table
from .mcg import CurveRecognitionError, equal, realize
from .page import Factorization, canonical_monodromy
from .search import (
    DEFAULT_NODE_LIMIT,
    ClassificationError,
    ResourceLimitError,
    classify,
    search_configurations,
)
from .words import DEFAULT_MAX_LENGTH, WordLengthError

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _dump(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise InputError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc})") from exc


def _read_factorization(path: str) -> Factorization:
    try:
        return Factorization.from_dict(_read_json(path))
    except (ValueError, TypeError, KeyError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"{path}: {exc}") from exc


def _format_curves(f: Factorization) -> str:
    lines = [f"F_{f.k}: {len(f)} curve(s), leftmost factor first"]
    for i, c in enumerate(f.curves):
        tag = "  (outer-parallel)" if c.outer_parallel else ""
        holes = "{" + ",".join(map(str, c.holes)) + "}"
        lines.append(f"  {i}: holes {holes}  word {c.word}{tag}")
    return "\n".join(lines)


def cmd_monodromy(args) -> int:
    f = canonical_monodromy(args.k)
    print(_format_curves(f) if args.format == "text" else f.to_json())
    return EXIT_OK


def cmd_invariants(args) -> int:
    if args.input:
        f = _read_factorization(args.input)
    elif args.k is not None:
        f = canonical_monodromy(args.k)
    else:
        raise InputError("invariants needs a factorization file or --k")
    table = invariant_table(f)
    print(table.format_text() if args.format == "text" else table.to_json())
    return EXIT_OK


def cmd_search(args) -> int:
    if (args.k is None) == (args.table is None):
        raise InputError("search needs exactly one of --k or --table")
    if args.k is not None:
        report = classify(args.k, node_limit=args.node_limit, workers=args.workers)
        print(report.format_text() if args.format == "text" else _dump(report.to_dict()))
        return EXIT_OK
    try:
        target = InvariantTable.from_dict(_read_json(args.table))
    except (ValueError, TypeError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"{args.table}: {exc}") from exc
    configs, nodes = search_configurations(target, args.node_limit, args.workers)
    if args.format == "text":
        lines = [f"k = {target.k}: {len(configs)} configuration(s), {nodes} search nodes"]
        lines += [f"  {i}. {c}" for i, c in enumerate(configs, 1)]
        print("\n".join(lines))
    else:
        print(_dump({"k": target.k, "count": len(configs), "nodes": nodes,
                     "target": target.to_dict(),
                     "configurations": [c.to_list() for c in configs]}))
    return EXIT_OK


def cmd_verify(args) -> int:
    fa, fb = _read_factorization(args.file_a), _read_factorization(args.file_b)
    if fa.k != fb.k:
        raise InputError(f"factorizations live on F_{fa.k} and F_{fb.k}")
    ra, rb = realize(fa, args.max_length), realize(fb, args.max_length)
    same = equal(ra, rb)
    if args.format == "json":
        print(_dump({"equal": same, "a": ra.to_dict(), "b": rb.to_dict()}))
    else:
        print("EQUAL" if same else "NOT EQUAL")
    return EXIT_OK if same else EXIT_FALSE


def cmd_homology(args) -> int:
    if args.solve_m:
        _need_k(args)
        result = solve_extension(args.k, args.m_max)
        print(_dump(result) if args.format == "json" else str(result))
        return EXIT_OK
    if args.mod is not None:
        _need_k(args)
        group = surface_homology_mod_m(args.k, args.mod)
        print(_dump(group.to_dict()) if args.format == "json" else str(group))
        return EXIT_OK
    if args.group is not None:
        _need_k(args)
        group = abelianization(st_star_presentation(args.k))
        print(_dump(group.to_dict()) if args.format == "json" else str(group))
        return EXIT_OK
    if args.input:
        f = _read_factorization(args.input)
    elif args.k is not None:
        f = canonical_monodromy(args.k)
    else:
        raise InputError("homology needs a factorization file, --k, --group, --mod or --solve-m")
    h1, h2 = fibration_homology(f)
    if args.format == "json":
        print(_dump({"H1": h1.to_dict(), "H2": h2.to_dict()}))
    else:
        print(f"H1 = {h1}, H2 = {h2}")
    return EXIT_OK


def _need_k(args):
    if args.k is None:
        raise InputError("this mode needs --k")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planar-fillings",
        description="Positive factorizations, multiplicities and homology for the "
                    "planar open books of unit cotangent bundles of nonorientable surfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, default):
        p.add_argument("--format", choices=("json", "text"), default=default)

    p = sub.add_parser("monodromy", help="print the canonical factorization on F_k")
    p.add_argument("--k", type=int, required=True)
    fmt(p, "json")
    p.set_defaults(func=cmd_monodromy)

    p = sub.add_parser("invariants", help="multiplicity table of a factorization")
    p.add_argument("input", nargs="?", help="factorization JSON file")
    p.add_argument("--k", type=int, help="use the canonical factorization on F_k")
    fmt(p, "json")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("search", help="enumerate configurations with given multiplicities")
    p.add_argument("--k", type=int)
    p.add_argument("--table", help="invariant table JSON file")
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    p.add_argument("--workers", type=int, default=1)
    fmt(p, "json")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="compare the mapping classes of two factorizations")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--max-length", type=int, default=DEFAULT_MAX_LENGTH,
                   help="word-length cap during composition")
    fmt(p, "text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("homology", help="fibration, boundary and extension homology")
    p.add_argument("input", nargs="?", help="factorization JSON file")
    p.add_argument("--k", type=int)
    p.add_argument("--group", choices=("stn",), help="abelianize pi_1 of the unit cotangent bundle")
    p.add_argument("--mod", type=int, metavar="M", help="H_1(N_k; Z/M)")
    p.add_argument("--solve-m", action="store_true",
                   help="list the m with vanishing extension H_2")
    p.add_argument("--m-max", type=int, default=100)
    fmt(p, "text")
    p.set_defaults(func=cmd_homology)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError, CurveRecognitionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceLimitError, WordLengthError) as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ClassificationError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())
