"""Command-line interface.

Commands: ``analyze``, ``class``, ``mutate``, ``bary``, ``phk``, ``refine``,
``search-ke``, ``ehrhart``, ``verify-paper``.  All output is exact — JSON
objects or one-polygon-per-line text, integers and reduced ``p/q`` fraction
strings, never floats.

Exit codes: 0 success, 1 verification failure, 2 parse error,
3 precondition failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .barycentric import DegenerateSumError, type_bk
from .constructions import (
    InvalidParametersError,
    make_phk,
    refine_lattice,
    search_ke_quads,
)
from .ehrhart import NotApplicableError, dual_dilation_counts, heights_from_series
from .fixtures import run_fixtures
from .geometry import NotFanoError, PolygonError, is_fano
from .io import ParseError, format_lattice_polygon, parse_lattice_polygon
from .mutation import (
    MutationSpec,
    NoFactorError,
    count_distinguished,
    enumerate_mutations,
    explore_class,
    mutate,
)
from .reporting import analysis_report

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3


class _ExitWith(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _fail(code: int, message: str) -> "_ExitWith":
    return _ExitWith(code, message)


def _read_polygon(arg: str):
    """Polygon from a literal line or from the first nonempty line of a
    file path."""
    text = arg
    if os.path.exists(arg) and os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
        if not lines:
            raise _fail(EXIT_PARSE, f"no polygon found in file {arg!r}")
        text = lines[0]
    try:
        return parse_lattice_polygon(text)
    except ParseError as exc:
        raise _fail(EXIT_PARSE, str(exc)) from exc
    except PolygonError as exc:
        raise _fail(EXIT_PARSE, f"not a valid polygon: {exc}") from exc


def _read_vector(arg: str, what: str) -> tuple[int, int]:
    parts = arg.split(",")
    try:
        x, y = (int(s.strip()) for s in parts)
    except ValueError as exc:
        raise _fail(EXIT_PARSE, f"bad {what} {arg!r}: expected X,Y") from exc
    return (x, y)


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, allow_nan=False)
    sys.stdout.write("\n")


def _require_positive_cap(cap: int) -> None:
    if cap < 1:
        raise _fail(EXIT_PRECONDITION, "iteration cap must be positive")


def _cmd_analyze(args) -> int:
    p = _read_polygon(args.polygon)
    _require_positive_cap(args.cap)
    _emit(analysis_report(p, bk_cap=args.cap))
    return EXIT_OK


def _class_invariant_flags(cls) -> dict:
    from .ehrhart import dual_volume
    polys = list(cls.representatives.values())
    from .edges import directed_sc
    # Representatives are canonical up to reflection, so two members of
    # one class may store mirror-image contents; compare accordingly.
    base = directed_sc(polys[0])
    same_sc = all(
        directed_sc(q) == base or directed_sc(q.reflected()) == base
        for q in polys
    )
    vols = {dual_volume(q) for q in polys}
    counts = {dual_dilation_counts(q, 10) for q in polys}
    return {
        "same_directed_sc": same_sc,
        "same_dual_volume": len(vols) == 1,
        "same_dual_dilation_counts_to_10": len(counts) == 1,
    }


def _cmd_class(args) -> int:
    p = _read_polygon(args.polygon)
    if not is_fano(p):
        raise _fail(EXIT_PRECONDITION, "input polygon is not Fano")
    try:
        cls = explore_class(p, caps=(args.max_polygons, args.max_boundary))
    except ValueError as exc:
        raise _fail(EXIT_PRECONDITION, str(exc)) from exc
    out = cls.to_json()
    symmetric, ke_triangles = count_distinguished(cls)
    out["distinguished"] = {"symmetric": symmetric, "ke_triangles": ke_triangles}
    out["invariants"] = _class_invariant_flags(cls)
    _emit(out)
    return EXIT_OK


def _cmd_mutate(args) -> int:
    p = _read_polygon(args.polygon)
    if not is_fano(p):
        raise _fail(EXIT_PRECONDITION, "input polygon is not Fano")
    if args.enumerate:
        moves = enumerate_mutations(p)
        _emit({"mutations": [
            {"spec": spec.to_json(), "result": [list(v) for v in q.vertices]}
            for spec, q in moves
        ]})
        return EXIT_OK
    if args.w is None or args.d is None:
        raise _fail(EXIT_PARSE, "mutate needs --w and --d (or --enumerate)")
    w = _read_vector(args.w, "grading --w")
    d = _read_vector(args.d, "direction --d")
    try:
        spec = MutationSpec(w, d, args.k)
    except ValueError as exc:
        raise _fail(EXIT_PRECONDITION, str(exc)) from exc
    try:
        q = mutate(p, spec)
    except NoFactorError as exc:
        raise _fail(EXIT_PRECONDITION, str(exc)) from exc
    sys.stdout.write(format_lattice_polygon(q) + "\n")
    return EXIT_OK


def _cmd_bary(args) -> int:
    p = _read_polygon(args.polygon)
    if not is_fano(p):
        raise _fail(EXIT_PRECONDITION, "input polygon is not Fano")
    _require_positive_cap(args.cap)
    try:
        rep = type_bk(p, cap=args.cap)
    except DegenerateSumError as exc:
        raise _fail(EXIT_PRECONDITION, str(exc)) from exc
    _emit(rep.to_json())
    return EXIT_OK


def _cmd_phk(args) -> int:
    try:
        p = make_phk(args.h, args.k)
    except InvalidParametersError as exc:
        raise _fail(EXIT_PRECONDITION, str(exc)) from exc
    sys.stdout.write(format_lattice_polygon(p) + "\n")
    return EXIT_OK


def _cmd_refine(args) -> int:
    p = _read_polygon(args.polygon)
    if not is_fano(p):
        raise _fail(EXIT_PRECONDITION, "input polygon is not Fano")
    v = _read_vector(args.v, "refinement vector")
    try:
        ref = refine_lattice(p, args.k, v)
    except InvalidParametersError as exc:
        raise _fail(EXIT_PRECONDITION, str(exc)) from exc
    _emit({"polygon": [list(q) for q in ref.polygon.vertices], "fano": ref.fano})
    return EXIT_OK


_RANGE_KEYS = ("a", "b", "c", "d", "l", "m", "r", "s")


def _cmd_search_ke(args) -> int:
    try:
        with open(args.config, encoding="utf-8") as fh:
            config = json.load(fh)
    except OSError as exc:
        raise _fail(EXIT_PARSE, f"cannot read config {args.config!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _fail(EXIT_PARSE, f"malformed config {args.config!r}: {exc}") from exc
    ranges = config.get("ranges", config)
    parsed = {}
    for key in _RANGE_KEYS:
        if key not in ranges:
            raise _fail(EXIT_PARSE, f"config is missing range for {key!r}")
        pair = ranges[key]
        if (not isinstance(pair, (list, tuple)) or len(pair) != 2
                or not all(isinstance(x, int) for x in pair)):
            raise _fail(EXIT_PARSE, f"range for {key!r} must be [lo, hi]")
        parsed[key] = (pair[0], pair[1])
    limit = config.get("limit")
    if limit is not None and (not isinstance(limit, int) or limit < 1):
        raise _fail(EXIT_PARSE, "limit must be a positive integer")
    hits = search_ke_quads(parsed, limit=limit)
    lines = [format_lattice_polygon(h.polygon) for h in hits]
    out_path = config.get("output")
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write("".join(line + "\n" for line in lines))
        sys.stdout.write(f"{len(lines)} polygons written to {out_path}\n")
    else:
        for line in lines:
            sys.stdout.write(line + "\n")
    return EXIT_OK


def _cmd_ehrhart(args) -> int:
    p = _read_polygon(args.polygon)
    if not is_fano(p):
        raise _fail(EXIT_PRECONDITION, "input polygon is not Fano")
    if args.K < 0:
        raise _fail(EXIT_PRECONDITION, "K must be nonnegative")
    counts = dual_dilation_counts(p, args.K)
    out = {"K": args.K, "counts": list(counts)}
    if args.heights:
        try:
            out["heights"] = list(heights_from_series(p))
        except NotApplicableError as exc:
            raise _fail(EXIT_PRECONDITION, str(exc)) from exc
    _emit(out)
    return EXIT_OK


def _cmd_verify_paper(args) -> int:
    results = run_fixtures()
    failed = 0
    for name, ok, message in results:
        if ok:
            sys.stdout.write(f"PASS {name}\n")
        else:
            failed += 1
            sys.stdout.write(f"FAIL {name}: {message}\n")
    sys.stdout.write(f"{len(results) - failed}/{len(results)} fixtures passed\n")
    return EXIT_OK if failed == 0 else EXIT_VERIFICATION


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanogon",
        description="Exact computations with Fano lattice polygons.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_polygon(p):
        p.add_argument("polygon",
                       help="polygon line [[x1,y1],[x2,y2],...] or a file path")

    p = sub.add_parser("analyze", help="full JSON report for one polygon")
    add_polygon(p)
    p.add_argument("--cap", type=int, default=20,
                   help="barycentric iteration cap (default 20)")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("class", help="mutation-equivalence class export")
    add_polygon(p)
    p.add_argument("--max-polygons", type=int, default=10_000,
                   help="stop after this many class members (default 10000)")
    p.add_argument("--max-boundary", type=int, default=200,
                   help="prune members with more boundary points (default 200)")
    p.set_defaults(func=_cmd_class)

    p = sub.add_parser("mutate", help="apply one mutation, or list them all")
    add_polygon(p)
    p.add_argument("--w", help="grading covector X,Y")
    p.add_argument("--d", help="factor direction X,Y (must pair to 0 with --w)")
    p.add_argument("--k", type=int, default=1, help="factor multiplicity")
    p.add_argument("--enumerate", action="store_true",
                   help="list one mutation per long edge instead")
    p.set_defaults(func=_cmd_mutate)

    p = sub.add_parser("bary", help="iterated barycentric transformation report")
    add_polygon(p)
    p.add_argument("--cap", type=int, default=20,
                   help="iteration cap (default 20)")
    p.set_defaults(func=_cmd_bary)

    p = sub.add_parser("phk", help="hexagon family member for parameters h, k")
    p.add_argument("h", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=_cmd_phk)

    p = sub.add_parser("refine", help="re-express a polygon on a refined lattice")
    add_polygon(p)
    p.add_argument("k", type=int, help="refinement denominator")
    p.add_argument("v", help="refinement vector X,Y")
    p.set_defaults(func=_cmd_refine)

    p = sub.add_parser("search-ke",
                       help="search quadrilateral parameters for KE polygons")
    p.add_argument("config",
                   help="JSON config with integer ranges for a,b,c,d,l,m,r,s")
    p.set_defaults(func=_cmd_search_ke)

    p = sub.add_parser("ehrhart", help="dual dilation counts")
    add_polygon(p)
    p.add_argument("K", type=int, help="largest dilation factor")
    p.add_argument("--heights", action="store_true",
                   help="also read long-edge heights off the series")
    p.set_defaults(func=_cmd_ehrhart)

    p = sub.add_parser("verify-paper",
                       help="replay every frozen reference fixture")
    p.set_defaults(func=_cmd_verify_paper)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _ExitWith as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code
    except NotFanoError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
