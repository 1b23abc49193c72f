"""Command line interface: ``polydepth <command> FILE ...``.

Exit status is 0 whenever the input could be read and processed, whatever
the mathematical verdicts; 2 signals a usage, parse or I/O failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .algebra.budget import Budget, BudgetExceeded
from .algebra.depth import STRATEGIES, depth
from .io import (
    AnalysisOptions,
    PolytopeFileError,
    analyze,
    default_strategy,
    emit_report,
    format_polytope,
    parse_polytope_file,
    rational_str,
)
from .polytope import bipyramid, dual_polytope, lattice_pyramid, product_with_cube
from .semigroup import cone_over_polytope, hilbert_basis

log = logging.getLogger("polydepth")

CONSTRUCTIONS = ("bipyr", "pyr", "prodcube")


class _Failure(Exception):
    pass


def _read(path: str, transpose):
    try:
        data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as exc:
        raise _Failure(f"{path}: {exc.strerror}") from exc
    try:
        return parse_polytope_file(data, transpose)
    except PolytopeFileError as exc:
        raise _Failure(f"{path}: {exc}") from exc


def _analyze_one(path: str, transpose, options: AnalysisOptions, as_json: bool) -> bytes:
    P = _read(path, transpose)
    return emit_report(analyze(P, options), "structured" if as_json else "text")


def cmd_analyze(args) -> int:
    options = AnalysisOptions(args.strategy, args.budget_seconds, args.force_depth)
    target = Path(args.file)
    if args.file == "-" or not target.is_dir():
        sys.stdout.buffer.write(_analyze_one(args.file, args.transpose, options, args.json))
        return 0
    # batch mode: one report per input file
    inputs = sorted(p for p in target.iterdir() if p.is_file() and not p.name.startswith(".") and ".report." not in p.name)
    outdir = Path(args.output_dir) if args.output_dir else target
    outdir.mkdir(parents=True, exist_ok=True)
    suffix = ".report.json" if args.json else ".report.txt"
    status = 0
    with ProcessPoolExecutor(max_workers=args.jobs) as pool:
        futures = [
            (p, pool.submit(_analyze_one, str(p), args.transpose, options, args.json)) for p in inputs
        ]
        for p, fut in futures:
            try:
                (outdir / (p.stem + suffix)).write_bytes(fut.result())
                print(f"{p.name}: ok")
            except _Failure as exc:
                print(f"error: {exc}", file=sys.stderr)
                status = 2
    return status


def cmd_construct(args) -> int:
    P = _read(args.file, args.transpose)
    if args.kind == "bipyr":
        Q = bipyramid(P)
    elif args.kind == "pyr":
        Q = lattice_pyramid(P)
    else:
        Q = product_with_cube(P, args.k)
    sys.stdout.write(format_polytope(Q))
    return 0


def cmd_points(args) -> int:
    P = _read(args.file, args.transpose)
    pts = [list(p) for p in P.lattice_points]
    if args.json:
        print(json.dumps(pts))
    else:
        for p in pts:
            print(" ".join(map(str, p)))
    return 0


def cmd_dual(args) -> int:
    P = _read(args.file, args.transpose)
    try:
        D = dual_polytope(P)
    except ValueError as exc:
        raise _Failure(f"{args.file}: {exc}") from exc
    if D.is_lattice:
        sys.stdout.write(format_polytope(D))
    else:
        # rational vertices: same layout, entries written as p/q
        print("# dual is not a lattice polytope")
        print(f"{D.ambient_dim} {len(D.vertices)}")
        for i in range(D.ambient_dim):
            print(" ".join(rational_str(v[i]) for v in D.vertices))
    return 0


def cmd_hilbert(args) -> int:
    P = _read(args.file, args.transpose)
    hb = hilbert_basis(cone_over_polytope(P))
    if args.json:
        print(json.dumps([list(h) for h in hb.elements]))
    else:
        for h in hb.elements:
            print(" ".join(map(str, h[:-1])), f"@ {h[-1]}")
    return 0


def cmd_depth(args) -> int:
    P = _read(args.file, args.transpose)
    strategy = args.strategy or default_strategy(len(P.lattice_points))
    try:
        r = depth(P, strategy, Budget.from_env(args.budget_seconds))
    except BudgetExceeded:
        value, method, details = "budget exceeded", None, {}
    except ValueError as exc:
        raise _Failure(f"{args.file}: {exc}") from exc
    else:
        value, method, details = r.value, r.method, r.details
    if args.json:
        print(json.dumps({"depth": value, "depth_method": method, "details": details}))
    else:
        print(value if method is None else f"{value} ({method})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polydepth", description="Normality and depth of lattice polytopes.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text, json_flag=True, leading=()):
        p = sub.add_parser(name, help=help_text)
        for arg, kwargs in leading:
            p.add_argument(arg, **kwargs)
        p.add_argument("file", help="polytope file, '-' for stdin (analyze also takes a directory)")
        p.add_argument("--transpose", action="store_true", default=None, help="rows are vertices")
        if json_flag:
            p.add_argument("--json", action="store_true", help="structured output")
        p.set_defaults(func=func)
        return p

    def budgeted(p):
        p.add_argument("--strategy", choices=STRATEGIES, help="default: cross-check up to 14 lattice points")
        p.add_argument("--budget-seconds", type=float, help="time cap for resolutions")

    p = command("analyze", cmd_analyze, "run the full analysis")
    budgeted(p)
    p.add_argument("--force-depth", action="store_true", help="compute depth even for normal input")
    p.add_argument("--output-dir", help="batch mode: where reports go (default: the input directory)")
    p.add_argument("--jobs", type=int, default=1, help="batch mode: parallel workers")

    kind = ("kind", {"choices": CONSTRUCTIONS})
    p = command("construct", cmd_construct, "bipyramid, lattice pyramid or product with a cube", False, [kind])
    p.add_argument("k", nargs="?", type=int, default=1, help="cube dimension for prodcube")

    command("points", cmd_points, "list lattice points")
    command("dual", cmd_dual, "dual polytope", json_flag=False)
    command("hilbert", cmd_hilbert, "Hilbert basis of the cone over the polytope")
    budgeted(command("depth", cmd_depth, "depth of the toric ring"))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except _Failure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
