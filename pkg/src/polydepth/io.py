"""Polytope files and analysis reports.

File format: optional ``#`` comment lines, a header ``d n``, then ``d`` rows
of ``n`` integers whose columns are the vertices.  A file with ``n`` rows of
``d`` integers is read as the transpose when that is the only consistent
reading.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .algebra.budget import Budget, BudgetExceeded
from .algebra.depth import DepthResult, depth
from .polytope import Polytope, PolytopeError, dual_polytope, hull_from_vertices, is_reflexive
from .semigroup import is_normal, is_very_ample, spans_lattice

__all__ = [
    "PolytopeFileError",
    "parse_polytope_file",
    "format_polytope",
    "content_hash",
    "AnalysisOptions",
    "AnalysisReport",
    "analyze",
    "emit_report",
    "parse_report",
    "default_strategy",
]

REPORT_FIELDS = (
    "identity",
    "reflexive",
    "normal",
    "witness",
    "very_ample",
    "spans_lattice",
    "depth",
    "depth_method",
    "dual_normal",
    "timings",
)

BUDGET_EXCEEDED = "budget exceeded"
SKIPPED = "skipped"


class PolytopeFileError(ValueError):
    """Malformed polytope file; ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(text: str):
    """Non-comment lines as ``(line number, [(column, token), ...])``."""
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        toks = []
        col = 0
        for part in line.split():
            col = line.index(part, col)
            toks.append((col + 1, part))
            col += len(part)
        yield lineno, toks


def _int(tok: str, lineno: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise PolytopeFileError(f"not an integer: {tok!r}", lineno, col) from None


def parse_polytope_file(data: bytes | str, transpose: bool | None = None) -> Polytope:
    """Parse a polytope file into the convex hull of its columns.

    ``transpose=True`` forces the ``n`` rows of ``d`` reading, ``False``
    forbids it; by default it is used only when the rows do not fit ``d x n``.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise PolytopeFileError("input is not UTF-8", 1) from exc
    lines = list(_tokens(data))
    if not lines:
        raise PolytopeFileError("missing header", 1)
    lineno, header = lines[0]
    if len(header) != 2:
        col = header[2][0] if len(header) > 2 else 1
        raise PolytopeFileError("header must be two integers 'd n'", lineno, col)
    d, n = (_int(t, lineno, c) for c, t in header)
    if d < 1 or n < 1:
        raise PolytopeFileError("header values must be positive", lineno, header[0][0])
    body = lines[1:]
    rows = [[_int(t, ln, c) for c, t in toks] for ln, toks in body]

    def fits(nrows, ncols):
        return len(rows) == nrows and all(len(r) == ncols for r in rows)

    if transpose is None:
        transpose = not fits(d, n) and fits(n, d)
    nrows, ncols = (n, d) if transpose else (d, n)
    for (ln, toks), row in zip(body, rows):
        if len(row) != ncols:
            col = toks[ncols][0] if len(toks) > ncols else (toks[-1][0] + len(toks[-1][1]) if toks else 1)
            raise PolytopeFileError(f"expected {ncols} entries, found {len(row)}", ln, col)
    if len(rows) != nrows:
        ln = body[nrows][0] if len(rows) > nrows else (body[-1][0] + 1 if body else lineno + 1)
        raise PolytopeFileError(f"expected {nrows} rows, found {len(rows)}", ln)
    points = rows if transpose else [list(col) for col in zip(*rows)]
    try:
        return hull_from_vertices(points)
    except PolytopeError as exc:
        raise PolytopeFileError(str(exc), lineno) from exc


def format_polytope(P: Polytope) -> str:
    """Vertices of ``P`` as a polytope file (LF line endings, single spaces)."""
    if not P.is_lattice:
        raise ValueError("only lattice polytopes can be written")
    d, n = P.ambient_dim, len(P.vertices)
    lines = [f"{d} {n}"]
    lines += [" ".join(str(v[i]) for v in P.vertices) for i in range(d)]
    return "\n".join(lines) + "\n"


def content_hash(P: Polytope) -> str:
    """SHA-256 of the canonical file form, so comments and layout do not matter."""
    return hashlib.sha256(format_polytope(P).encode()).hexdigest()


# ---------------------------------------------------------------------------
# analysis pipeline


def default_strategy(num_points: int) -> str:
    return "cross-check" if num_points <= 14 else "shortcut"


@dataclass(frozen=True)
class AnalysisOptions:
    strategy: str | None = None  # None: chosen by lattice point count
    budget_seconds: float | None = None
    force_depth: bool = False


@dataclass
class AnalysisReport:
    """Outcome of every pipeline stage; values are plain JSON types.

    Non-boolean statuses are strings such as ``"skipped"``,
    ``"budget exceeded"`` or ``"error: ..."``.
    """

    identity: dict
    reflexive: bool | str
    normal: bool | str
    witness: dict | None
    very_ample: bool | str
    spans_lattice: bool | str
    depth: int | str
    depth_method: str | None
    dual_normal: bool | str
    timings: dict = field(default_factory=dict)

    def without_timings(self) -> dict:
        out = asdict(self)
        out.pop("timings")
        return out


def _stage(timings: dict, name: str, fn):
    t0 = time.perf_counter()
    try:
        return fn()
    except BudgetExceeded:
        return BUDGET_EXCEEDED
    except (ValueError, ArithmeticError) as exc:
        return f"error: {exc}"
    finally:
        timings[name] = round(time.perf_counter() - t0, 6)


def analyze(P: Polytope, options: AnalysisOptions | None = None) -> AnalysisReport:
    """Run reflexivity, normality, depth and dual normality on ``P``, in that order."""
    options = options or AnalysisOptions()
    timings: dict = {}
    points = P.lattice_points
    identity = {
        "hash": content_hash(P),
        "ambient_dim": P.ambient_dim,
        "dim": P.dim,
        "vertices": len(P.vertices),
        "lattice_points": len(points),
    }
    reflexive = _stage(timings, "reflexive", lambda: is_reflexive(P))
    cert = _stage(timings, "normal", lambda: is_normal(P))
    normal = cert if isinstance(cert, str) else bool(cert)
    witness = None
    if not isinstance(cert, str) and cert.witness is not None:
        witness = {"point": list(cert.witness[0]), "dilation": cert.witness[1]}
    # normal polytopes are very ample; no need for the vertex cones
    very_ample = True if normal is True else _stage(timings, "very_ample", lambda: bool(is_very_ample(P)))
    spans = _stage(timings, "spans_lattice", lambda: spans_lattice(P))

    strategy = options.strategy or default_strategy(len(points))
    budget = Budget.from_env(options.budget_seconds)

    def run_depth():
        if normal is True and not options.force_depth:
            return DepthResult(P.dim + 1, "hochster-normal")
        return depth(P, strategy, budget)

    res = _stage(timings, "depth", run_depth)
    depth_value, depth_method = (res, None) if isinstance(res, str) else (res.value, res.method)

    def run_dual():
        return bool(is_normal(dual_polytope(P)))

    dual = _stage(timings, "dual_normal", run_dual) if reflexive is True else SKIPPED
    return AnalysisReport(
        identity, reflexive, normal, witness, very_ample, spans, depth_value, depth_method, dual, timings
    )


def emit_report(r: AnalysisReport, fmt: str = "text") -> bytes:
    """``"structured"`` gives JSON with a fixed field order, ``"text"`` a table."""
    data = asdict(r)
    if fmt == "structured":
        doc = {k: data[k] for k in REPORT_FIELDS}
        return (json.dumps(doc, indent=2) + "\n").encode()
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    ident = r.identity
    rows = [
        ("input", ident["hash"][:16]),
        ("dimension", f"{ident['dim']} (ambient {ident['ambient_dim']})"),
        ("vertices", ident["vertices"]),
        ("lattice points", ident["lattice_points"]),
        ("reflexive", r.reflexive),
        ("normal", r.normal),
    ]
    if r.witness:
        rows.append(("witness", f"{tuple(r.witness['point'])} in {r.witness['dilation']}P"))
    rows += [
        ("very ample", r.very_ample),
        ("spans lattice", r.spans_lattice),
        ("depth", r.depth if r.depth_method is None else f"{r.depth} ({r.depth_method})"),
        ("dual normal", r.dual_normal),
    ]
    width = max(len(k) for k, _ in rows)
    lines = [f"{k.ljust(width)}  {_show(v)}" for k, v in rows]
    lines.append("timings".ljust(width) + "  " + ", ".join(f"{k} {v:.3f}s" for k, v in r.timings.items()))
    return ("\n".join(lines) + "\n").encode()


def _show(v) -> str:
    if v is True:
        return "yes"
    if v is False:
        return "no"
    return str(v)


def parse_report(data: bytes | str) -> AnalysisReport:
    """Inverse of the structured form of :func:`emit_report`."""
    doc = json.loads(data)
    missing = [k for k in REPORT_FIELDS if k not in doc]
    if missing:
        raise ValueError(f"report lacks fields {missing}")
    return AnalysisReport(**{k: doc[k] for k in REPORT_FIELDS})


def rational_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
