"""Lattice polytopes: convex hulls, duality, lattice points, constructions.

A :class:`Polytope` carries both representations.  The V-representation is
the irredundant vertex list (lexicographically sorted); the H-representation
is a list of facet inequalities ``a . x <= b`` with ``a`` a primitive integer
vector, plus affine equations when the polytope is not full dimensional.
Everything is exact: vertices are ints or Fractions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import ceil, floor, gcd, lcm
from typing import Iterable, Sequence

from . import linalg

__all__ = [
    "FacetInequality",
    "Polytope",
    "PolytopeError",
    "hull_from_vertices",
    "cone_facets",
    "dual_polytope",
    "is_reflexive",
    "lattice_points",
    "contains",
    "bipyramid",
    "lattice_pyramid",
    "product_with_cube",
    "cube",
    "cross_polytope",
    "unit_simplex",
]


class PolytopeError(ValueError):
    """Operation not defined for this polytope (e.g. not full dimensional)."""


def _num(x):
    """Normalize a rational to int when it is integral."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


@dataclass(frozen=True, order=True)
class FacetInequality:
    """The half-space ``normal . x <= rhs`` (or hyperplane, for equations)."""

    normal: tuple[int, ...]
    rhs: int | Fraction

    def __post_init__(self):
        if not any(self.normal):
            raise ValueError("zero facet normal")

    def value(self, x) -> Fraction | int:
        return sum(a * xi for a, xi in zip(self.normal, x))

    def slack(self, x, N=1):
        """``N * rhs - normal . x``; non-negative on ``N * P``."""
        return N * self.rhs - self.value(x)

    def __str__(self) -> str:
        terms = " ".join(f"{a:+d}*x{i + 1}" for i, a in enumerate(self.normal) if a)
        return f"{terms} <= {self.rhs}"


@dataclass(frozen=True)
class Polytope:
    """A convex polytope given by vertices and inequalities.

    Use :func:`hull_from_vertices` (or the constructions in this module)
    rather than building instances directly.
    """

    ambient_dim: int
    vertices: tuple[tuple, ...]
    facets: tuple[FacetInequality, ...]
    equations: tuple[FacetInequality, ...] = ()
    dim: int = field(default=-1)

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    @property
    def is_lattice(self) -> bool:
        return all(isinstance(x, int) for v in self.vertices for x in v)

    @cached_property
    def lattice_points(self) -> tuple[tuple[int, ...], ...]:
        return _enumerate_lattice_points(self)

    def contains(self, x, N: int = 1) -> bool:
        return contains(self, x, N)

    def __repr__(self) -> str:
        kind = "lattice polytope" if self.is_lattice else "rational polytope"
        return (
            f"<{self.dim}-dimensional {kind} in R^{self.ambient_dim} with "
            f"{len(self.vertices)} vertices and {len(self.facets)} facets>"
        )


# ---------------------------------------------------------------------------
# double description


def _homogenize(p) -> tuple[int, ...]:
    """(p, 1) scaled to a primitive integer vector."""
    q = [Fraction(x) for x in p] + [Fraction(1)]
    den = 1
    for x in q:
        den = lcm(den, x.denominator)
    return linalg.primitive([int(x * den) for x in q])


def cone_facets(gens: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Inner facet normals of a full-dimensional cone.

    Double description: the returned primitive vectors ``c`` are the extreme
    rays of ``{c : c . g >= 0 for all g in gens}``.  Generators are inserted in
    lexicographic order so the output is deterministic; it is sorted.
    """
    gens = sorted({tuple(int(x) for x in g) for g in gens})
    if not gens:
        raise ValueError("no generators")
    D = len(gens[0])
    # initial simplicial cone
    basis: list[int] = []
    for i, g in enumerate(gens):
        if linalg.rank([gens[j] for j in basis] + [g]) > len(basis):
            basis.append(i)
            if len(basis) == D:
                break
    if len(basis) < D:
        raise ValueError("cone is not full dimensional")
    B = [gens[i] for i in basis]
    Binv_cols = linalg.transpose(_rational_inverse(B))
    rays = []
    for j, col in enumerate(Binv_cols):
        den = 1
        for x in col:
            den = lcm(den, x.denominator)
        r = linalg.primitive([int(x * den) for x in col])
        tight = frozenset(basis[k] for k in range(D) if k != j)
        rays.append((r, tight))

    for i, g in enumerate(gens):
        if i in basis:
            continue
        vals = [sum(a * b for a, b in zip(g, r)) for r, _ in rays]
        neg = [k for k, s in enumerate(vals) if s < 0]
        if not neg:
            rays = [(r, t | {i}) if vals[k] == 0 else (r, t) for k, (r, t) in enumerate(rays)]
            continue
        pos = [k for k, s in enumerate(vals) if s > 0]
        new = []
        for p in pos:
            rp, tp = rays[p]
            for n in neg:
                rn, tn = rays[n]
                common = tp & tn
                if len(common) < D - 2:
                    continue
                if any(
                    k != p and k != n and common <= rays[k][1] for k in range(len(rays))
                ):
                    continue
                sp, sn = vals[p], vals[n]
                r = linalg.primitive([sp * a - sn * b for a, b in zip(rn, rp)])
                new.append((r, common | {i}))
        rays = [
            (r, t | {i}) if vals[k] == 0 else (r, t)
            for k, (r, t) in enumerate(rays)
            if vals[k] >= 0
        ] + new
    return sorted(r for r, _ in rays)


def _rational_inverse(B):
    n = len(B)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(B)]
    R, pivots = linalg._row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in R[:n]]


def hull_from_vertices(points: Iterable[Sequence]) -> Polytope:
    """Convex hull of finitely many points (ints or Fractions).

    Computes the facets by double description on the homogenized cone and
    keeps exactly those input points that are vertices.
    """
    pts = sorted({tuple(_num(x) for x in p) for p in points})
    if not pts:
        raise ValueError("empty point set")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("points of different dimensions")
    gens = [_homogenize(p) for p in pts]
    r = linalg.rank(gens)
    dim = r - 1

    # coordinates in which the homogenized cone is full dimensional
    cols = _independent_columns(gens, r)
    proj = [[g[c] for c in cols] for g in gens]

    equations = []
    if r < d + 1:
        for v in linalg.rational_kernel(gens):
            den = 1
            for x in v:
                den = lcm(den, x.denominator)
            c = linalg.primitive([int(x * den) for x in v])
            a, c0 = c[:d], c[d]
            equations.append(_inequality(a, -c0))
        equations = _canonical_equations(equations, d)

    facets = []
    normals_proj = []
    if r >= 2:
        for cp in cone_facets(proj):
            c = [0] * (d + 1)
            for k, col in enumerate(cols):
                c[col] = cp[k]
            a = [-x for x in c[:d]]
            if not any(a):
                continue
            facets.append(_inequality(a, c[d]))
            normals_proj.append(cp)

    vertices = []
    for p, g in zip(pts, proj):
        if r == 1:
            vertices.append(p)
            continue
        tight = [n for n in normals_proj if sum(a * b for a, b in zip(n, g)) == 0]
        if tight and linalg.rank(tight) == r - 1:
            vertices.append(p)
    return Polytope(
        ambient_dim=d,
        vertices=tuple(vertices),
        facets=tuple(sorted(set(facets))),
        equations=tuple(equations),
        dim=dim,
    )


def _independent_columns(G, r):
    cols: list[int] = []
    T = linalg.transpose(G)
    for c in range(len(T)):
        if linalg.rank([T[k] for k in cols] + [T[c]]) > len(cols):
            cols.append(c)
            if len(cols) == r:
                break
    return cols


def _inequality(a, b) -> FacetInequality:
    g = 0
    for x in a:
        g = gcd(g, int(x))
    a = tuple(int(x) // g for x in a)
    return FacetInequality(a, _num(Fraction(b) / g))


def _canonical_equations(eqs, d):
    rows = [list(e.normal) + [e.rhs] for e in eqs]
    R, _ = linalg._row_reduce(rows)
    out = []
    for row in R:
        if not any(row[:d]):
            continue
        den = 1
        for x in row:
            den = lcm(den, Fraction(x).denominator)
        ints = [int(Fraction(x) * den) for x in row]
        out.append(_inequality(ints[:d], ints[d]))
    return tuple(out)


# ---------------------------------------------------------------------------
# queries


def contains(P: Polytope, x: Sequence, N: int = 1) -> bool:
    """Whether ``x`` lies in the dilation ``N * P``."""
    if N < 1:
        raise ValueError("dilation factor must be positive")
    if len(x) != P.ambient_dim:
        raise ValueError("point has wrong dimension")
    return all(f.value(x) <= N * f.rhs for f in P.facets) and all(
        e.value(x) == N * e.rhs for e in P.equations
    )


def _enumerate_lattice_points(P: Polytope) -> tuple[tuple[int, ...], ...]:
    lo = [ceil(min(v[i] for v in P.vertices)) for i in range(P.ambient_dim)]
    hi = [floor(max(v[i] for v in P.vertices)) for i in range(P.ambient_dim)]
    ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
    return tuple(x for x in itertools.product(*ranges) if contains(P, x))


def lattice_points(P: Polytope) -> tuple[tuple[int, ...], ...]:
    """``P`` intersected with Z^d, lexicographically sorted.

    Bounding box plus H-representation filter; fine for the small polytopes
    handled here, exponential in the dimension in general.
    """
    return P.lattice_points


def _require_full_dim(P: Polytope, what: str):
    if not P.is_full_dimensional:
        raise PolytopeError(f"{what} needs a full-dimensional polytope (dim {P.dim} < {P.ambient_dim})")


def dual_polytope(P: Polytope) -> Polytope:
    """``{x : <x, y> <= 1 for all y in P}``; vertices may be rational."""
    _require_full_dim(P, "dual polytope")
    if any(f.rhs <= 0 for f in P.facets):
        raise PolytopeError("origin not interior")
    verts = [tuple(_num(Fraction(a) / f.rhs) for a in f.normal) for f in P.facets]
    return hull_from_vertices(verts)


def is_reflexive(P: Polytope) -> bool:
    """Origin interior and every facet of the form ``a . x <= 1``, ``a`` integral."""
    _require_full_dim(P, "reflexivity")
    if not P.is_lattice:
        return False
    return all(f.rhs == 1 for f in P.facets)


# ---------------------------------------------------------------------------
# constructions


def bipyramid(P: Polytope) -> Polytope:
    """conv of ``P x {0}`` and the two apexes ``(0,...,0,+-1)``."""
    _require_full_dim(P, "bipyramid")
    d = P.ambient_dim
    pts = [tuple(v) + (0,) for v in P.vertices]
    pts += [(0,) * d + (1,), (0,) * d + (-1,)]
    return hull_from_vertices(pts)


def lattice_pyramid(P: Polytope) -> Polytope:
    """conv of ``P x {0}`` and the apex ``(0,...,0,1)``."""
    d = P.ambient_dim
    pts = [tuple(v) + (0,) for v in P.vertices] + [(0,) * d + (1,)]
    return hull_from_vertices(pts)


def product_with_cube(P: Polytope, k: int) -> Polytope:
    """``P x [-1, 1]^k``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return P
    pts = [tuple(v) + eps for v in P.vertices for eps in itertools.product((-1, 1), repeat=k)]
    return hull_from_vertices(pts)


def cube(d: int) -> Polytope:
    """``[-1, 1]^d``."""
    return hull_from_vertices(itertools.product((-1, 1), repeat=d))


def cross_polytope(d: int) -> Polytope:
    pts = []
    for i in range(d):
        for s in (1, -1):
            v = [0] * d
            v[i] = s
            pts.append(v)
    return hull_from_vertices(pts)


def unit_simplex(d: int) -> Polytope:
    """conv{0, e_1, ..., e_d}."""
    pts = [[0] * d]
    for i in range(d):
        v = [0] * d
        v[i] = 1
        pts.append(v)
    return hull_from_vertices(pts)
