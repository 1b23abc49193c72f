"""Affine semigroups of lattice polytopes.

Hilbert bases of rational cones (placing triangulation plus fundamental
parallelepipeds), normality, very ampleness, the lattice spanning condition
and explicit decompositions ``x = a_1 + ... + a_N``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

from . import linalg
from .polytope import Polytope, _rational_inverse, cone_facets, contains, lattice_points

__all__ = [
    "Cone",
    "HilbertBasisResult",
    "NormalityCertificate",
    "VeryAmplenessCertificate",
    "NotPointedError",
    "make_cone",
    "cone_over_polytope",
    "vertex_cone",
    "triangulate",
    "parallelepiped_points",
    "hilbert_basis",
    "is_normal",
    "is_very_ample",
    "spans_lattice",
    "decompose_point",
]


class NotPointedError(ValueError):
    """The cone contains a line."""


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class Cone:
    """A full-dimensional pointed rational cone.

    ``generators`` are the primitive extreme rays, ``facets`` the primitive
    inner facet normals.  ``grading`` is an integral linear form positive on
    the cone minus the origin; for cones over polytopes it is the last
    coordinate.
    """

    ambient_dim: int
    generators: tuple[tuple[int, ...], ...]
    facets: tuple[tuple[int, ...], ...]
    grading: tuple[int, ...]

    def contains(self, x) -> bool:
        return all(_dot(c, x) >= 0 for c in self.facets)

    def degree(self, x) -> int:
        return _dot(self.grading, x)


def make_cone(vectors: Sequence[Sequence[int]], grading=None) -> Cone:
    """Cone generated by integer vectors (need not be irredundant)."""
    vecs = sorted({linalg.primitive(v) for v in vectors if any(v)})
    if not vecs:
        raise ValueError("no nonzero generators")
    D = len(vecs[0])
    facets = cone_facets(vecs)
    if linalg.rank(facets) < D:
        raise NotPointedError("cone is not pointed")
    rays = []
    for v in vecs:
        tight = [c for c in facets if _dot(c, v) == 0]
        if len(tight) >= D - 1 and linalg.rank(tight) == D - 1:
            rays.append(v)
    if grading is None:
        grading = tuple(sum(col) for col in zip(*facets))
    grading = tuple(grading)
    if any(_dot(grading, r) <= 0 for r in rays):
        raise ValueError("grading is not positive on the cone")
    return Cone(D, tuple(rays), tuple(facets), grading)


def cone_over_polytope(P: Polytope) -> Cone:
    """The cone spanned by ``(v, 1)`` for the vertices ``v`` of ``P``."""
    if not P.is_lattice:
        raise ValueError("cone over a non-lattice polytope")
    gens = [tuple(v) + (1,) for v in P.vertices]
    return make_cone(gens, grading=(0,) * P.ambient_dim + (1,))


def vertex_cone(P: Polytope, v) -> Cone:
    """Cone generated by ``p - v`` over the lattice points ``p`` of ``P``."""
    vecs = [tuple(a - b for a, b in zip(p, v)) for p in lattice_points(P)]
    return make_cone(vecs)


# ---------------------------------------------------------------------------
# triangulation and parallelepipeds


def _hyperplane_normal(vectors):
    (k,) = linalg.rational_kernel(vectors)
    den = 1
    for x in k:
        den = lcm(den, x.denominator)
    return linalg.primitive([int(x * den) for x in k])


def triangulate(C: Cone) -> list[tuple[int, ...]]:
    """Placing triangulation of ``C`` into simplicial cones.

    Returns index tuples into ``C.generators``.  Generators are placed in
    lexicographic order (the order of ``C.generators``).
    """
    gens = C.generators
    D = C.ambient_dim
    start: list[int] = []
    for i, g in enumerate(gens):
        if linalg.rank([gens[j] for j in start] + [g]) > len(start):
            start.append(i)
            if len(start) == D:
                break
    simplices = [tuple(start)]
    # boundary facet -> inward normal (normal . opposite vertex > 0)
    boundary: dict[frozenset, tuple[int, ...]] = {}

    def add_simplex(s):
        for j in s:
            F = frozenset(x for x in s if x != j)
            if F in boundary:
                del boundary[F]
                continue
            n = _hyperplane_normal([gens[x] for x in sorted(F)])
            if _dot(n, gens[j]) < 0:
                n = tuple(-x for x in n)
            boundary[F] = n

    add_simplex(simplices[0])
    for i in range(len(gens)):
        if i in start:
            continue
        g = gens[i]
        visible = [F for F, n in boundary.items() if _dot(n, g) < 0]
        new = [tuple(sorted(F | {i})) for F in visible]
        for s in new:
            add_simplex(s)
        simplices.extend(new)
    return simplices


def parallelepiped_points(vectors) -> list[tuple[int, ...]]:
    """Lattice points of ``{sum l_i v_i : 0 <= l_i < 1}`` (linearly independent ``v``).

    Enumerates Z^D / span(v) through the Smith form of the generator matrix.
    """
    M = linalg.transpose([list(v) for v in vectors])  # columns are generators
    dec = linalg.snf(M)
    d = [dec.D[i][i] for i in range(len(M))]
    Uinv = [[int(x) for x in row] for row in _rational_inverse(dec.U)]
    Minv = _rational_inverse(M)
    pts = []
    for ks in itertools.product(*(range(x) for x in d)):
        y = [sum(Uinv[r][c] * ks[c] for c in range(len(ks))) for r in range(len(ks))]
        lam = [sum(Minv[r][c] * y[c] for c in range(len(y))) for r in range(len(y))]
        frac = [x - (x.numerator // x.denominator) for x in lam]
        pts.append(tuple(int(sum(M[r][c] * frac[c] for c in range(len(frac)))) for r in range(len(M))))
    return sorted(pts)


@dataclass(frozen=True)
class HilbertBasisResult:
    """Minimal generating set of ``C`` intersected with the lattice."""

    cone: Cone
    elements: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]

    @property
    def heights(self) -> tuple[int, ...]:
        """Last coordinates (the dilation level for cones over polytopes)."""
        return tuple(e[-1] for e in self.elements)


def hilbert_basis(C: Cone) -> HilbertBasisResult:
    """Hilbert basis of ``C`` with respect to Z^D.

    Candidates are the generators plus the parallelepiped points of every
    simplicial cone of a triangulation; they are then reduced in increasing
    degree (ties broken lexicographically).
    """
    candidates = set(C.generators)
    for simplex in triangulate(C):
        for p in parallelepiped_points([C.generators[i] for i in simplex]):
            if any(p):
                candidates.add(p)
    ordered = sorted(candidates, key=lambda x: (C.degree(x), x))
    basis: list[tuple[int, ...]] = []
    for x in ordered:
        dx = C.degree(x)
        reducible = any(
            C.degree(h) < dx and C.contains([a - b for a, b in zip(x, h)]) for h in basis
        )
        if not reducible:
            basis.append(x)
    return HilbertBasisResult(C, tuple(basis), tuple(C.degree(h) for h in basis))


# ---------------------------------------------------------------------------
# normality and very ampleness


@dataclass(frozen=True)
class NormalityCertificate:
    """Verdict plus, when false, a point of ``N P`` that is not a sum of ``N`` lattice points."""

    verdict: bool
    witness: tuple[tuple[int, ...], int] | None = None
    hilbert_basis: HilbertBasisResult | None = field(default=None, repr=False, compare=False)

    def __bool__(self) -> bool:
        return self.verdict


def is_normal(P: Polytope) -> NormalityCertificate:
    """IDP test: every Hilbert basis element of the cone over ``P`` has height 1."""
    if not P.is_full_dimensional:
        raise ValueError("normality test needs a full-dimensional polytope")
    hb = hilbert_basis(cone_over_polytope(P))
    high = [h for h in hb.elements if h[-1] > 1]
    if not high:
        return NormalityCertificate(True, None, hb)
    h = min(high, key=lambda x: (x[-1], x))
    return NormalityCertificate(False, (h[:-1], h[-1]), hb)


@dataclass(frozen=True)
class VeryAmplenessCertificate:
    """Verdict plus, per failing vertex, the Hilbert basis elements that are
    not of the form ``p - v`` with ``p`` a lattice point."""

    verdict: bool
    failing: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.verdict


def is_very_ample(P: Polytope) -> VeryAmplenessCertificate:
    """Vertex-cone criterion.

    ``P`` is very ample iff for each vertex ``v`` the semigroup generated by
    ``P cap Z^d - v`` is saturated, i.e. every Hilbert basis element of its
    cone is itself such a difference.
    """
    if not P.is_full_dimensional:
        raise ValueError("very ampleness test needs a full-dimensional polytope")
    pts = lattice_points(P)
    failing = {}
    for v in P.vertices:
        diffs = {tuple(a - b for a, b in zip(p, v)) for p in pts}
        hb = hilbert_basis(vertex_cone(P, v))
        bad = [h for h in hb.elements if h not in diffs]
        if bad:
            failing[v] = tuple(bad)
    return VeryAmplenessCertificate(not failing, failing)


def spans_lattice(P: Polytope) -> bool:
    """Whether the vectors ``(a, 1)``, ``a`` in ``P cap Z^d``, span Z^(d+1)."""
    pts = lattice_points(P)
    d = P.ambient_dim
    A = [[p[i] for p in pts] for i in range(d)] + [[1] * len(pts)]
    factors = linalg.invariant_factors(A)
    return len(factors) == d + 1 and all(f == 1 for f in factors)


def decompose_point(x, N: int, P: Polytope) -> list[tuple[int, ...]] | None:
    """Write ``x`` in ``N P`` as a sum of ``N`` lattice points of ``P``.

    Exhaustive memoized search; returns ``None`` when no decomposition exists.
    """
    x = tuple(int(c) for c in x)
    if N < 1 or not contains(P, x, N):
        raise ValueError("point not in dilation")
    pts = lattice_points(P)

    @lru_cache(maxsize=None)
    def search(y, k):
        if k == 1:
            return (y,) if y in pts_set else None
        for a in pts:
            z = tuple(p - q for p, q in zip(y, a))
            if contains(P, z, k - 1):
                rest = search(z, k - 1)
                if rest is not None:
                    return (a,) + rest
        return None

    pts_set = set(pts)
    found = search(x, N)
    return list(found) if found is not None else None
