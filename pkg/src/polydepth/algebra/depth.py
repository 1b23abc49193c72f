"""Depth of toric rings ``K[P]`` over the rationals.

``exact`` computes the minimal free resolution of ``K[P] = S / I_P`` and
uses Auslander-Buchsbaum (``depth = n - pd``).  ``shortcut`` first tries
structural facts: normal polytopes give Cohen-Macaulay rings, non-normal very
ample polytopes whose lattice points span the lattice have depth 1, and the
bipyramid over a reflexive polytope adds 1 to the depth.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .. import linalg
from ..polytope import Polytope, hull_from_vertices, is_reflexive
from ..semigroup import is_normal, is_very_ample, spans_lattice
from .budget import Budget, BudgetExceeded
from .groebner import is_groebner, reduce
from .resolution import Resolution, free_resolution
from .toric import Binomial, ToricPresentation, binomial_to_poly, toric_ideal, toric_presentation

__all__ = [
    "DepthResult",
    "CrossCheckError",
    "InvariantError",
    "STRATEGIES",
    "minimal_free_resolution",
    "check_resolution",
    "check_toric_basis",
    "depth",
    "is_cohen_macaulay",
    "recognize_bipyramid",
]

log = logging.getLogger(__name__)

STRATEGIES = ("exact", "shortcut", "cross-check")


class CrossCheckError(AssertionError):
    """The exact and the shortcut depth disagree."""


class InvariantError(AssertionError):
    """A computed resolution failed one of its self-checks."""


@dataclass(frozen=True)
class DepthResult:
    value: int
    method: str  # resolution | hochster-normal | germany-shortcut | bipyramid-formula
    details: dict = field(default_factory=dict, compare=False)


def minimal_free_resolution(T: ToricPresentation, budget: Budget | None = None) -> Resolution:
    """Minimal graded free resolution of ``S / I_P`` over Q."""
    budget = budget or Budget()
    gb = toric_ideal(T, budget=budget)
    return free_resolution([binomial_to_poly(b) for b in gb], T.num_vars, budget)


def check_resolution(R: Resolution, T: ToricPresentation | None = None):
    """Raise :class:`InvariantError` unless ``R`` passes the standard checks.

    Maps compose to zero, no unit entries survive, the alternating sum of
    ranks vanishes (``S / I`` has rank 0 when ``I != 0``), and, for toric
    presentations, every map is homogeneous in the fine grading.
    """
    if not R.composes_to_zero():
        raise InvariantError("consecutive maps do not compose to zero")
    if R.has_unit_entries():
        raise InvariantError("resolution is not minimal (constant entry)")
    if R.length > 0 and R.euler_characteristic() != 0:
        raise InvariantError(f"alternating Betti sum is {R.euler_characteristic()}, not 0")
    if T is not None:
        for k in range(1, len(R.maps)):
            for j, img in enumerate(R.maps[k]):
                target = T.multidegree(R.exponents[k][j])
                for (i, m), _ in img.items():
                    src = T.multidegree(tuple(a + b for a, b in zip(m, R.exponents[k - 1][i])))
                    if src != target:
                        raise InvariantError("map is not homogeneous in the fine grading")


def check_toric_basis(T: ToricPresentation, gb) -> None:
    """Raise :class:`InvariantError` unless ``gb`` is a toric Groebner basis of ``T``.

    Checks kernel membership and s-homogeneity of every generator, Buchberger's
    criterion, and that every lattice basis binomial of the kernel reduces to 0.
    """
    polys = [binomial_to_poly(b) for b in gb]
    for b in gb:
        if not T.in_kernel(b.vector) or not b.is_homogeneous():
            raise InvariantError(f"generator {b} is not in the toric ideal")
    if not is_groebner(polys):
        raise InvariantError("S-pair criterion fails for the toric basis")
    for u in linalg.kernel_basis(T.matrix):
        if reduce(binomial_to_poly(Binomial.from_vector(u)), polys):
            raise InvariantError("a kernel binomial is not in the computed ideal")


def _exact(P: Polytope, budget: Budget) -> DepthResult:
    T = toric_presentation(P)
    gb = toric_ideal(T, budget=budget)
    check_toric_basis(T, gb)
    R = free_resolution([binomial_to_poly(b) for b in gb], T.num_vars, budget)
    check_resolution(R, T)
    n = T.num_vars
    value = n - R.projective_dimension
    if not 1 <= value <= P.dim + 1:
        raise InvariantError(f"depth {value} outside [1, {P.dim + 1}]")
    return DepthResult(
        value,
        "resolution",
        {"num_vars": n, "projective_dimension": R.projective_dimension, "betti": R.ranks},
    )


def recognize_bipyramid(P: Polytope) -> Polytope | None:
    """The reflexive base ``Q`` if ``P`` is ``bipyr(Q)`` along some coordinate axis."""
    if not P.is_full_dimensional or P.ambient_dim < 2:
        return None
    d = P.ambient_dim
    verts = set(P.vertices)
    for k in range(d):
        up = tuple(int(i == k) for i in range(d))
        down = tuple(-x for x in up)
        if up not in verts or down not in verts:
            continue
        rest = [v for v in P.vertices if v not in (up, down)]
        if any(v[k] != 0 for v in rest):
            continue
        Q = hull_from_vertices([v[:k] + v[k + 1:] for v in rest])
        if Q.is_full_dimensional and is_reflexive(Q):
            return Q
    return None


def _shortcut(P: Polytope, budget: Budget) -> DepthResult:
    normal = is_normal(P)
    if normal:
        return DepthResult(P.dim + 1, "hochster-normal", {})
    if is_very_ample(P) and spans_lattice(P):
        return DepthResult(1, "germany-shortcut", {"witness": normal.witness})
    base = recognize_bipyramid(P)
    if base is not None:
        inner = _shortcut(base, budget)
        return DepthResult(inner.value + 1, "bipyramid-formula", {"base": inner.method})
    return _exact(P, budget)


def depth(P: Polytope, strategy: str = "exact", budget: Budget | None = None) -> DepthResult:
    """Depth of ``K[P]``.

    ``strategy`` is ``"exact"`` (free resolution), ``"shortcut"`` (structural
    results first, resolution as fallback) or ``"cross-check"`` (both, which
    must agree).  Raises :class:`BudgetExceeded` when the resolution does not
    finish within ``budget``.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if not P.is_full_dimensional or not P.is_lattice:
        raise ValueError("depth needs a full-dimensional lattice polytope")
    budget = (budget or Budget()).restart()
    if strategy == "exact":
        return _exact(P, budget)
    fast = _shortcut(P, budget)
    if strategy == "shortcut" or fast.method == "resolution":
        return fast
    try:
        slow = _exact(P, budget)
    except BudgetExceeded:
        log.warning("cross-check skipped: resolution exceeded its budget")
        return DepthResult(fast.value, fast.method, {**fast.details, "cross_check": "budget exceeded"})
    if slow.value != fast.value:
        raise CrossCheckError(
            f"resolution gives depth {slow.value}, {fast.method} gives {fast.value}"
        )
    return DepthResult(fast.value, fast.method, {**slow.details, "cross_check": "agree"})


def is_cohen_macaulay(P: Polytope, strategy: str = "shortcut", budget: Budget | None = None) -> bool:
    """Whether ``depth K[P]`` equals the Krull dimension ``dim P + 1``."""
    return depth(P, strategy, budget).value == P.dim + 1
