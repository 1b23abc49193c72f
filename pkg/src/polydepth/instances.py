"""Explicit polytopes used throughout the tests and demos."""

from __future__ import annotations

from .polytope import Polytope, hull_from_vertices


def _columns(rows):
    return [tuple(col) for col in zip(*rows)]


# 4-dimensional reflexive polytope that is very ample but not normal
NON_NORMAL_VERTICES = _columns([
    [0, 1, 0, 0, 1, 0, 1, 1, -1],
    [0, 0, 1, 0, 0, 1, 1, 1, -1],
    [0, 0, 0, 1, 1, 1, 4, 5, -3],
    [1, 1, 1, 1, 1, 1, 1, 1, -2],
])

# reflexive 4-polytopes with toric ring depth 2, 3, 4
DEPTH2_VERTICES = _columns([
    [1, 0, 0, 0, 0, 1, 1, -2, -3],
    [0, 1, 0, 0, -1, 0, -1, -1, -1],
    [0, 0, 1, 0, -1, 1, -1, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, -1, -1],
])
DEPTH3_VERTICES = _columns([
    [1, 0, 0, 0, -3, 3],
    [0, 1, 0, 0, -2, -1],
    [0, 0, 1, 0, 0, -3],
    [0, 0, 0, 1, 0, -1],
])
DEPTH4_VERTICES = _columns([
    [1, 0, 0, 0, -1, -2],
    [0, 1, 0, 0, -1, -1],
    [0, 0, 1, 0, -1, 2],
    [0, 0, 0, 1, 0, -2],
])


def non_normal_polytope() -> Polytope:
    return hull_from_vertices(NON_NORMAL_VERTICES)


def depth2_polytope() -> Polytope:
    return hull_from_vertices(DEPTH2_VERTICES)


def depth3_polytope() -> Polytope:
    return hull_from_vertices(DEPTH3_VERTICES)


def depth4_polytope() -> Polytope:
    return hull_from_vertices(DEPTH4_VERTICES)


def segment(a: int, b: int) -> Polytope:
    return hull_from_vertices([(a,), (b,)])


def reeve_simplex() -> Polytope:
    """conv{0, e1, e2, (1, 1, 2)}: lattice points do not span Z^4 affinely."""
    return hull_from_vertices([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)])
