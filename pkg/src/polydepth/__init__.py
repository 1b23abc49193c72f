"""Exact tools for lattice polytopes and the depth of their toric rings."""

from .algebra.budget import Budget, BudgetExceeded
from .algebra.depth import DepthResult, depth, is_cohen_macaulay, minimal_free_resolution
from .algebra.toric import ToricPresentation, toric_ideal, toric_presentation
from .io import analyze, emit_report, format_polytope, parse_polytope_file
from .polytope import (
    Polytope,
    bipyramid,
    cube,
    dual_polytope,
    hull_from_vertices,
    is_reflexive,
    lattice_points,
    lattice_pyramid,
    product_with_cube,
)
from .semigroup import decompose_point, hilbert_basis, is_normal, is_very_ample, spans_lattice

__all__ = [
    "Budget",
    "BudgetExceeded",
    "DepthResult",
    "Polytope",
    "ToricPresentation",
    "analyze",
    "bipyramid",
    "cube",
    "decompose_point",
    "depth",
    "dual_polytope",
    "emit_report",
    "format_polytope",
    "hilbert_basis",
    "hull_from_vertices",
    "is_cohen_macaulay",
    "is_normal",
    "is_reflexive",
    "is_very_ample",
    "lattice_points",
    "lattice_pyramid",
    "minimal_free_resolution",
    "parse_polytope_file",
    "product_with_cube",
    "spans_lattice",
    "toric_ideal",
    "toric_presentation",
]
