import pytest

from polydepth import instances
from polydepth.algebra.budget import Budget, BudgetExceeded
from polydepth.algebra.depth import depth, is_cohen_macaulay, recognize_bipyramid
from polydepth.polytope import bipyramid, cross_polytope, cube, hull_from_vertices


def test_nonnormal_depth_one(nonnormal_polytope):
    fast = depth(nonnormal_polytope, "shortcut")
    assert (fast.value, fast.method) == (1, "germany-shortcut")
    assert depth(nonnormal_polytope, "cross-check").details["cross_check"] == "agree"


@pytest.mark.parametrize("name, expected", [("P1", 2), ("P2", 3), ("P3", 4)])
def test_example_depths(example_polytopes, name, expected):
    r = depth(example_polytopes[name], "exact")
    assert r.value == expected and r.method == "resolution"
    assert r.value + r.details["projective_dimension"] == r.details["num_vars"]


def test_cube_is_cohen_macaulay():
    r = depth(cube(4), "shortcut")
    assert (r.value, r.method) == (5, "hochster-normal")
    assert is_cohen_macaulay(cube(4))


def test_p3_not_cohen_macaulay(example_polytopes):
    assert not is_cohen_macaulay(example_polytopes["P3"])


def test_bipyramid_formula(example_polytopes):
    seg = instances.segment(0, 2)
    assert depth(bipyramid(seg), "exact").value == depth(seg, "exact").value + 1
    B = bipyramid(example_polytopes["P3"])
    assert recognize_bipyramid(B) is not None
    fast = depth(B, "shortcut")
    assert (fast.value, fast.method) == (5, "bipyramid-formula")
    assert depth(B, "exact").value == 5


def test_low_dimensional_reflexive_are_cohen_macaulay():
    for P in [cube(2), cross_polytope(3), hull_from_vertices([(1, 0), (0, 1), (-1, -1)])]:
        assert is_cohen_macaulay(P, "cross-check")


def test_budget_propagates(example_polytopes):
    with pytest.raises(BudgetExceeded):
        depth(example_polytopes["P1"], "exact", Budget(seconds=0.0))


def test_rejects_lower_dimensional():
    with pytest.raises(ValueError):
        depth(hull_from_vertices([(0, 0), (1, 1)]), "exact")
    with pytest.raises(ValueError):
        depth(cube(2), "fastest")
