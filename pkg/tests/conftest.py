import pytest

from polydepth import instances


@pytest.fixture(scope="session")
def nonnormal_polytope():
    return instances.non_normal_polytope()


@pytest.fixture(scope="session")
def example_polytopes():
    return {
        "P1": instances.depth2_polytope(),
        "P2": instances.depth3_polytope(),
        "P3": instances.depth4_polytope(),
    }
