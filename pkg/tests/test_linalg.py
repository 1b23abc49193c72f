from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polydepth import linalg

small = st.integers(-6, 6)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def test_hnf_small_example():
    H, U = linalg.hnf([[2, 4], [0, 3]])
    assert H == [[2, 1], [0, 3]]
    assert linalg.matmul(U, [[2, 4], [0, 3]]) == H


def test_snf_small_example():
    assert linalg.invariant_factors([[2, 4], [0, 3]]) == [1, 6]


def test_kernel_of_segment_matrix():
    assert linalg.kernel_basis([[1, 1, 1], [0, 1, 2]]) == [(1, -2, 1)]


def test_solve_exact():
    assert linalg.solve_exact([[1, 1], [1, -1]], [3, 1]) == (2, 1)
    assert linalg.solve_exact([[1, 1], [1, 1]], [1, 2]) is None
    with pytest.raises(linalg.UnderdeterminedError):
        linalg.solve_exact([[1, 1]], [1])


def test_det_and_rank():
    A = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
    assert linalg.det(A) == 18
    assert linalg.rank([[1, 2], [2, 4]]) == 1


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_hnf_properties(A):
    H, U = linalg.hnf(A)
    assert linalg.matmul(U, A) == H
    assert abs(linalg.det(U)) == 1
    assert linalg.is_hnf(H)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_snf_properties(A):
    dec = linalg.snf(A)
    assert linalg.matmul(linalg.matmul(dec.U, A), dec.V) == [list(r) for r in dec.D]
    assert abs(linalg.det(dec.U)) == 1 and abs(linalg.det(dec.V)) == 1
    f = linalg.invariant_factors(A)
    assert all(b % a == 0 for a, b in zip(f, f[1:]))
    assert len(f) == linalg.rank(A)
    assert dec.factors[len(f):] == [0] * (len(dec.factors) - len(f))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_is_saturated_basis(A):
    K = linalg.kernel_basis(A)
    n = len(A[0])
    assert len(K) == n - linalg.rank(A)
    for v in K:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in A)
    if K:
        # saturated: the lattice spanned by K has index 1 in its rational span
        assert linalg.invariant_factors(K) == [1] * len(K)


@settings(max_examples=40, deadline=None)
@given(matrices(3, 3), st.lists(small, min_size=3, max_size=3))
def test_solve_exact_agrees_with_fractions(A, x):
    if len(A[0]) != 3 or linalg.rank(A) < 3:
        return
    b = [sum(a * y for a, y in zip(row, x)) for row in A]
    assert linalg.solve_exact(A, b) == tuple(Fraction(y) for y in x)
