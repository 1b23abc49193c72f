"""Exact integer and rational linear algebra.

Matrices are plain lists of rows.  Integer routines (Hermite and Smith
normal forms, lattice kernels) work with Python ints, so there is no
overflow; rational routines work with :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

__all__ = [
    "IntMatrix",
    "SmithDecomposition",
    "UnderdeterminedError",
    "as_int_matrix",
    "identity",
    "matmul",
    "transpose",
    "det",
    "rank",
    "hnf",
    "is_hnf",
    "snf",
    "invariant_factors",
    "kernel_basis",
    "rational_kernel",
    "solve_exact",
    "rat_vector",
    "primitive",
    "in_lattice_span",
]

IntMatrix = list  # list[list[int]], row major


class UnderdeterminedError(ValueError):
    """Raised by :func:`solve_exact` when a consistent system has many solutions."""


@dataclass(frozen=True)
class SmithDecomposition:
    """``U * A * V == D`` with ``U``, ``V`` unimodular and ``D`` diagonal."""

    D: tuple
    U: tuple
    V: tuple

    @property
    def factors(self) -> list[int]:
        """Diagonal entries of ``D`` (including trailing zeros)."""
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]


def as_int_matrix(rows) -> list[list[int]]:
    A = [[int(x) for x in row] for row in rows]
    if not A or not A[0]:
        raise ValueError("empty matrix")
    if any(len(r) != len(A[0]) for r in A):
        raise ValueError("ragged matrix")
    return A


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(col) for col in zip(*A)]


def matmul(A, B):
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def _freeze(A):
    return tuple(tuple(r) for r in A)


def rat_vector(xs) -> tuple[Fraction, ...]:
    """Coordinates as Fractions (always in lowest terms, denominator > 0)."""
    return tuple(Fraction(x) for x in xs)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        return tuple(int(x) for x in v)
    return tuple(int(x) // g for x in v)


# ---------------------------------------------------------------------------
# rational elimination


def _row_reduce(M):
    """Reduced row echelon form over Q.  Returns (R, pivot_columns)."""
    R = [[Fraction(x) for x in row] for row in M]
    pivots = []
    r = 0
    ncols = len(R[0]) if R else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(R)) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        piv = R[r][c]
        R[r] = [x / piv for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R, pivots


def rank(A) -> int:
    if not A or not A[0]:
        return 0
    return _integer_rank([[Fraction(x) for x in row] for row in A])


def _integer_rank(rows) -> int:
    # fraction-free elimination, rows consumed
    rows = [_clear_denominators(r) for r in rows]
    rows = [r for r in rows if any(r)]
    rk = 0
    while rows:
        piv = rows.pop()
        c = next(i for i, x in enumerate(piv) if x)
        a = piv[c]
        nxt = []
        for r in rows:
            b = r[c]
            if b:
                r = [a * x - b * y for x, y in zip(r, piv)]
                g = 0
                for x in r:
                    g = gcd(g, x)
                if g == 0:
                    continue
                if g > 1:
                    r = [x // g for x in r]
            nxt.append(r)
        rows = nxt
        rk += 1
    return rk


def _clear_denominators(row):
    den = 1
    for x in row:
        x = Fraction(x)
        den = den * x.denominator // gcd(den, x.denominator)
    return [int(Fraction(x) * den) for x in row]


def det(A) -> Fraction | int:
    """Exact determinant (Fraction for rational input, int for integer input)."""
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("determinant of a non-square matrix")
    M = [[Fraction(x) for x in row] for row in A]
    sign = 1
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            M[c], M[p] = M[p], M[c]
            sign = -sign
        piv = M[c][c]
        result *= piv
        for i in range(c + 1, n):
            if M[i][c] != 0:
                f = M[i][c] / piv
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    result *= sign
    if result.denominator == 1:
        return int(result)
    return result


def rational_kernel(A) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space of ``A`` over Q."""
    R, pivots = _row_reduce(A)
    ncols = len(A[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -R[i][f]
        basis.append(tuple(v))
    return basis


def solve_exact(A, b):
    """Solve ``A x = b`` over Q.

    Returns the unique solution as a tuple of Fractions, or ``None`` when the
    system is inconsistent.  Raises :class:`UnderdeterminedError` when the
    system is consistent but its solution is not unique.
    """
    if not A or not A[0]:
        raise ValueError("empty matrix")
    if len(b) != len(A):
        raise ValueError("right-hand side has wrong length")
    ncols = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = _row_reduce(aug)
    if ncols in pivots:
        return None
    if len(pivots) < ncols:
        raise UnderdeterminedError(f"solution space has dimension {ncols - len(pivots)}")
    x = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        x[p] = R[i][ncols]
    return tuple(x)


# ---------------------------------------------------------------------------
# Hermite normal form


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b == g == gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def hnf(A) -> tuple[list[list[int]], list[list[int]]]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``H == U * A``, ``U`` unimodular, ``H`` in row
    echelon form with positive pivots and every entry above a pivot reduced
    into ``[0, pivot)``.  Zero rows are collected at the bottom.
    """
    H = as_int_matrix(A)
    m, n = len(H), len(H[0])
    U = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        # gcd-combine rows r..m-1 into row r on column c
        for i in range(r + 1, m):
            if H[i][c] == 0:
                continue
            a, b = H[r][c], H[i][c]
            g, s, t = _xgcd(a, b)
            ua, ub = a // g, b // g
            H[r], H[i] = (
                [s * x + t * y for x, y in zip(H[r], H[i])],
                [-ub * x + ua * y for x, y in zip(H[r], H[i])],
            )
            U[r], U[i] = (
                [s * x + t * y for x, y in zip(U[r], U[i])],
                [-ub * x + ua * y for x, y in zip(U[r], U[i])],
            )
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        p = H[r][c]
        for i in range(r):
            q = H[i][c] // p
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1
    return H, U


def is_hnf(H) -> bool:
    """Check the row-style Hermite normal form conditions."""
    last = -1
    seen_zero = False
    for i, row in enumerate(H):
        c = next((j for j, x in enumerate(row) if x), None)
        if c is None:
            seen_zero = True
            continue
        if seen_zero or c <= last or row[c] <= 0:
            return False
        if any(not 0 <= H[k][c] < row[c] for k in range(i)):
            return False
        last = c
    return True


# ---------------------------------------------------------------------------
# Smith normal form


def snf(A) -> SmithDecomposition:
    """Smith normal form with transforms: ``U * A * V == D``."""
    D = as_int_matrix(A)
    m, n = len(D), len(D[0])
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    for t in range(min(m, n)):
        while True:
            # smallest nonzero entry of the trailing block as pivot
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return _finish_snf(D, U, V)
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = D[t][t]
            done = True
            for i in range(t + 1, m):
                q = D[i][t] // p
                if q:
                    D[i] = [x - q * y for x, y in zip(D[i], D[t])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[t])]
                if D[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = D[t][j] // p
                if q:
                    for row in D:
                        row[j] -= q * row[t]
                    for row in V:
                        row[j] -= q * row[t]
                if D[t][j]:
                    done = False
            if not done:
                continue
            # enforce divisibility into the rest of the block
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            D[t] = [x + y for x, y in zip(D[t], D[bad[0]])]
            U[t] = [x + y for x, y in zip(U[t], U[bad[0]])]
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return _finish_snf(D, U, V)


def _finish_snf(D, U, V) -> SmithDecomposition:
    return SmithDecomposition(_freeze(D), _freeze(U), _freeze(V))


def invariant_factors(A) -> list[int]:
    """Nonzero invariant factors of ``A`` in divisibility order."""
    return [d for d in snf(A).factors if d]


# ---------------------------------------------------------------------------
# lattices


def kernel_basis(A) -> list[tuple[int, ...]]:
    """Lattice basis of ``{v in Z^n : A v = 0}``.

    The basis comes from the unimodular transform of the Hermite form of
    ``A^T`` so it spans the saturated kernel, not a finite-index sublattice.
    The basis is returned in Hermite normal form itself.
    """
    A = as_int_matrix(A)
    H, U = hnf(transpose(A))
    basis = [U[i] for i, row in enumerate(H) if not any(row)]
    if not basis:
        return []
    Hk, _ = hnf(basis)
    return [tuple(r) for r in Hk if any(r)]


def in_lattice_span(basis, v) -> bool:
    """Whether the integer vector ``v`` is an integer combination of ``basis``."""
    v = [int(x) for x in v]
    if not basis:
        return not any(v)
    H, _ = hnf(basis)
    H = [r for r in H if any(r)]
    for row in H:
        c = next(j for j, x in enumerate(row) if x)
        if v[c] % row[c]:
            return False
        q = v[c] // row[c]
        v = [x - q * y for x, y in zip(v, row)]
    return not any(v)
