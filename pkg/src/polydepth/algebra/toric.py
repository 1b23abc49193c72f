"""Toric ideals of lattice polytopes.

The toric ring ``K[P]`` is presented as ``S / I_P`` with one variable of
degree 1 per lattice point of ``P`` (in lexicographic order).  ``I_P`` is
computed from a lattice basis of the kernel of the homogenized point matrix
followed by saturation by each variable, every step being a Groebner basis
computation on pure difference binomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .. import linalg
from ..polytope import Polytope, lattice_points
from .budget import Budget
from .groebner import GREVLEX, MonomialOrder, monomial_divides, monomial_lcm

__all__ = [
    "ToricPresentation",
    "Binomial",
    "toric_presentation",
    "toric_ideal",
    "binomial_groebner",
    "binomial_to_poly",
]


@dataclass(frozen=True)
class Binomial:
    """``x^plus - x^minus`` with disjoint supports unless built otherwise."""

    plus: tuple[int, ...]
    minus: tuple[int, ...]

    @classmethod
    def from_vector(cls, u: Sequence[int]) -> "Binomial":
        return cls(tuple(max(x, 0) for x in u), tuple(max(-x, 0) for x in u))

    @property
    def vector(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.plus, self.minus))

    def degree(self) -> int:
        return sum(self.plus)

    def is_homogeneous(self) -> bool:
        return sum(self.plus) == sum(self.minus)

    def __str__(self) -> str:
        return f"{_mono_str(self.plus)} - {_mono_str(self.minus)}"


def _mono_str(e) -> str:
    parts = [f"x{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(e) if a]
    return "*".join(parts) or "1"


def binomial_to_poly(b: Binomial) -> dict:
    if b.plus == b.minus:
        return {}
    return {b.plus: Fraction(1), b.minus: Fraction(-1)}


@dataclass(frozen=True)
class ToricPresentation:
    """One variable per lattice point; ``matrix`` has the columns ``(a, 1)``."""

    points: tuple[tuple[int, ...], ...]

    @property
    def num_vars(self) -> int:
        return len(self.points)

    @property
    def ambient_dim(self) -> int:
        return len(self.points[0])

    @cached_property
    def matrix(self) -> list[list[int]]:
        d = self.ambient_dim
        return [[p[i] for p in self.points] for i in range(d)] + [[1] * self.num_vars]

    def multidegree(self, exponent: Sequence[int]) -> tuple[int, ...]:
        """Image of ``x^exponent`` in Z^(d+1) (point sum, then height)."""
        return tuple(sum(r * e for r, e in zip(row, exponent)) for row in self.matrix)

    def in_kernel(self, u: Sequence[int]) -> bool:
        return not any(self.multidegree(u))

    @cached_property
    def ideal(self) -> tuple[Binomial, ...]:
        return tuple(toric_ideal(self))


def toric_presentation(P: Polytope) -> ToricPresentation:
    return ToricPresentation(tuple(lattice_points(P)))


# ---------------------------------------------------------------------------
# binomial Buchberger


class _BinomialGB:
    """Buchberger's algorithm specialised to pure difference binomials.

    Elements are stored as (lead, trail) exponent pairs with lead > trail.
    S-polynomials and remainders of such binomials are again of this form.
    """

    def __init__(self, order: MonomialOrder, budget: Budget | None = None):
        self.order = order
        self.budget = budget or Budget()
        self.key = order.key

    def orient(self, a, b):
        if a == b:
            return None
        return (a, b) if self.key(a) > self.key(b) else (b, a)

    def reduce_monomial(self, m, G):
        while True:
            for lead, trail in G:
                if monomial_divides(lead, m):
                    m = tuple(x - l + t for x, l, t in zip(m, lead, trail))
                    break
            else:
                return m

    def reduce(self, f, G, full=True):
        while f is not None:
            lead, trail = f
            for gl, gt in G:
                if monomial_divides(gl, lead):
                    lead = tuple(x - l + t for x, l, t in zip(lead, gl, gt))
                    f = self.orient(lead, trail)
                    break
            else:
                break
        if f is None or not full:
            return f
        lead, trail = f
        return (lead, self.reduce_monomial(trail, G))

    def spair(self, f, g):
        L = monomial_lcm(f[0], g[0])
        a = tuple(x - l + t for x, l, t in zip(L, f[0], f[1]))
        b = tuple(x - l + t for x, l, t in zip(L, g[0], g[1]))
        return self.orient(a, b)

    def run(self, gens):
        G: list = []
        pairs: list = []

        def add(h):
            lead = h[0]
            idx = len(G)
            G.append(h)
            # chain criterion on existing pairs
            kept = []
            for (i, j, L) in pairs:
                if (
                    monomial_divides(lead, L)
                    and L != monomial_lcm(G[i][0], lead)
                    and L != monomial_lcm(G[j][0], lead)
                ):
                    continue
                kept.append((i, j, L))
            cand = [(monomial_lcm(G[i][0], lead), i) for i in range(idx)]
            new = []
            seen = set()
            for L, i in sorted(cand, key=lambda t: (sum(t[0]), t[0], t[1])):
                if L in seen:
                    continue
                if any(monomial_divides(L2, L) and L2 != L for L2, _ in cand):
                    continue
                seen.add(L)
                if all(min(x, y) == 0 for x, y in zip(G[i][0], lead)):
                    continue
                new.append((i, idx, L))
            pairs[:] = kept + new

        for f in gens:
            r = self.reduce(f, G) if G else f
            if r is not None:
                add(r)
        while pairs:
            best = min(range(len(pairs)), key=lambda k: self.key(pairs[k][2]))
            i, j, _ = pairs.pop(best)
            self.budget.check(len(G))
            r = self.reduce(self.spair(G[i], G[j]), G)
            if r is not None:
                add(r)
        return self.interreduce(G)

    def interreduce(self, G):
        leads = [g[0] for g in G]
        keep = [
            g
            for k, g in enumerate(G)
            if not any(
                monomial_divides(leads[k2], g[0]) and (leads[k2] != g[0] or k2 < k)
                for k2 in range(len(G))
                if k2 != k
            )
        ]
        out = []
        for k, g in enumerate(keep):
            out.append((g[0], self.reduce_monomial(g[1], keep[:k] + keep[k + 1:])))
        out.sort(key=lambda g: self.key(g[0]))
        return out


def binomial_groebner(
    binomials: Sequence[Binomial],
    order: MonomialOrder = GREVLEX,
    budget: Budget | None = None,
) -> list[Binomial]:
    """Reduced Groebner basis of an ideal generated by pure difference binomials."""
    eng = _BinomialGB(order, budget)
    gens = [eng.orient(b.plus, b.minus) for b in binomials]
    gb = eng.run([g for g in gens if g is not None])
    return [Binomial(lead, trail) for lead, trail in gb]


def _size_reduce(basis):
    """Pairwise l1 size reduction of a lattice basis (unimodular steps only).

    Not LLL, just enough to avoid the huge exponents of a Hermite-form
    kernel basis, which otherwise blow up the saturation steps.
    """
    vs = [list(v) for v in basis]
    norm = lambda v: sum(abs(x) for x in v)
    changed = True
    while changed:
        changed = False
        for i in range(len(vs)):
            for j in range(len(vs)):
                if i == j:
                    continue
                for s in (1, -1):
                    w = [a - s * b for a, b in zip(vs[i], vs[j])]
                    if norm(w) < norm(vs[i]):
                        vs[i] = w
                        changed = True
    return [tuple(v) for v in vs]


def _permute(e, perm):
    return tuple(e[p] for p in perm)


def toric_ideal(
    T: ToricPresentation,
    order: MonomialOrder = GREVLEX,
    budget: Budget | None = None,
) -> list[Binomial]:
    """Reduced Groebner basis (default: grevlex) of the toric ideal ``I_P``.

    Starts from the lattice basis ideal of the saturated integer kernel of
    the point matrix and saturates by one variable at a time: in a
    reverse-lexicographic order where ``x_k`` is the smallest variable,
    ``(J : x_k^inf)`` is generated by the Groebner basis of ``J`` with all
    factors ``x_k`` removed.
    """
    n = T.num_vars
    kernel = _size_reduce(linalg.kernel_basis(T.matrix))
    if not kernel:
        return []
    current = [Binomial.from_vector(u) for u in kernel]
    for k in range(n):
        # permutation putting x_k last, in grevlex
        perm = [i for i in range(n) if i != k] + [k]
        inv = [0] * n
        for pos, i in enumerate(perm):
            inv[i] = pos
        gb = binomial_groebner(
            [Binomial(_permute(b.plus, perm), _permute(b.minus, perm)) for b in current],
            budget=budget,
        )
        saturated = []
        for b in gb:
            e = min(b.plus[-1], b.minus[-1])
            plus = b.plus[:-1] + (b.plus[-1] - e,)
            minus = b.minus[:-1] + (b.minus[-1] - e,)
            saturated.append(Binomial(_permute(plus, inv), _permute(minus, inv)))
        current = saturated
    return binomial_groebner(current, order, budget)
