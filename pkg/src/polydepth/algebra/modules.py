"""Submodules of free modules ``S^m`` and their syzygies.

A module element is a dict ``{(component, exponent): coefficient}``; the
helpers :func:`vector` and :func:`as_vectors` convert from and to lists of
polynomials.  Orders are position-over-term: a term in a lower component is
bigger than any term in a higher one, and within a component the monomial
order decides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .groebner import GREVLEX, MonomialOrder, monomial_divides, monomial_lcm

__all__ = [
    "vector",
    "as_vectors",
    "module_groebner_basis",
    "module_reduce",
    "Syzygies",
    "syzygies",
]


def vector(polys: Sequence[dict]) -> dict:
    """``(f_0, ..., f_{m-1})`` as a module element."""
    return {(c, e): Fraction(a) for c, f in enumerate(polys) for e, a in f.items() if a}


def as_vectors(v: dict, rank: int) -> list[dict]:
    out: list[dict] = [{} for _ in range(rank)]
    for (c, e), a in v.items():
        out[c][e] = a
    return out


def _key(order: MonomialOrder):
    return lambda t: (-t[0], order.key(t[1]))


def _lead(v: dict, order):
    t = max(v, key=_key(order))
    return t, v[t]


def _add_scaled(v: dict, c, shift, w: dict) -> dict:
    """``v - c * x^shift * w``."""
    out = dict(v)
    for (k, e), a in w.items():
        t = (k, tuple(x + y for x, y in zip(e, shift)))
        b = out.get(t, 0) - c * a
        if b:
            out[t] = b
        else:
            out.pop(t, None)
    return out


def module_reduce(v: dict, G: Sequence[dict], order: MonomialOrder = GREVLEX) -> dict:
    """Full remainder of ``v`` modulo ``G``."""
    leads = [_lead(g, order) for g in G]
    key = _key(order)
    rem: dict = {}
    v = dict(v)
    while v:
        t = max(v, key=key)
        a = v[t]
        for g, ((k, m), lc) in zip(G, leads):
            if k == t[0] and monomial_divides(m, t[1]):
                v = _add_scaled(v, a / lc, tuple(x - y for x, y in zip(t[1], m)), g)
                break
        else:
            rem[t] = a
            del v[t]
    return rem


def _spair(f, g, order):
    (k, mf), cf = _lead(f, order)
    (_, mg), cg = _lead(g, order)
    L = monomial_lcm(mf, mg)
    s = _add_scaled({}, -1 / cf, tuple(x - y for x, y in zip(L, mf)), f)
    return _add_scaled(s, 1 / cg, tuple(x - y for x, y in zip(L, mg)), g)


def module_groebner_basis(gens: Sequence[dict], order: MonomialOrder = GREVLEX) -> list[dict]:
    """Reduced Groebner basis of the submodule generated by ``gens``."""
    G: list[dict] = []
    pairs: list[tuple[int, int]] = []
    for f in gens:
        r = module_reduce(f, G, order) if G else dict(f)
        if r:
            pairs += [(i, len(G)) for i in range(len(G))]
            G.append(r)
    while pairs:
        i, j = pairs.pop(0)
        (ki, mi), _ = _lead(G[i], order)
        (kj, mj), _ = _lead(G[j], order)
        if ki != kj:
            continue
        r = module_reduce(_spair(G[i], G[j], order), G, order)
        if r:
            pairs += [(a, len(G)) for a in range(len(G))]
            G.append(r)
    # interreduce
    leads = [_lead(g, order)[0] for g in G]
    keep = [
        g
        for a, (g, (k, m)) in enumerate(zip(G, leads))
        if not any(
            k2 == k and monomial_divides(m2, m) and ((k2, m2) != (k, m) or b < a)
            for b, (k2, m2) in enumerate(leads)
            if b != a
        )
    ]
    out = []
    for a, g in enumerate(keep):
        r = module_reduce(g, keep[:a] + keep[a + 1:], order)
        lc = _lead(r, order)[1]
        out.append({t: c / lc for t, c in r.items()})
    out.sort(key=lambda g: _key(order)(_lead(g, order)[0]))
    return out


@dataclass(frozen=True)
class Syzygies:
    """Generators of the kernel of ``S^r -> S^m``, ``e_i -> gens[i]``.

    ``leads`` are the leading terms ``(component, exponent)`` of the
    generators in the position-over-term order, which is the order data a
    further syzygy computation starts from.
    """

    rank: int
    generators: tuple
    leads: tuple

    def __len__(self) -> int:
        return len(self.generators)

    def vectors(self) -> list[list[dict]]:
        return [as_vectors(g, self.rank) for g in self.generators]


def _degree(v: dict, shifts) -> int:
    return max(sum(e) + shifts[k] for (k, e) in v)


def syzygies(gens: Sequence, order: MonomialOrder = GREVLEX) -> Syzygies:
    """Syzygy module of ``gens`` (polynomials or module elements).

    The generators ``g_i`` in ``S^m`` are lifted to ``(g_i, e_i)`` in
    ``S^m + S^r``; a Groebner basis in the position-over-term order that
    favours the first ``m`` components exposes the kernel as the elements
    supported on the last ``r``.  For homogeneous input the result is pruned
    to a minimal generating set.
    """
    elems = [g if _is_module(g) else {(0, e): Fraction(a) for e, a in g.items() if a} for g in gens]
    r = len(elems)
    m = 1 + max((k for g in elems for (k, _) in g), default=0)
    n = _num_vars(elems)
    lifted = [{**g, (m + i, (0,) * n): Fraction(1)} for i, g in enumerate(elems)]
    G = module_groebner_basis(lifted, order)
    kernel = [{(k - m, e): a for (k, e), a in g.items()} for g in G if all(k >= m for (k, _) in g)]
    shifts = [_degree(g, [0] * m) if g else 0 for g in elems]
    kernel.sort(key=lambda v: (_degree(v, shifts), _key(order)(_lead(v, order)[0])))
    minimal: list[dict] = []
    basis: list[dict] = []
    for v in kernel:
        if basis and not module_reduce(v, basis, order):
            continue
        minimal.append(v)
        basis = module_groebner_basis(minimal, order)
    leads = tuple(_lead(v, order)[0] for v in minimal)
    return Syzygies(r, tuple(minimal), leads)


def _is_module(g) -> bool:
    key = next(iter(g), None)
    return key is not None and len(key) == 2 and isinstance(key[1], tuple)


def _num_vars(elems) -> int:
    for g in elems:
        if g:
            return len(next(iter(g))[1])
    raise ValueError("all generators are zero")
