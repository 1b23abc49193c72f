"""Polynomials over Q, monomial orders and Buchberger's algorithm.

A polynomial is a dict mapping exponent tuples to nonzero Fractions.  The
helpers here never mutate their arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "MonomialOrder",
    "GREVLEX",
    "LEX",
    "block_order",
    "GroebnerBasis",
    "poly",
    "leading_monomial",
    "leading_term",
    "spoly",
    "reduce",
    "groebner_basis",
    "is_groebner",
    "monomial_divides",
    "monomial_lcm",
]

Monomial = tuple  # tuple[int, ...]
Poly = dict  # dict[Monomial, Fraction]


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order given by a sort key (bigger key = bigger monomial).

    ``kind`` is ``"grevlex"``, ``"lex"`` or ``"block"``; block orders compare
    the grevlex order on each block of variables in turn, which makes them
    elimination orders for the leading blocks.
    """

    kind: str = "grevlex"
    blocks: tuple[int, ...] = ()

    def key(self, m: Monomial):
        if self.kind == "grevlex":
            return (sum(m), tuple(-x for x in reversed(m)))
        if self.kind == "lex":
            return tuple(m)
        if self.kind == "block":
            out = []
            start = 0
            for size in self.blocks:
                part = m[start:start + size]
                out.append(sum(part))
                out.append(tuple(-x for x in reversed(part)))
                start += size
            return tuple(out)
        raise ValueError(f"unknown monomial order {self.kind!r}")

    def __str__(self) -> str:
        return self.kind if self.kind != "block" else f"block{self.blocks}"


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block_order(*sizes: int) -> MonomialOrder:
    """Elimination order: grevlex on each block, earlier blocks bigger."""
    return MonomialOrder("block", tuple(sizes))


def poly(terms) -> Poly:
    """Build a polynomial from ``{exponent: coeff}`` or ``[(coeff, exponent), ...]``."""
    out: dict = {}
    items = terms.items() if isinstance(terms, dict) else ((e, c) for c, e in terms)
    for e, c in items:
        e = tuple(e)
        out[e] = out.get(e, 0) + Fraction(c)
    return {e: c for e, c in out.items() if c}


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def leading_monomial(f: Poly, order: MonomialOrder = GREVLEX) -> Monomial:
    return max(f, key=order.key)


def leading_term(f: Poly, order: MonomialOrder = GREVLEX):
    m = leading_monomial(f, order)
    return f[m], m


def _sub_scaled(f: Poly, c, shift: Monomial, g: Poly) -> Poly:
    """f - c * x^shift * g."""
    out = dict(f)
    for e, a in g.items():
        m = tuple(x + y for x, y in zip(e, shift))
        v = out.get(m, 0) - c * a
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _monic(f: Poly, order: MonomialOrder) -> Poly:
    c = f[leading_monomial(f, order)]
    return {e: a / c for e, a in f.items()}


def spoly(f: Poly, g: Poly, order: MonomialOrder = GREVLEX) -> Poly:
    cf, mf = leading_term(f, order)
    cg, mg = leading_term(g, order)
    L = monomial_lcm(mf, mg)
    sf = tuple(a - b for a, b in zip(L, mf))
    sg = tuple(a - b for a, b in zip(L, mg))
    out = {tuple(x + y for x, y in zip(e, sf)): a / cf for e, a in f.items()}
    return _sub_scaled(out, 1 / cg, sg, g)


def reduce(f: Poly, G: Sequence[Poly], order: MonomialOrder = GREVLEX, full: bool = True) -> Poly:
    """Remainder of ``f`` on division by ``G``.

    With ``full=False`` only the leading term is reduced (top reduction).
    """
    lts = [leading_term(g, order) for g in G]
    rem: dict = {}
    f = dict(f)
    while f:
        m = leading_monomial(f, order)
        c = f[m]
        for g, (cg, mg) in zip(G, lts):
            if monomial_divides(mg, m):
                shift = tuple(a - b for a, b in zip(m, mg))
                f = _sub_scaled(f, c / cg, shift, g)
                break
        else:
            if not full:
                f.update(rem)
                return f
            rem[m] = c
            del f[m]
    return rem


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis (monic polynomials, sorted by leading monomial)."""

    polynomials: tuple
    order: MonomialOrder

    def __len__(self) -> int:
        return len(self.polynomials)

    def __iter__(self):
        return iter(self.polynomials)

    def leading_monomials(self) -> list[Monomial]:
        return [leading_monomial(g, self.order) for g in self.polynomials]

    def reduce(self, f: Poly) -> Poly:
        return reduce(f, self.polynomials, self.order)

    def contains(self, f: Poly) -> bool:
        return not self.reduce(f)


def _update_pairs(pairs, basis_lms, new_index):
    """Gebauer-Moeller style pair update (chain and product criteria)."""
    h = basis_lms[new_index]
    candidates = {}
    for i in range(new_index):
        L = monomial_lcm(basis_lms[i], h)
        candidates[i] = L
    # drop old pairs whose lcm is strictly divisible by lm(h) (chain criterion)
    kept = []
    for (i, j, L) in pairs:
        if monomial_divides(h, L) and L != candidates[i] and L != candidates[j]:
            continue
        kept.append((i, j, L))
    # among new pairs keep one per minimal lcm, and drop coprime ones
    new = []
    items = sorted(candidates.items(), key=lambda t: (sum(t[1]), t[1], t[0]))
    for i, L in items:
        if any(monomial_divides(L2, L) and L2 != L for _, L2 in items):
            continue
        if any(L2 == L for _, _, L2 in new):
            continue
        new.append((i, new_index, L))
    new = [
        (i, j, L)
        for (i, j, L) in new
        if L != tuple(a + b for a, b in zip(basis_lms[i], h))
    ]
    return kept + new


def groebner_basis(gens: Iterable[Poly], order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis by Buchberger's algorithm (normal selection)."""
    G: list[Poly] = []
    lms: list[Monomial] = []
    pairs: list = []
    queue = [dict(g) for g in gens if g]
    if not queue:
        raise ValueError("empty generator list")
    for f in queue:
        r = reduce(f, G, order) if G else f
        if r:
            G.append(_monic(r, order))
            lms.append(leading_monomial(G[-1], order))
            pairs = _update_pairs(pairs, lms, len(G) - 1)
    while pairs:
        pairs.sort(key=lambda p: order.key(p[2]))
        i, j, _ = pairs.pop(0)
        r = reduce(spoly(G[i], G[j], order), G, order)
        if r:
            G.append(_monic(r, order))
            lms.append(leading_monomial(G[-1], order))
            pairs = _update_pairs(pairs, lms, len(G) - 1)
    return GroebnerBasis(tuple(_interreduce(G, order)), order)


def _interreduce(G: list[Poly], order: MonomialOrder) -> list[Poly]:
    lms = [leading_monomial(g, order) for g in G]
    keep = [
        g
        for k, (g, m) in enumerate(zip(G, lms))
        if not any(
            monomial_divides(m2, m) and (m2 != m or k2 < k)
            for k2, m2 in enumerate(lms)
            if k2 != k
        )
    ]
    out = []
    for k, g in enumerate(keep):
        others = keep[:k] + keep[k + 1:]
        out.append(_monic(reduce(g, others, order), order))
    out.sort(key=lambda g: order.key(leading_monomial(g, order)))
    return out


def is_groebner(G: Sequence[Poly], order: MonomialOrder = GREVLEX) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    G = list(G)
    return all(
        not reduce(spoly(G[i], G[j], order), G, order)
        for i in range(len(G))
        for j in range(i + 1, len(G))
    )
