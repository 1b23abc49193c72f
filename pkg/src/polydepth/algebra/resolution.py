"""Free resolutions of ``S / I`` for homogeneous ideals given by a Groebner basis.

The non-minimal resolution is Schreyer's: starting from a Groebner basis of
``I``, the syzygies of level ``k + 1`` are the reduced S-syzygies of the level
``k`` elements, taken with respect to the induced (Schreyer) order.  Sorting
each level by the exponent of one more variable makes the construction stop
after at most ``n`` steps.  The result is then pruned to a minimal
resolution by cancelling unit entries.

Module elements are dicts ``{(component, exponent): coefficient}``.
"""

from __future__ import annotations

import heapq
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .budget import Budget, BudgetExceeded
from .groebner import GREVLEX, MonomialOrder, leading_term, monomial_divides

__all__ = [
    "BudgetExceeded",
    "Budget",
    "Resolution",
    "schreyer_resolution",
    "minimalize",
    "free_resolution",
    "compose",
]


def _div(c, lc):
    if lc == 1:
        return c
    if lc == -1:
        return -c
    return Fraction(c) / lc


@dataclass
class _Level:
    """Basis elements of one free module in the Schreyer resolution."""

    comp: list = field(default_factory=list)      # component in previous level
    lead: list = field(default_factory=list)      # multiplier monomial of the leading term
    total: list = field(default_factory=list)     # lead + total of comp (exponent in N^n)
    tie: list = field(default_factory=list)       # tie-break tuple, smaller = bigger term
    image: list = field(default_factory=list)     # dict (comp, mono) -> coeff
    lc: list = field(default_factory=list)        # leading coefficient of image

    def __len__(self) -> int:
        return len(self.comp)


def _sort_level(level: _Level, var: int | None) -> _Level:
    """Reorder elements: grouped by component, decreasing exponent of ``var``."""

    def key(k):
        e = level.lead[k][var] if var is not None else 0
        return (level.comp[k], -e, tuple(reversed(level.lead[k])))

    perm = sorted(range(len(level)), key=key)
    out = _Level()
    for k in perm:
        out.comp.append(level.comp[k])
        out.lead.append(level.lead[k])
        out.total.append(level.total[k])
        out.image.append(level.image[k])
        out.lc.append(level.lc[k])
    return out


def _assign_ties(level: _Level, prev: _Level | None):
    level.tie = [
        (prev.tie[c] if prev is not None else ()) + (k,) for k, c in enumerate(level.comp)
    ]


def _minimal_monomials(monos):
    out = []
    for m in sorted(set(monos), key=lambda m: (sum(m), m)):
        if not any(monomial_divides(g, m) for g in out):
            out.append(m)
    return out


def _reduce_to_syzygy(s, level: _Level, prev: _Level, index, budget):
    """Reduce ``s`` (an element of the module of ``prev``) by ``level``.

    Returns the quotient record as an element of the module of ``level``.
    The remainder must vanish because ``level`` is a Groebner basis.
    """
    quot: dict = defaultdict(int)

    def hkey(term):
        c, m = term
        t = prev.total[c]
        return (tuple(reversed([a + b for a, b in zip(m, t)])), prev.tie[c])

    heap = [(hkey(t), t) for t in s]
    heapq.heapify(heap)
    steps = 0
    while heap:
        _, term = heapq.heappop(heap)
        coeff = s.get(term)
        if not coeff:
            continue
        c, m = term
        for l, lead in index.get(c, ()):
            if monomial_divides(lead, m):
                break
        else:
            raise ArithmeticError("Schreyer reduction left a remainder; not a Groebner basis")
        shift = tuple(a - b for a, b in zip(m, lead))
        q = _div(coeff, level.lc[l])
        quot[(l, shift)] += q
        for (c2, m2), a in level.image[l].items():
            t2 = (c2, tuple(x + y for x, y in zip(m2, shift)))
            v = s.get(t2, 0) - q * a
            if v:
                if t2 not in s:
                    heapq.heappush(heap, (hkey(t2), t2))
                s[t2] = v
            else:
                s.pop(t2, None)
        steps += 1
        if steps % 2000 == 0:
            budget.check()
    return quot


def schreyer_resolution(
    gens: Sequence[dict],
    order: MonomialOrder = GREVLEX,
    budget: Budget | None = None,
) -> list[_Level]:
    """Schreyer's free resolution of ``S / (gens)``.

    ``gens`` must be a Groebner basis (polynomials as exponent dicts) with
    respect to the grevlex ``order``.  Returns the levels ``F_1, F_2, ...``;
    ``F_0`` is the free module of rank one.
    """
    if order.kind != "grevlex":
        raise ValueError("Schreyer resolutions are implemented for grevlex only")
    budget = budget or Budget()
    gens = [g for g in gens if g]
    if not gens:
        return []
    n = len(next(iter(gens[0])))
    base = _Level(comp=[0], lead=[(0,) * n], total=[(0,) * n], tie=[()], image=[{}], lc=[1])

    lvl = _Level()
    for g in gens:
        lc, lm = leading_term(g, order)
        lvl.comp.append(0)
        lvl.lead.append(lm)
        lvl.total.append(lm)
        lvl.image.append({(0, e): (int(a) if Fraction(a).denominator == 1 else a) for e, a in g.items()})
        lvl.lc.append(int(lc) if Fraction(lc).denominator == 1 else lc)
    lvl = _sort_level(lvl, 0)
    _assign_ties(lvl, base)
    levels = [lvl]
    prev = base
    count = len(lvl)
    var = 1
    while True:
        cur = levels[-1]
        index = defaultdict(list)
        for k in range(len(cur)):
            index[cur.comp[k]].append((k, cur.lead[k]))
        nxt = _Level()
        groups = defaultdict(list)
        for k in range(len(cur)):
            groups[cur.comp[k]].append(k)
        for c, members in groups.items():
            for a, i in enumerate(members):
                mi = cur.lead[i]
                cands = defaultdict(list)
                for j in members[a + 1:]:
                    q = tuple(max(x, y) - x for x, y in zip(mi, cur.lead[j]))
                    cands[q].append(j)
                for q in _minimal_monomials(cands):
                    j = cands[q][0]
                    mj = cur.lead[j]
                    qj = tuple(x + y - z for x, y, z in zip(mi, q, mj))
                    s = _svector(cur, i, q, j, qj)
                    quot = _reduce_to_syzygy(s, cur, prev, index, budget)
                    tau = defaultdict(int)
                    tau[(i, q)] += _div(1, cur.lc[i])
                    tau[(j, qj)] -= _div(1, cur.lc[j])
                    for key, v in quot.items():
                        tau[key] -= v
                    image = {k2: v for k2, v in tau.items() if v}
                    nxt.comp.append(i)
                    nxt.lead.append(q)
                    nxt.total.append(tuple(x + y for x, y in zip(q, cur.total[i])))
                    nxt.image.append(image)
                    nxt.lc.append(image[(i, q)])
                    count += 1
                    budget.check(count)
        if not len(nxt):
            break
        nxt = _sort_level(nxt, var if var < n else None)
        _assign_ties(nxt, cur)
        levels.append(nxt)
        prev = cur
        var += 1
    return levels


def _svector(level: _Level, i, qi, j, qj) -> dict:
    s: dict = {}
    for (c, m), a in level.image[i].items():
        s[(c, tuple(x + y for x, y in zip(m, qi)))] = _div(a, level.lc[i])
    for (c, m), a in level.image[j].items():
        t = (c, tuple(x + y for x, y in zip(m, qj)))
        v = s.get(t, 0) - _div(a, level.lc[j])
        if v:
            s[t] = v
        else:
            s.pop(t, None)
    return s


# ---------------------------------------------------------------------------
# minimal resolutions


@dataclass
class Resolution:
    """A graded free resolution ``0 <- F_0 <- F_1 <- ... <- F_p <- 0`` of ``S / I``.

    ``maps[k]`` (``k >= 1``) lists the images of the basis of ``F_k`` as
    dicts ``{(basis index in F_{k-1}, exponent): coefficient}``; ``maps[0]``
    is empty.  ``degrees[k]`` are the standard degrees of the basis elements
    and ``multidegrees[k]`` their exponents (for fine gradings).
    """

    num_vars: int
    maps: list
    degrees: list
    exponents: list
    minimal: bool = False

    @property
    def ranks(self) -> list[int]:
        return [len(d) for d in self.degrees]

    @property
    def length(self) -> int:
        return len(self.ranks) - 1

    @property
    def projective_dimension(self) -> int:
        return self.length

    def betti_table(self) -> dict:
        """``{(i, j): beta_ij}`` with ``j`` the total degree."""
        table: dict = defaultdict(int)
        for i, degs in enumerate(self.degrees):
            for j in degs:
                table[(i, j)] += 1
        return dict(table)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * r for i, r in enumerate(self.ranks))

    def has_unit_entries(self) -> bool:
        zero = (0,) * self.num_vars
        return any(m == zero for images in self.maps[1:] for img in images for (_, m) in img)

    def composes_to_zero(self) -> bool:
        return all(
            not any(compose(self.maps[k - 1], img) for img in self.maps[k])
            for k in range(2, len(self.maps))
        )


def compose(prev_images, img) -> dict:
    """Apply the map with basis images ``prev_images`` to the element ``img``."""
    out: dict = defaultdict(int)
    for (c, m), a in img.items():
        for (c2, m2), b in prev_images[c].items():
            out[(c2, tuple(x + y for x, y in zip(m, m2)))] += a * b
    return {k: v for k, v in out.items() if v}


def minimalize(levels: list[_Level], num_vars: int, budget: Budget | None = None) -> Resolution:
    """Prune a free resolution to a minimal one by cancelling unit entries."""
    budget = budget or Budget()
    zero = (0,) * num_vars
    # images[k][j]: dict (i, mono) -> coeff with i a basis index of level k-1
    images = [[{}]] + [[dict(im) for im in lv.image] for lv in levels]
    exps = [[zero]] + [list(lv.total) for lv in levels]
    alive = [set(range(len(x))) for x in images]
    # reverse incidence: users[k][i] = set of j in level k+1 whose image involves i
    users = [defaultdict(set) for _ in images]
    for k in range(1, len(images)):
        for j, im in enumerate(images[k]):
            for (i, _) in im:
                users[k - 1][i].add(j)

    for k in range(1, len(images)):
        while True:
            budget.check()
            pivot = None
            for j in sorted(alive[k]):
                for (i, m), a in images[k][j].items():
                    if m == zero:
                        pivot = (j, i, a)
                        break
                if pivot:
                    break
            if pivot is None:
                break
            j, i, u = pivot
            pim = images[k][j]
            for j2 in sorted(users[k - 1][i]):
                if j2 == j or j2 not in alive[k]:
                    continue
                im2 = images[k][j2]
                coeffs = {m: a for (i2, m), a in im2.items() if i2 == i}
                if not coeffs:
                    continue
                for m, a in coeffs.items():
                    f = _div(a, u)
                    for (i3, m3), b in pim.items():
                        t = (i3, tuple(x + y for x, y in zip(m, m3)))
                        v = im2.get(t, 0) - f * b
                        if v:
                            if t not in im2:
                                users[k - 1][i3].add(j2)
                            im2[t] = v
                        else:
                            im2.pop(t, None)
            # drop basis element i of level k-1 and j of level k
            alive[k - 1].discard(i)
            alive[k].discard(j)
            for (i3, _) in pim:
                users[k - 1][i3].discard(j)
            if k + 1 < len(images):
                for j3 in list(users[k][j]):
                    im3 = images[k + 1][j3]
                    for t in [t for t in im3 if t[0] == j]:
                        del im3[t]
                users[k][j] = set()
    # renumber
    maps = [[]]
    degrees = []
    exponents = []
    remap_prev = None
    for k in range(len(images)):
        keep = sorted(alive[k])
        remap = {old: new for new, old in enumerate(keep)}
        if not keep and k > 0:
            break
        exponents.append([exps[k][j] for j in keep])
        degrees.append([sum(exps[k][j]) for j in keep])
        if k > 0:
            maps.append([
                {(remap_prev[i], m): a for (i, m), a in images[k][j].items()} for j in keep
            ])
        remap_prev = remap
    return Resolution(num_vars, maps, degrees, exponents, minimal=True)


def free_resolution(gb: Sequence[dict], num_vars: int, budget: Budget | None = None) -> Resolution:
    """Minimal free resolution of ``S / I`` from a grevlex Groebner basis of ``I``."""
    budget = budget or Budget()
    if not gb:
        return Resolution(num_vars, [[]], [[0]], [[(0,) * num_vars]], minimal=True)
    levels = schreyer_resolution(gb, GREVLEX, budget)
    return minimalize(levels, num_vars, budget)
