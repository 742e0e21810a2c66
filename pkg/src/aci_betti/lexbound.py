"""Lex-segment ideals, Eliahou-Kervaire Betti numbers, and the upper bounds
they give for Gorenstein algebras and almost complete intersections.

Variables are ordered z_1 > z_2 > ... > z_c; the index of the last variable
dividing a monomial is what the Eliahou-Kervaire count depends on.
"""

from __future__ import annotations

import logging

from aci_betti import hilbert
from aci_betti.betti import mapping_cone_aci, self_dual_sum
from aci_betti.errors import (InvalidInput, NotOSequence, NotSISequence,
                              NotStable)
from aci_betti.forms import Monomial, monomials
from aci_betti.hilbert import binom
from aci_betti.models import (BettiTable, DegreeTuple, HilbertFunction,
                              MonomialIdeal)

logger = logging.getLogger(__name__)


def max_index(u: Monomial) -> int:
    """1-based index of the last variable dividing u."""
    return max(k + 1 for k, e in enumerate(u) if e)


def lex_ideal_from_hilbert(h: HilbertFunction, c: int) -> MonomialIdeal:
    vals = list(h)
    if not vals or vals[0] != 1:
        raise NotOSequence(f"{h} does not start with 1")
    if len(vals) > 1 and vals[1] > c:
        raise InvalidInput(f"h_1 = {vals[1]} exceeds the {c} available variables")
    if not hilbert.is_o_sequence(vals):
        raise NotOSequence(f"{h} violates Macaulay growth")

    generators: list[Monomial] = []
    previous: set[Monomial] = set()
    for t in range(1, len(vals) + 1):
        monos = monomials(c, t)
        keep = len(monos) - h[t]
        current = set(monos[:keep])
        for u in monos[:keep]:
            below = (tuple(e - (k == v) for k, e in enumerate(u)) for v in range(c) if u[v])
            if not any(b in previous for b in below):
                generators.append(u)
        previous = current
    return MonomialIdeal(c=c, generators=tuple(generators))


def is_stable(m: MonomialIdeal) -> bool:
    for u in m.generators:
        top = max_index(u) - 1
        for k in range(top):
            moved = list(u)
            moved[top] -= 1
            moved[k] += 1
            if not m.contains(tuple(moved)):
                return False
    return True


def ek_betti(m: MonomialIdeal) -> BettiTable:
    """Eliahou-Kervaire: u of degree d adds C(max(u)-1, i) to beta_{i+1, d+i}."""
    if not is_stable(m):
        raise NotStable(f"ideal with generators {m.generators} is not stable")
    items: list[tuple[tuple[int, int], int]] = [((0, 0), 1)]
    for u in m.generators:
        deg, top = sum(u), max_index(u)
        for i in range(top):
            items.append(((i + 1, deg + i), binom(top - 1, i)))
    return BettiTable.of(items)


def gor_betti_bound(h: HilbertFunction, c: int) -> BettiTable:
    """Largest Betti numbers a Gorenstein algebra with SI-sequence h can have."""
    if not hilbert.is_si_sequence(h):
        raise NotSISequence(f"{h} is not an SI-sequence")
    s = h.socle_degree
    ell = h.values.index(max(h.values))
    g = hilbert.first_difference_up_to(h, ell)
    quotient = ek_betti(lex_ideal_from_hilbert(g, c - 1))
    return self_dual_sum(quotient, c, s)


def aci_betti_bound(t: DegreeTuple) -> BettiTable:
    """Bound for R/I: Koszul part of J plus the twisted dual of the Gorenstein bound."""
    h_g = hilbert.linked_gorenstein_hilbert(t)
    gor = gor_betti_bound(h_g, t.n)
    logger.debug("Gorenstein bound for %s: %s", t, gor.entries)
    return mapping_cone_aci(gor.shape(), t).table()
