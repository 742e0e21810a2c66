"""Graded free modules and Betti tables: Koszul resolutions, twisted duals,
the mapping cone that resolves R/I from resolutions of R/J and R/G, splitting
of cancelling pairs, and the structural checks every predicted shape must pass.
"""

from __future__ import annotations

import logging
from collections import Counter
from itertools import combinations
from typing import Iterable, Sequence

from aci_betti.errors import (InsufficientMultiplicity, NegativeCoefficient,
                              NonPolynomial, ShapeMismatch)
from aci_betti.models import (BettiTable, DegreeTuple, GradedFreeModule,
                              HilbertFunction, ResolutionShape)

logger = logging.getLogger(__name__)

Cancellation = tuple[int, int, int]  # (position i, twist j, count c) between F_i and F_i+1


def koszul_resolution(degrees: Sequence[int]) -> ResolutionShape:
    modules = [GradedFreeModule.free(0)]
    for i in range(1, len(degrees) + 1):
        sums = Counter(sum(subset) for subset in combinations(degrees, i))
        modules.append(GradedFreeModule.of(sums))
    return ResolutionShape(modules=tuple(modules))


def dual_twist(module: GradedFreeModule, d: int) -> GradedFreeModule:
    """F^dual(-d): R(-j) becomes R(-(d - j))."""
    return GradedFreeModule(twists=tuple((d - j, m) for j, m in module.twists))


def mapping_cone_aci(gor: ResolutionShape, t: DegreeTuple) -> ResolutionShape:
    """Free (not yet minimal) resolution of R/I from one of R/G.

    Position i (1 <= i < n) gets the Koszul twists of J in position i plus
    F_{n-i+1}^dual(-d); position n is F_1^dual(-d). The generator of F_n = R(-e)
    lands in position 1 as R(-d_{n+1}).
    """
    n, d = t.n, t.d
    if gor.length != n:
        raise ShapeMismatch(f"Gorenstein resolution has length {gor.length}, expected {n}")
    last = gor[n]
    if last.rank != 1 or last.mult(t.e) != 1:
        raise ShapeMismatch(f"last module {last} is not R(-{t.e})")

    koszul = koszul_resolution(t.regular)
    modules = [GradedFreeModule.free(0)]
    for i in range(1, n):
        modules.append(koszul[i] + dual_twist(gor[n - i + 1], d))
    modules.append(dual_twist(gor[1], d))
    return ResolutionShape(modules=tuple(modules))


def _alternating_numerator(res: ResolutionShape) -> list[int]:
    top = max((j for f in res.modules for j, _ in f.twists), default=0)
    if min((j for f in res.modules for j, _ in f.twists), default=0) < 0:
        raise NonPolynomial("resolution has a negative internal degree")
    numerator = [0] * (top + 1)
    for i, f in enumerate(res.modules):
        for j, m in f.twists:
            numerator[j] += (-1) ** i * m
    return numerator


def hilbert_from_betti(res: ResolutionShape | BettiTable, n: int) -> HilbertFunction:
    """Divide the alternating Betti polynomial by (1 - z)^n, exactly."""
    shape = res.shape() if isinstance(res, BettiTable) else res
    poly = _alternating_numerator(shape)
    for _ in range(n):
        if sum(poly) != 0:
            raise NonPolynomial(f"alternating Betti sum is not divisible by (1 - z)^{n}")
        quotient, running = [], 0
        for c in poly[:-1]:
            running += c
            quotient.append(running)
        poly = quotient or [0]
    if any(c < 0 for c in poly):
        raise NegativeCoefficient(f"Hilbert series has negative coefficients: {poly}")
    return HilbertFunction.of(poly)


def check_invariants(res: ResolutionShape) -> None:
    if res.rank_sum != 0:
        raise ShapeMismatch(f"alternating rank sum is {res.rank_sum}, expected 0")
    if res.chern_sum != 0:
        raise ShapeMismatch(f"alternating first Chern sum is {res.chern_sum}, expected 0")


def check_gorenstein_symmetry(table: BettiTable | ResolutionShape, s: int, n: int) -> bool:
    entries = table.table() if isinstance(table, ResolutionShape) else table
    return all(entries.get(n - i, s + n - j) == m for (i, j), m in entries)


def self_dual_sum(table: BettiTable, c: int, s: int) -> BettiTable:
    """B_{i,j} = beta_{i,j} + beta_{c-i, s+c-j}."""
    items: list[tuple[tuple[int, int], int]] = []
    for (i, j), m in table:
        items.append(((i, j), m))
        items.append(((c - i, s + c - j), m))
    return BettiTable.of(items)


def split_summands(res: ResolutionShape, cancellations: Iterable[Cancellation]) -> ResolutionShape:
    modules = [f.as_dict() for f in res.modules]
    for i, j, c in cancellations:
        if c <= 0:
            continue
        for pos in (i, i + 1):
            have = modules[pos].get(j, 0) if pos < len(modules) else 0
            if have < c:
                raise InsufficientMultiplicity(
                    f"cannot cancel {c} x R(-{j}) between F_{i} and F_{i + 1}: F_{pos} has {have}"
                )
            modules[pos][j] = have - c
        logger.debug("split %d x R(-%d) between F_%d and F_%d", c, j, i, i + 1)
    return ResolutionShape.of(modules)


def shape_from_positions(positions: Sequence[dict[int, int]]) -> ResolutionShape:
    """Resolution with F_0 = R followed by the given modules."""
    return ResolutionShape.of([{0: 1}, *positions])


def consecutive_overlaps(res: ResolutionShape | BettiTable) -> list[tuple[int, int, int]]:
    """(i, j, m): R(-j) appears m times in both F_i and F_i+1, for i >= 1."""
    shape = res.shape() if isinstance(res, BettiTable) else res
    out = []
    for i in range(1, shape.length):
        here, there = shape[i].as_dict(), shape[i + 1].as_dict()
        out.extend((i, j, min(here[j], there[j])) for j in sorted(here.keys() & there.keys()))
    return out
