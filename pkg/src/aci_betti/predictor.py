"""Closed-form predictions of the minimal free resolution of n+1 generic forms.

Each ``aci_*`` route builds the resolution of the linked Gorenstein algebra
R/G, pushes it through the mapping cone and splits off the pairs that come
from generators of J. :func:`predict` picks the strongest route that applies;
:func:`detect_ghosts` lists the twists that survive in consecutive modules.
"""

from __future__ import annotations

import logging
from collections import Counter
from itertools import combinations
from math import factorial, prod
from typing import Callable, Iterable

from aci_betti import hilbert, lexbound
from aci_betti.betti import (Cancellation, check_invariants,
                             consecutive_overlaps, hilbert_from_betti,
                             koszul_resolution,
                             mapping_cone_aci, self_dual_sum,
                             shape_from_positions, split_summands)
from aci_betti.errors import (BoundsPresent, ClassificationError,
                              EvenDimension, HypothesisNotMet, InvalidInput,
                              OddDimension, ProfileMismatch, ShapeMismatch)
from aci_betti.hilbert import binom
from aci_betti.models import (BettiTable, Classification, DegreeTuple,
                              EntryStatus, GhostReason, GhostTerm,
                              GradedFreeModule, IndexConvention, Prediction,
                              ResolutionShape, Route, SameDegParams)

logger = logging.getLogger(__name__)

Entry = tuple[int, int]


# ---------------------------------------------------------------------------
# shared plumbing


def _require_proper(t: DegreeTuple) -> None:
    if t.classification is not Classification.PROPER_ACI:
        raise HypothesisNotMet(f"{t} is {t.classification.value}")


def _cone(gor: ResolutionShape, t: DegreeTuple,
          gor_bounds: Iterable[Entry] = ()) -> tuple[ResolutionShape, set[Entry]]:
    """Mapping cone plus the R/I entries fed by bounded R/G entries."""
    shape = mapping_cone_aci(gor, t)
    bounds = {(t.n - i + 1, t.d - j) for i, j in gor_bounds if 1 <= i <= t.n}
    return shape, bounds


def _split(shape: ResolutionShape, bounds: set[Entry],
           cancellations: Iterable[Cancellation]) -> tuple[ResolutionShape, set[Entry]]:
    shape = split_summands(shape, list(cancellations))
    present = {key for key, _ in shape.table()}
    return shape, bounds & present


def _end_splits(t: DegreeTuple, keep: Callable[[int], bool]) -> list[Cancellation]:
    """One R(d_i - d) pair at the end of the cone for each i <= n with keep(d_i)."""
    counts = Counter(t.d - d_i for d_i in t.regular if keep(d_i))
    return [(t.n - 1, twist, c) for twist, c in sorted(counts.items())]


def _gorenstein(shape: ResolutionShape, t: DegreeTuple | None, n: int,
                bounds: Iterable[Entry] = ()) -> Prediction:
    return Prediction(shape=shape, route=Route.GORENSTEIN, n=n, degrees=t,
                      bounds=frozenset(bounds), module="R/G")


def _finish(pred: Prediction, verify: bool = True) -> Prediction:
    """Check an exact R/I prediction against the Hilbert function and attach ghosts."""
    if pred.is_exact and pred.module == "R/I" and pred.degrees is not None:
        if verify:
            check_invariants(pred.shape)
            measured = hilbert_from_betti(pred.shape, pred.n)
            expected = hilbert.aci_hilbert(pred.degrees)
            if measured != expected:
                raise ShapeMismatch(
                    f"{pred.route.value} shape for {pred.degrees} gives Hilbert function "
                    f"{measured}, expected {expected}"
                )
        pred.ghosts = detect_ghosts(pred)
    return pred


def koszul_prediction(t: DegreeTuple) -> Prediction:
    """The last form lies in J: R/I = R/J has the Koszul resolution."""
    if t.classification is not Classification.COMPLETE_INTERSECTION:
        raise HypothesisNotMet(f"{t} is not a complete intersection")
    return _finish(Prediction(shape=koszul_resolution(t.regular), route=Route.KOSZUL,
                              n=t.n, degrees=t))


# ---------------------------------------------------------------------------
# one peak


def _one_peak_alpha(n: int, ell: int, i: int) -> int:
    return binom(n + ell - 1, i + ell) * binom(ell - 1 + i, ell)


def gor_one_peak(n: int, ell: int, degrees: DegreeTuple | None = None) -> ResolutionShape:
    """Compressed Gorenstein algebra with socle degree 2*ell in n variables."""
    if degrees is not None:
        profile = hilbert.gorenstein_profile(degrees)
        if (degrees.n != n or profile.peak_count != 1 or not profile.maximal_growth
                or profile.first_peak != ell):
            raise ProfileMismatch(f"{degrees} does not have one peak at {ell} with maximal growth")
    if ell < 0:
        raise InvalidInput(f"peak index must be non-negative, got {ell}")
    positions = [
        {ell + i: _one_peak_alpha(n, ell, i) + _one_peak_alpha(n, ell, n - i)}
        for i in range(1, n)
    ]
    positions.append({2 * ell + n: 1})
    return shape_from_positions(positions)


def aci_one_peak(t: DegreeTuple) -> Prediction:
    _require_proper(t)
    profile = hilbert.gorenstein_profile(t)
    if profile.peak_count != 1 or not profile.maximal_growth:
        raise HypothesisNotMet(f"{t} is not compressed with one peak")
    ell = profile.first_peak
    gor = gor_one_peak(t.n, ell, t)
    shape, bounds = _cone(gor, t)
    shape, _ = _split(shape, bounds, _end_splits(t, lambda d_i: d_i == ell + 1))
    return _finish(Prediction(shape=shape, route=Route.ONE_PEAK_COMPRESSED, n=t.n, degrees=t,
                              gorenstein=_gorenstein(gor, t, t.n)))


# ---------------------------------------------------------------------------
# two peaks


def _two_peak_alpha(n: int, tdeg: int, i: int) -> int:
    return (binom(tdeg + n - 1, tdeg + i - 1) * binom(tdeg + i - 2, i - 1)
            - binom(tdeg + n - 1, tdeg + n - i) * binom(tdeg + n - i - 1, n - i))


def _two_peak_alphas(n: int, tdeg: int, p: int) -> dict[int, int]:
    alpha = {i: _two_peak_alpha(n, tdeg, i) for i in range(1, p + 1)}
    if any(v < 0 for v in alpha.values()):
        raise ProfileMismatch(f"negative exponent for n={n}, t={tdeg}: {alpha}")
    return alpha


def gor_two_peaks_even(n: int, tdeg: int) -> ResolutionShape:
    """Compressed Gorenstein algebra with two peaks, initial degree tdeg, n = 2p."""
    if n % 2:
        raise OddDimension(f"n={n} is odd")
    if n < 4 or tdeg < 2:
        raise InvalidInput(f"need n >= 4 and t >= 2, got n={n}, t={tdeg}")
    p = n // 2
    alpha = _two_peak_alphas(n, tdeg, p)
    positions: list[dict[int, int]] = [{tdeg + i - 1: alpha[i]} for i in range(1, p)]
    positions.append({tdeg + p - 1: alpha[p], tdeg + p: alpha[p]})
    positions.extend({tdeg + k: alpha[n - k]} for k in range(p + 1, n))
    positions.append({2 * tdeg + n - 1: 1})
    return shape_from_positions(positions)


def gor_two_peaks_odd_bounds(n: int, tdeg: int) -> Prediction:
    """Odd-dimensional analogue: the middle twist t+p may overlap, up to b_p copies."""
    if n % 2 == 0:
        raise EvenDimension(f"n={n} is even")
    if n < 5 or tdeg < 2:
        raise InvalidInput(f"need odd n >= 5 and t >= 2, got n={n}, t={tdeg}")
    p = (n - 1) // 2
    alpha = _two_peak_alphas(n, tdeg, p)
    num = prod(tdeg + k for k in range(n) if k != p)
    rho = -(-num // factorial(n - 1))
    overlap = max(0, binom(n - 1, p) * rho - binom(tdeg + n - 1, tdeg + p) * binom(tdeg + p - 1, p))

    positions: list[dict[int, int]] = [{tdeg + i - 1: alpha[i]} for i in range(1, p + 1)]
    positions.extend({tdeg + k: alpha[n - k]} for k in range(p + 1, n))
    positions.append({2 * tdeg + n - 1: 1})
    bounds: set[Entry] = set()
    if overlap:
        for pos in (p, p + 1):
            positions[pos - 1][tdeg + p] = positions[pos - 1].get(tdeg + p, 0) + overlap
            bounds.add((pos, tdeg + p))
    return Prediction(shape=shape_from_positions(positions),
                      route=Route.TWO_PEAKS_COMPRESSED_ODD_BOUND, n=n,
                      bounds=frozenset(bounds), module="R/G")


def _two_peak_ell(t: DegreeTuple) -> int:
    _require_proper(t)
    profile = hilbert.gorenstein_profile(t)
    if profile.peak_count != 2 or not profile.maximal_growth:
        raise HypothesisNotMet(f"{t} is not compressed with two peaks")
    if profile.first_peak < 1:
        raise HypothesisNotMet(f"{t} has its first peak in degree 0")
    return profile.first_peak


def aci_two_peaks_even(t: DegreeTuple) -> Prediction:
    if t.n % 2 or t.n < 4:
        raise HypothesisNotMet(f"n={t.n} is not an even number >= 4")
    ell = _two_peak_ell(t)
    gor = gor_two_peaks_even(t.n, ell + 1)
    shape, bounds = _cone(gor, t)

    splits = _end_splits(t, lambda d_i: d_i == ell + 1)
    if t.n == 4:
        d1, d2, d3, d4, d5 = t.degrees
        if d1 == d2 == 2 and d3 + d4 == d5 + 3 and t.d - (ell + 3) == d3 + d4:
            splits.append((2, d3 + d4, 1))
    shape, _ = _split(shape, bounds, splits)

    conjectural = t.n > 4
    if conjectural:
        logger.warning("%s: two-peak formula for n > 4 assumes a large first peak", t)
    route = Route.TWO_PEAKS_COMPRESSED_CONJECTURAL if conjectural else Route.TWO_PEAKS_COMPRESSED
    return _finish(Prediction(shape=shape, route=route, n=t.n, degrees=t,
                              conjectural=conjectural, gorenstein=_gorenstein(gor, t, t.n)))


def aci_two_peaks_odd_bounds(t: DegreeTuple) -> Prediction:
    if t.n % 2 == 0 or t.n < 5:
        raise HypothesisNotMet(f"n={t.n} is not an odd number > 3")
    ell = _two_peak_ell(t)
    gor = gor_two_peaks_odd_bounds(t.n, ell + 1)
    shape, bounds = _cone(gor.shape, t, gor.bounds)
    shape, bounds = _split(shape, bounds, _end_splits(t, lambda d_i: d_i == ell + 1))
    logger.warning("%s: odd two-peak formula assumes a large first peak", t)
    return _finish(Prediction(shape=shape, route=Route.TWO_PEAKS_COMPRESSED_ODD_BOUND, n=t.n,
                              degrees=t, bounds=frozenset(bounds), conjectural=True,
                              gorenstein=gor))


# ---------------------------------------------------------------------------
# three variables

_N3_ROUTES = {
    (True, True): Route.THREE_VARIABLES_COMPRESSED_ODD,
    (True, False): Route.THREE_VARIABLES_COMPRESSED_EVEN,
    (False, True): Route.THREE_VARIABLES_ODD,
    (False, False): Route.THREE_VARIABLES_EVEN,
}


def _n3_case(t: DegreeTuple) -> tuple[bool, bool, int]:
    d1, d2, d3, d4 = t.degrees
    compressed = d2 + d3 < d1 + d4 + 3
    odd = t.total % 2 == 1
    ell = (t.e - 3) // 2
    return compressed, odd, ell


def gor_n3_generic(t: DegreeTuple) -> ResolutionShape:
    """Resolution of the general Gorenstein ideal with the Hilbert function of J : I."""
    if t.n != 3:
        raise HypothesisNotMet(f"n={t.n}, expected 3")
    if t.classification is not Classification.PROPER_ACI:
        raise ClassificationError(f"{t} is {t.classification.value}, not a proper ACI")
    d1 = t.degrees[0]
    compressed, odd, ell = _n3_case(t)
    f1: list[tuple[int, int]]
    f2: list[tuple[int, int]]
    if compressed and odd:
        f1 = [(ell + 1, 2 * ell + 3)]
        f2 = [(ell + 2, 2 * ell + 3)]
        top = 2 * ell + 3
    elif compressed:
        delta = 1 if ell % 2 == 0 else 0
        f1 = [(ell + 1, ell + 2), (ell + 2, delta)]
        f2 = [(ell + 3, ell + 2), (ell + 2, delta)]
        top = 2 * ell + 4
    elif odd:
        f1 = [(d1, 1), (ell + 1, 2 * d1)]
        f2 = [(2 * ell + 3 - d1, 1), (ell + 2, 2 * d1)]
        top = 2 * ell + 3
    else:
        delta = d1 % 2
        f1 = [(d1, 1), (ell + 1, d1), (ell + 2, delta)]
        f2 = [(2 * ell + 4 - d1, 1), (ell + 3, d1), (ell + 2, delta)]
        top = 2 * ell + 4
    return ResolutionShape.of([GradedFreeModule.free(0), GradedFreeModule.of(f1),
                               GradedFreeModule.of(f2), GradedFreeModule.free(top)])


def _n3_splits(t: DegreeTuple, compressed: bool, odd: bool, ell: int) -> list[Cancellation]:
    d1, d2, d3, d4 = t.degrees
    twist = None
    if not compressed:
        twist = t.d - d1
    elif odd:
        if d1 + d4 == d2 + d3 - 1:
            twist = t.d - d1
    elif d1 + d4 == d2 + d3 - 2:
        twist = t.d - d1
    elif d1 == d2 and d3 == d4 and ell % 2 == 0:
        twist = t.d - d2
    elif d4 - d3 == d2 - d1 and ell % 2 == 0:
        twist = t.d - d1
    return [] if twist is None else [(2, twist, 1)]


def aci_n3(t: DegreeTuple) -> Prediction:
    if t.n != 3:
        raise HypothesisNotMet(f"n={t.n}, expected 3")
    if t.classification is Classification.COMPLETE_INTERSECTION:
        return koszul_prediction(t)
    _require_proper(t)
    compressed, odd, ell = _n3_case(t)
    gor = gor_n3_generic(t)
    shape, bounds = _cone(gor, t)
    shape, _ = _split(shape, bounds, _n3_splits(t, compressed, odd, ell))
    return _finish(Prediction(shape=shape, route=_N3_ROUTES[(compressed, odd)], n=3, degrees=t,
                              gorenstein=_gorenstein(gor, t, 3)))


def aci_n3_equal(a: int) -> Prediction:
    """Four general forms of degree a in three variables."""
    if a < 2:
        raise InvalidInput(f"degree must be at least 2, got {a}")
    shape = shape_from_positions([{a: 4}, {2 * a: 3, 2 * a - 1: a}, {2 * a + 1: a}])
    return _finish(Prediction(shape=shape, route=Route.THREE_VARIABLES_EQUAL_DEGREES, n=3,
                              degrees=DegreeTuple(n=3, degrees=(a,) * 4)))


# ---------------------------------------------------------------------------
# equal degrees, any n


def samedeg_params(n: int, a: int) -> SameDegParams:
    if n < 3 or a < 2:
        raise InvalidInput(f"need n >= 3 and a >= 2, got n={n}, a={a}")
    s = (n - 1) * a - n
    ell = s // 2
    t = max(0, (ell - 1) // (a - 1))

    alpha: dict[int, int] = {}
    for j in range(1, n - 1):
        head = sum((-1) ** (i + j - 1) * binom(n, i) * binom(ell + n - 2 + j - i * a, n - 2)
                   for i in range(t + 1))
        tail = sum((-1) ** (r + j) * binom(n - 2 + j - r, j - r) * alpha[r] for r in range(1, j))
        alpha[j] = head - tail
    split_at = max(n - t, 2)
    alpha[n - 1] = (
        sum((-1) ** i * alpha[n - i] for i in range(2, split_at))
        + sum((-1) ** i * (alpha[n - i] + binom(n, n - i)) for i in range(split_at, n))
        + (-1) ** n
    )
    if any(v < 0 for v in alpha.values()):
        raise ProfileMismatch(f"negative exponent for n={n}, a={a}: {alpha}")
    return SameDegParams(n=n, a=a, s=s, ell=ell, t=t,
                         alpha=tuple(alpha[j] for j in range(1, n)))


def samedeg_linear_section(n: int, a: int) -> BettiTable:
    """Betti table of A/LA over n-1 variables for n+1 forms of degree a."""
    params = samedeg_params(n, a)
    items: list[tuple[Entry, int]] = [((0, 0), 1)]
    items.extend(((i, i * a), binom(n, i)) for i in range(1, params.t + 1))
    items.extend(((j, params.ell + j), params.alpha_j(j)) for j in range(1, n))
    return BettiTable.of(items)


def linear_section_bound(quotient: BettiTable, n: int, s: int) -> tuple[BettiTable, set[Entry]]:
    """Bound for a Gorenstein algebra A of socle degree s from the table of A/LA.

    Entries inside the overlap window alpha+i-1 <= j <= s-alpha+i+1 are upper
    bounds, the others are exact.
    """
    table = self_dual_sum(quotient, n, s)
    alpha = (s + 1) // 2
    bounds = {
        (i, j) for (i, j), _ in table
        if 1 <= i <= n - 1 and alpha + i - 1 <= j <= s - alpha + i + 1
    }
    return table, bounds


def aci_samedeg(n: int, a: int) -> Prediction:
    if n == 3:
        return aci_n3_equal(a)
    params = samedeg_params(n, a)
    s, ell, t = params.s, params.ell, params.t
    gor_table, gor_bounds = linear_section_bound(samedeg_linear_section(n, a), n, s)
    if s % 2 == 0:
        gor_bounds = set()
    else:
        gor_bounds -= {(1, ell + 1), (n - 1, ell + n)}

    degrees = DegreeTuple(n=n, degrees=(a,) * (n + 1))
    shape, bounds = _cone(gor_table.shape(), degrees, gor_bounds)
    splits = [(n - i, (n - i) * a, binom(n, i)) for i in range(1, t + 1)]
    if (t + 1) * (a - 1) == ell and t + 1 <= n - 1:
        # generators of J in the first linear-strand block of A/LA
        splits.append((n - t - 1, (n - t - 1) * a, binom(n, t + 1)))
    shape, bounds = _split(shape, bounds, splits)

    route = Route.EQUAL_DEGREES if not bounds else Route.EQUAL_DEGREES_BOUND
    gor = _gorenstein(gor_table.shape(), degrees, n, gor_bounds)
    return _finish(Prediction(shape=shape, route=route, n=n, degrees=degrees,
                              bounds=frozenset(bounds), gorenstein=gor))


# ---------------------------------------------------------------------------
# four variables, even degree sum


def aci_n4_even(t: DegreeTuple) -> Prediction:
    if t.n != 4 or t.total % 2:
        raise HypothesisNotMet(f"{t} is not four variables with an even degree sum")
    _require_proper(t)
    s = t.e - t.n
    ell = s // 2
    regular = t.regular
    h_j = hilbert.ci_hilbert(regular, 4)

    b3 = h_j[ell] - h_j[ell - 1]
    a2 = 1 if regular[0] + regular[1] <= ell + 1 else 0
    low = [d_i for d_i in regular if d_i <= ell]
    a1_total, a1_degrees = len(low), sum(low)
    b1 = (a1_degrees - a2 * (regular[0] + regular[1])
          - (a1_total + b3 - 1 - a2) * (ell + 2) + b3 * (ell + 3))
    b2 = a1_total + b1 + b3 - 1 - a2
    if min(b1, b2, b3) < 0:
        raise ProfileMismatch(f"{t}: negative linear-section exponents b=({b1}, {b2}, {b3})")
    logger.debug("%s: linear section exponents b1=%d b2=%d b3=%d a2=%d", t, b1, b2, b3, a2)

    items: list[tuple[Entry, int]] = [((0, 0), 1), ((1, ell + 1), b1), ((2, ell + 2), b2),
                                      ((3, ell + 3), b3), ((2, regular[0] + regular[1]), a2)]
    items.extend(((1, d_i), 1) for d_i in low)
    gor_table, _ = linear_section_bound(BettiTable.of(items), 4, s)

    shape, bounds = _cone(gor_table.shape(), t)
    splits = _end_splits(t, lambda d_i: d_i <= ell + 1)
    # R(-d3-d4) from the Koszul complex meets the dual of an R(-d1-d2) summand of R/G
    pair = regular[2] + regular[3]
    if regular[0] + regular[1] <= ell + 2 and shape[2].mult(pair) and shape[3].mult(pair):
        splits.append((2, pair, 1))
    shape, _ = _split(shape, bounds, splits)
    return _finish(Prediction(shape=shape, route=Route.FOUR_VARIABLES_EVEN_SUM, n=4, degrees=t,
                              gorenstein=_gorenstein(gor_table.shape(), t, 4)))


# ---------------------------------------------------------------------------
# two variables and linear generators


def aci_n2(t: DegreeTuple) -> Prediction:
    """Three forms in two variables: syzygy twists from the Hilbert series numerator."""
    if t.n != 2:
        raise HypothesisNotMet(f"n={t.n}, expected 2")
    _require_proper(t)
    h = list(hilbert.aci_hilbert(t))
    numerator = hilbert.poly_mul(h, [1, -2, 1])
    generators = Counter(t.degrees)
    syzygies = {j: c + generators.get(j, 0) for j, c in enumerate(numerator) if j > 0}
    if any(m < 0 for m in syzygies.values()):
        raise ShapeMismatch(f"{t}: Hilbert numerator {numerator} has no resolution of length 2")
    shape = shape_from_positions([dict(generators), syzygies])
    return _finish(Prediction(shape=shape, route=Route.TWO_VARIABLES, n=2, degrees=t))


def deg1_reduction(t: DegreeTuple,
                   convention: IndexConvention = IndexConvention.TENSOR) -> Prediction:
    """Factor out the linear form: R/I is R'/I' tensored with the resolution of R/(L)."""
    if t.degrees[0] != 1:
        raise HypothesisNotMet(f"{t} has no linear generator")
    inner_t = DegreeTuple(n=t.n - 1, degrees=t.degrees[1:])
    inner = predict(inner_t, convention)
    shift = 1 if convention is IndexConvention.TENSOR else -1

    modules = [inner.shape[i] + inner.shape[i - 1].shifted(shift) if i else inner.shape[0]
               for i in range(inner.shape.length + 2)]
    bounds = set(inner.bounds)
    bounds |= {(i + 1, j + shift) for i, j in inner.bounds}
    pred = Prediction(shape=ResolutionShape(modules=tuple(modules)),
                      route=Route.LINEAR_FORM_REDUCTION, n=t.n, degrees=t,
                      bounds=frozenset(bounds), default_status=inner.default_status,
                      conjectural=inner.conjectural, inner=inner)
    return _finish(pred, verify=convention is IndexConvention.TENSOR)


def lex_bound_prediction(t: DegreeTuple) -> Prediction:
    table = lexbound.aci_betti_bound(t)
    return Prediction(shape=table.shape(), route=Route.LEX_BOUND, n=t.n, degrees=t,
                      default_status=EntryStatus.UPPER_BOUND)


# ---------------------------------------------------------------------------
# dispatcher

_EXACT_ROUTES: tuple[Callable[[DegreeTuple], Prediction], ...] = (
    aci_one_peak,
    aci_n4_even,
    aci_two_peaks_even,
    aci_two_peaks_odd_bounds,
)


def predict(t: DegreeTuple,
            convention: IndexConvention = IndexConvention.TENSOR) -> Prediction:
    """Prediction from the strongest result that covers t."""
    if t.classification is Classification.COMPLETE_INTERSECTION:
        pred = koszul_prediction(t)
    elif t.degrees[0] == 1:
        pred = deg1_reduction(t, convention)
    elif t.n == 2:
        pred = aci_n2(t)
    elif t.n == 3:
        pred = aci_n3(t)
    else:
        pred = _predict_general(t)
    logger.info("%s: route %s", t, pred.route.value)
    return pred


def _predict_general(t: DegreeTuple) -> Prediction:
    fallback = None
    if t.is_equal_degree:
        fallback = aci_samedeg(t.n, t.degrees[0])
        if fallback.is_exact:
            return fallback
    for route in _EXACT_ROUTES:
        try:
            return route(t)
        except HypothesisNotMet as exc:
            logger.debug("%s: %s skipped (%s)", t, route.__name__, exc)
        except ProfileMismatch as exc:
            logger.warning("%s: %s rejected (%s)", t, route.__name__, exc)
    return fallback if fallback is not None else lex_bound_prediction(t)


# ---------------------------------------------------------------------------
# ghosts and bound families


def detect_ghosts(pred: Prediction) -> list[GhostTerm]:
    """Twists shared by consecutive modules of an exact prediction."""
    if not pred.is_exact:
        raise BoundsPresent(f"{pred.route.value} prediction has upper-bound entries")
    generators: set[int] = set()
    pair_sums: set[int] = set()
    if pred.degrees is not None:
        generators = set(pred.degrees.degrees)
        pair_sums = {a + b for a, b in combinations(pred.degrees.regular, 2)}

    ghosts = []
    for i, twist, mult in consecutive_overlaps(pred.shape):
        koszul = i == 1 and twist in generators and twist in pair_sums
        reason = GhostReason.KOSZUL_VS_GENERATOR if koszul else GhostReason.NON_SPLITTING_OVERLAP
        ghosts.append(GhostTerm(position=i, twist=twist, multiplicity=mult, reason=reason))
    return ghosts


def family_fit(pred: Prediction, oracle: BettiTable) -> dict[Entry, int] | None:
    """Explain the oracle table as the bound with consecutive pairs cancelled.

    Returns the number of pairs cancelled between F_i and F_i+1 keyed by (i, j),
    or None when the measured table is not of that form.
    """
    bound = pred.table()
    keys = {key for key, _ in bound} | {key for key, _ in oracle}
    gap = {key: bound.get(*key) - oracle.get(*key) for key in keys}
    if any(v < 0 for v in gap.values()):
        return None
    if any(v and pred.status(*key) is EntryStatus.EXACT for key, v in gap.items()):
        return None

    top = max((i for i, _ in keys), default=0)
    pairs: dict[Entry, int] = {}
    for twist in sorted({j for _, j in keys}):
        carried = 0
        for i in range(top + 1):
            carried = gap.get((i, twist), 0) - carried
            if carried < 0:
                return None
            if carried:
                pairs[(i, twist)] = carried
        if carried:
            return None
    return pairs


def measured_bounds(pred: Prediction, oracle: BettiTable) -> dict[Entry, int]:
    """Oracle values at the entries the prediction only bounds."""
    return {key: oracle.get(*key) for key, _ in pred.table()
            if pred.status(*key) is EntryStatus.UPPER_BOUND}
