"""Hilbert functions of complete intersections, generic almost complete
intersections and the Gorenstein algebra linked to them, plus Macaulay growth
and SI-sequence checks.

Every function here is exact integer arithmetic on small sequences.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Sequence

from aci_betti.errors import ClassificationError, InvalidInput
from aci_betti.models import (Classification, DegreeTuple, GorensteinProfile,
                              HilbertFunction)


def binom(a: int, b: int) -> int:
    """C(a, b), zero unless 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def poly_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1) if p and q else []
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def delta(h: HilbertFunction | Sequence[int]) -> list[int]:
    """First difference h(t) - h(t-1), starting with h(0)."""
    vals = list(h)
    return [v - (vals[k - 1] if k else 0) for k, v in enumerate(vals)]


def truncate_positive(seq: Iterable[int]) -> HilbertFunction:
    """[x]_+ applied entrywise, cut at the first non-positive value."""
    out: list[int] = []
    for v in seq:
        if v <= 0:
            break
        out.append(v)
    return HilbertFunction.of(out)


def ci_hilbert(degrees: Sequence[int], n: int, maxdeg: int | None = None) -> HilbertFunction:
    """Hilbert function of n variables modulo a regular sequence of the given degrees.

    With fewer forms than variables the quotient is infinite and ``maxdeg``
    bounds the returned prefix.
    """
    m = len(degrees)
    if m > n:
        raise InvalidInput(f"{m} forms cannot be a regular sequence in {n} variables")
    if any(d < 1 for d in degrees):
        raise InvalidInput(f"degrees must be positive: {tuple(degrees)}")
    if m < n and maxdeg is None:
        raise InvalidInput("maxdeg is required when there are fewer forms than variables")

    numerator = [1]
    for d in degrees:
        numerator = poly_mul(numerator, [1] + [0] * (d - 1) + [-1])
    top = sum(degrees) - n if m == n else maxdeg
    assert top is not None
    if maxdeg is not None:
        top = min(top, maxdeg)
    values = [
        sum(c * binom(t - k + n - 1, n - 1) for k, c in enumerate(numerator) if k <= t)
        for t in range(top + 1)
    ]
    return HilbertFunction.of(values)


def aci_hilbert(t: DegreeTuple) -> HilbertFunction:
    """Hilbert function of R/I for n+1 generic forms of the given degrees."""
    h_j = ci_hilbert(t.regular, t.n)
    if t.classification is Classification.COMPLETE_INTERSECTION:
        return h_j
    return truncate_positive(h_j[k] - h_j[k - t.last] for k in range(len(h_j)))


def _require_proper(t: DegreeTuple) -> None:
    if t.classification is not Classification.PROPER_ACI:
        raise ClassificationError(f"{t} is {t.classification.value}, not a proper ACI")


def aci_socle_degree(t: DegreeTuple) -> int:
    _require_proper(t)
    return (t.total - t.n - 1) // 2


def linked_gorenstein_hilbert(t: DegreeTuple) -> HilbertFunction:
    """h_{R/G}(j) = h_{R/J}(d-n-j) - h_{R/I}(d-n-j) for G = J : I."""
    _require_proper(t)
    h_j = ci_hilbert(t.regular, t.n)
    h_i = aci_hilbert(t)
    top = t.d - t.n
    return HilbertFunction.of(h_j[top - j] - h_i[top - j] for j in range(top + 1))


def gorenstein_profile(t: DegreeTuple) -> GorensteinProfile:
    _require_proper(t)
    s = t.e - t.n
    peaks = 1 if s % 2 == 0 else 2
    profile = GorensteinProfile(
        socle_degree=s,
        first_peak=s // 2,
        peak_count=peaks,
        maximal_growth=sum(t.degrees[1 : t.n]) < t.degrees[0] + t.last + t.n,
    )

    h = linked_gorenstein_hilbert(t)
    if h.socle_degree != s or not h.is_symmetric:
        raise ClassificationError(f"linked Hilbert function {h} does not match socle degree {s}")
    return profile


def macaulay_growth(h_t: int, t: int) -> int:
    """Largest h_{t+1} allowed after h_t in degree t (Macaulay's bound)."""
    if h_t < 0 or t < 1:
        raise InvalidInput(f"macaulay_growth needs h_t >= 0 and t >= 1, got ({h_t}, {t})")
    rest = h_t
    total = 0
    k = t
    while rest > 0 and k > 0:
        top = k
        while binom(top + 1, k) <= rest:
            top += 1
        rest -= binom(top, k)
        total += binom(top + 1, k + 1)
        k -= 1
    return total


def is_o_sequence(h: HilbertFunction | Sequence[int]) -> bool:
    vals = list(h)
    if not vals or vals[0] != 1:
        return False
    if any(v < 0 for v in vals):
        return False
    return all(vals[t + 1] <= macaulay_growth(vals[t], t) for t in range(1, len(vals) - 1))


def is_si_sequence(h: HilbertFunction | Sequence[int]) -> bool:
    vals = list(h)
    if not vals or vals != vals[::-1]:
        return False
    half = delta(vals[: (len(vals) - 1) // 2 + 1])
    if any(v < 0 for v in half):
        return False
    trimmed = list(half)
    while trimmed and trimmed[-1] == 0:
        trimmed.pop()
    return is_o_sequence(trimmed)


def first_difference_up_to(h: HilbertFunction | Sequence[int], k: int) -> HilbertFunction:
    """Delta h through degree k, zero afterwards: the Hilbert function of A/LA
    when multiplication by a general linear form is injective up to degree k."""
    return HilbertFunction.of(delta(list(h)[: k + 1]))
