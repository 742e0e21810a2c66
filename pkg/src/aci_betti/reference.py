"""Worked reference tables replayed by the ``repro`` command.

Each case recomputes a Hilbert function, a Gorenstein resolution or a full
prediction from scratch and compares it with a table worked out by hand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Union

from aci_betti import hilbert, lexbound, predictor
from aci_betti.betti import hilbert_from_betti, shape_from_positions
from aci_betti.models import (BettiTable, DegreeTuple, HilbertFunction,
                              Prediction, ResolutionShape)

Computed = Union[Prediction, ResolutionShape, BettiTable, HilbertFunction]
Expected = Union[BettiTable, HilbertFunction]


@dataclass(frozen=True)
class ReferenceCase:
    name: str
    description: str
    compute: Callable[[], Computed] = field(repr=False)
    expected: Expected
    bounds: frozenset[tuple[int, int]] = frozenset()
    ghosts: tuple[tuple[int, int], ...] | None = None  # (position, twist)


@dataclass
class ReferenceResult:
    case: ReferenceCase
    actual: Expected
    bounds: frozenset[tuple[int, int]] = frozenset()
    ghosts: tuple[tuple[int, int], ...] | None = None

    @property
    def ok(self) -> bool:
        if self.actual != self.case.expected or self.bounds != self.case.bounds:
            return False
        return self.case.ghosts is None or self.ghosts == self.case.ghosts


def _table(*positions: dict[int, int]) -> BettiTable:
    return shape_from_positions(list(positions)).table()


def _t(n: int, *degrees: int) -> DegreeTuple:
    return DegreeTuple.of(n, degrees)


def _h(*values: int) -> HilbertFunction:
    return HilbertFunction.of(values)


def run_case(case: ReferenceCase) -> ReferenceResult:
    value = case.compute()
    if isinstance(value, Prediction):
        ghosts = tuple((g.position, g.twist) for g in value.ghosts)
        return ReferenceResult(case, value.table(), value.bounds, ghosts)
    if isinstance(value, ResolutionShape):
        return ReferenceResult(case, value.table())
    return ReferenceResult(case, value)


def _three_var_equal(a: int) -> ReferenceCase:
    return ReferenceCase(
        name=f"three-var-equal-{a}",
        description=f"four general forms of degree {a} in three variables",
        compute=lambda: predictor.predict(_t(3, a, a, a, a)),
        expected=_table({a: 4}, {2 * a - 1: a, 2 * a: 3}, {2 * a + 1: a}),
        ghosts=(),
    )


CASES: tuple[ReferenceCase, ...] = (
    ReferenceCase(
        name="hilbert-4448-aci",
        description="R/I for (4,4,4,8) in three variables",
        compute=lambda: hilbert.aci_hilbert(_t(3, 4, 4, 4, 8)),
        expected=_h(1, 3, 6, 10, 12, 12, 10, 6, 2),
    ),
    ReferenceCase(
        name="hilbert-5555-10-linked",
        description="linked Gorenstein quotient of (5,5,5,5,10)",
        compute=lambda: hilbert.linked_gorenstein_hilbert(_t(4, 5, 5, 5, 5, 10)),
        expected=_h(1, 4, 10, 20, 10, 4, 1),
    ),
    ReferenceCase(
        name="hilbert-4444-5-linked",
        description="linked Gorenstein quotient of (4,4,4,4,5), two peaks",
        compute=lambda: hilbert.linked_gorenstein_hilbert(_t(4, 4, 4, 4, 4, 5)),
        expected=_h(1, 4, 10, 20, 20, 10, 4, 1),
    ),
    ReferenceCase(
        name="hilbert-44444-linked",
        description="linked Gorenstein quotient of five quartics",
        compute=lambda: hilbert.linked_gorenstein_hilbert(_t(4, 4, 4, 4, 4, 4)),
        expected=_h(1, 4, 10, 20, 31, 20, 10, 4, 1),
    ),
    ReferenceCase(
        name="one-peak-gorenstein-4-3",
        description="compressed Gorenstein algebra, n=4, socle degree 6",
        compute=lambda: predictor.gor_one_peak(4, 3),
        expected=_table({4: 25}, {5: 48}, {6: 25}, {10: 1}),
    ),
    ReferenceCase(
        name="one-peak-5555-10",
        description="(5,5,5,5,10): the mapping cone is already minimal",
        compute=lambda: predictor.predict(_t(4, 5, 5, 5, 5, 10)),
        expected=_table({5: 4, 10: 1}, {10: 6, 14: 25}, {15: 52}, {16: 25}),
        ghosts=((1, 10),),
    ),
    ReferenceCase(
        name="one-peak-3555-10",
        description="(3,5,5,5,10): one R(-15) pair splits, R(-13)^3 survives",
        compute=lambda: predictor.predict(_t(4, 3, 5, 5, 5, 10)),
        expected=_table({3: 1, 5: 3, 10: 1}, {8: 3, 10: 3, 13: 16}, {13: 3, 14: 30}, {15: 15}),
        ghosts=((1, 10), (2, 13)),
    ),
    ReferenceCase(
        name="lex-bound-gorenstein-4-4",
        description="largest Betti numbers for h = 1 4 10 20 20 10 4 1",
        compute=lambda: lexbound.gor_betti_bound(_h(1, 4, 10, 20, 20, 10, 4, 1), 4),
        expected=_table({4: 15, 5: 10}, {5: 24, 6: 24}, {6: 10, 7: 15}, {11: 1}),
    ),
    ReferenceCase(
        name="two-peaks-gorenstein-4-4",
        description="general Betti numbers for h = 1 4 10 20 20 10 4 1",
        compute=lambda: predictor.gor_two_peaks_even(4, 4),
        expected=_table({4: 15}, {5: 14, 6: 14}, {7: 15}, {11: 1}),
    ),
    ReferenceCase(
        name="two-peaks-gorenstein-4-2",
        description="general Betti numbers for h = 1 4 4 1",
        compute=lambda: predictor.gor_two_peaks_even(4, 2),
        expected=_table({2: 6}, {3: 5, 4: 5}, {5: 6}, {7: 1}),
    ),
    ReferenceCase(
        name="two-peaks-4444-5",
        description="(4,4,4,4,5): four end splits of R(-12)",
        compute=lambda: predictor.predict(_t(4, 4, 4, 4, 4, 5)),
        expected=_table({4: 4, 5: 1}, {8: 6, 9: 15}, {10: 14, 11: 14}, {12: 11}),
        ghosts=(),
    ),
    ReferenceCase(
        name="three-var-gorenstein-4448",
        description="linked Gorenstein ideal of (4,4,4,8): two linear forms and a quadric",
        compute=lambda: predictor.gor_n3_generic(_t(3, 4, 4, 4, 8)),
        expected=_table({1: 2, 2: 1}, {2: 1, 3: 2}, {4: 1}),
    ),
    ReferenceCase(
        name="ghost-4448-aci",
        description="(4,4,4,8): R(-10) survives in F_2 and F_3",
        compute=lambda: predictor.predict(_t(3, 4, 4, 4, 8)),
        expected=_table({4: 3, 8: 1}, {8: 3, 9: 2, 10: 1}, {10: 1, 11: 2}),
        ghosts=((1, 8), (2, 10)),
    ),
    ReferenceCase(
        name="three-var-2355",
        description="(2,3,5,5): compressed, odd sum, one R(-8) pair splits",
        compute=lambda: predictor.predict(_t(3, 2, 3, 5, 5)),
        expected=_table({2: 1, 3: 1, 5: 2}, {5: 1, 7: 6}, {8: 4}),
        ghosts=((1, 5),),
    ),
    ReferenceCase(
        name="three-var-gorenstein-2555",
        description="linked Gorenstein ideal of (2,5,5,5): a quadric and 2*d1 cubics",
        compute=lambda: predictor.gor_n3_generic(_t(3, 2, 5, 5, 5)),
        expected=_table({2: 1, 3: 4}, {4: 4, 5: 1}, {7: 1}),
    ),
    ReferenceCase(
        name="three-var-2555",
        description="(2,5,5,5): not compressed, odd sum, R(-10) splits",
        compute=lambda: predictor.predict(_t(3, 2, 5, 5, 5)),
        expected=_table({2: 1, 5: 3}, {7: 3, 8: 4}, {9: 4}),
        ghosts=(),
    ),
    ReferenceCase(
        name="three-var-gorenstein-2666",
        description="linked Gorenstein ideal of (2,6,6,6): even d1, no middle twist",
        compute=lambda: predictor.gor_n3_generic(_t(3, 2, 6, 6, 6)),
        expected=_table({2: 1, 3: 2}, {5: 2, 6: 1}, {8: 1}),
    ),
    ReferenceCase(
        name="three-var-2666",
        description="(2,6,6,6): not compressed, even sum, R(-12) splits",
        compute=lambda: predictor.predict(_t(3, 2, 6, 6, 6)),
        expected=_table({2: 1, 6: 3}, {8: 3, 9: 2}, {11: 2}),
        ghosts=(),
    ),
    ReferenceCase(
        name="two-peaks-33335",
        description="(3,3,3,3,5): two peaks at 1 and 2, no generator splits",
        compute=lambda: predictor.predict(_t(4, 3, 3, 3, 3, 5)),
        expected=_table({3: 4, 5: 1}, {6: 6, 7: 6}, {8: 5, 9: 9}, {10: 6}),
        ghosts=(),
    ),
    *(_three_var_equal(a) for a in range(2, 7)),
    ReferenceCase(
        name="equal-degree-4-4-section",
        description="five quartics: quotient by a general linear form",
        compute=lambda: predictor.samedeg_linear_section(4, 4),
        expected=_table({4: 4, 5: 9}, {6: 23}, {7: 11}),
    ),
    ReferenceCase(
        name="equal-degree-4-4-section-hilbert",
        description="five quartics: Hilbert function of A/LA from its resolution",
        compute=lambda: hilbert_from_betti(predictor.samedeg_linear_section(4, 4), 3),
        expected=_h(1, 3, 6, 10, 11),
    ),
    ReferenceCase(
        name="equal-degree-4-4-gorenstein",
        description="five quartics: linked Gorenstein algebra",
        compute=lambda: predictor.aci_samedeg(4, 4).gorenstein,  # type: ignore[return-value,union-attr]
        expected=_table({4: 4, 5: 20}, {6: 46}, {7: 20, 8: 4}, {12: 1}),
    ),
    ReferenceCase(
        name="equal-degree-4-4",
        description="five general quartics in four variables",
        compute=lambda: predictor.predict(_t(4, 4, 4, 4, 4, 4)),
        expected=_table({4: 5}, {8: 10, 9: 20}, {10: 46}, {11: 20}),
        ghosts=(),
    ),
    ReferenceCase(
        name="equal-degree-4-5-bound",
        description="five quintics: bound family with cancellable middle twists",
        compute=lambda: predictor.predict(_t(4, 5, 5, 5, 5, 5)),
        expected=_table({5: 5}, {10: 10, 11: 16, 12: 17}, {12: 36, 13: 36}, {13: 17, 14: 16}),
        bounds=frozenset({(2, 12), (3, 12), (3, 13), (4, 13)}),
        ghosts=(),
    ),
    ReferenceCase(
        name="four-var-even-33466-gorenstein",
        description="(3,3,4,6,6): linked Gorenstein algebra",
        compute=lambda: predictor.predict(_t(4, 3, 3, 4, 6, 6)).gorenstein,  # type: ignore[return-value]
        expected=_table({3: 2, 4: 17}, {5: 36}, {6: 17, 7: 2}, {10: 1}),
    ),
    ReferenceCase(
        name="four-var-even-33466",
        description="(3,3,4,6,6): R(-6) and R(-10) survive in consecutive modules",
        compute=lambda: predictor.predict(_t(4, 3, 3, 4, 6, 6)),
        expected=_table({3: 2, 4: 1, 6: 2}, {6: 1, 7: 2, 9: 4, 10: 18}, {10: 1, 11: 36}, {12: 16}),
        ghosts=((1, 6), (2, 10)),
    ),
)


def find(name: str) -> ReferenceCase | None:
    return next((c for c in CASES if c.name == name), None)
