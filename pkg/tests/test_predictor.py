"""Tests for the closed-form predictions and the route dispatcher."""

import pytest

from aci_betti import predictor
from aci_betti.betti import check_gorenstein_symmetry, shape_from_positions
from aci_betti.commands.scan import tuples_in_box
from aci_betti.errors import (BoundsPresent, EvenDimension, HypothesisNotMet,
                              InvalidInput, OddDimension, ProfileMismatch)
from aci_betti.models import (BettiTable, DegreeTuple, EntryStatus,
                              GhostReason, Route)


def _t(n, *degrees):
    return DegreeTuple.of(n, degrees)


def _table(*positions):
    return shape_from_positions(list(positions)).table()


def _ghosts(pred):
    return [(g.position, g.twist) for g in pred.ghosts]


class TestKoszul:
    def test_complete_intersection(self):
        pred = predictor.predict(_t(3, 2, 2, 2, 4))
        assert pred.route is Route.KOSZUL
        assert pred.table() == _table({2: 3}, {4: 3}, {6: 1})
        assert pred.ghosts == []

    def test_rejects_proper_tuple(self):
        with pytest.raises(HypothesisNotMet):
            predictor.koszul_prediction(_t(3, 4, 4, 4, 8))


class TestTwoVariables:
    def test_three_quadrics(self):
        pred = predictor.aci_n2(_t(2, 2, 2, 2))
        assert pred.table() == _table({2: 3}, {3: 2})

    def test_mixed_degrees(self):
        pred = predictor.predict(_t(2, 2, 3, 3))
        assert pred.route is Route.TWO_VARIABLES
        assert pred.table() == _table({2: 1, 3: 2}, {4: 2})


class TestLinearForm:
    def test_tensor_with_linear_form(self):
        pred = predictor.predict(_t(3, 1, 2, 2, 2))
        assert pred.route is Route.LINEAR_FORM_REDUCTION
        assert pred.inner is not None and pred.inner.route is Route.TWO_VARIABLES
        assert pred.table() == _table({1: 1, 2: 3}, {3: 5}, {4: 2})

    def test_requires_linear_form(self):
        with pytest.raises(HypothesisNotMet):
            predictor.deg1_reduction(_t(3, 2, 2, 2, 2))


class TestThreeVariables:
    def test_ghost_tuple(self):
        pred = predictor.predict(_t(3, 4, 4, 4, 8))
        assert pred.route is Route.THREE_VARIABLES_COMPRESSED_EVEN
        assert pred.table() == _table({4: 3, 8: 1}, {8: 3, 9: 2, 10: 1}, {10: 1, 11: 2})
        assert _ghosts(pred) == [(1, 8), (2, 10)]
        reasons = [g.reason for g in pred.ghosts]
        assert reasons == [GhostReason.KOSZUL_VS_GENERATOR, GhostReason.NON_SPLITTING_OVERLAP]

    def test_gorenstein_of_ghost_tuple(self):
        gor = predictor.gor_n3_generic(_t(3, 4, 4, 4, 8))
        assert gor.table() == _table({1: 2, 2: 1}, {2: 1, 3: 2}, {4: 1})

    def test_split_at_first_degree(self):
        pred = predictor.predict(_t(3, 3, 6, 6, 7))
        assert pred.table() == _table({3: 1, 6: 2, 7: 1}, {9: 2, 10: 4, 11: 1}, {11: 1, 12: 3})
        assert _ghosts(pred) == [(2, 11)]

    def test_no_split(self):
        pred = predictor.predict(_t(3, 5, 5, 6, 8))
        assert pred.table() == _table({5: 2, 6: 1, 8: 1}, {10: 1, 11: 6, 12: 1}, {12: 1, 13: 4})
        assert _ghosts(pred) == [(2, 12)]

    def test_compressed_odd_split(self):
        pred = predictor.predict(_t(3, 2, 3, 5, 5))
        assert pred.route is Route.THREE_VARIABLES_COMPRESSED_ODD
        assert pred.table() == _table({2: 1, 3: 1, 5: 2}, {5: 1, 7: 6}, {8: 4})

    @pytest.mark.parametrize("a", [2, 3, 4, 5, 6])
    def test_equal_degrees_agree(self, a):
        expected = _table({a: 4}, {2 * a - 1: a, 2 * a: 3}, {2 * a + 1: a})
        assert predictor.aci_n3_equal(a).table() == expected
        assert predictor.predict(_t(3, a, a, a, a)).table() == expected

    def test_equal_degrees_rejects_linear(self):
        with pytest.raises(InvalidInput):
            predictor.aci_n3_equal(1)

    def test_compressed_even_rules_never_conflict(self):
        for t in tuples_in_box(3, 2, 10):
            compressed, odd, ell = predictor._n3_case(t)
            splits = predictor._n3_splits(t, compressed, odd, ell)
            assert len(splits) <= 1, t
            if compressed and not odd:
                d1, d2, d3, d4 = t.degrees
                matched = set()
                if d1 + d4 == d2 + d3 - 2:
                    matched.add(t.d - d1)
                if d1 == d2 and d3 == d4 and ell % 2 == 0:
                    matched.add(t.d - d2)
                if d4 - d3 == d2 - d1 and ell % 2 == 0:
                    matched.add(t.d - d1)
                assert len(matched) <= 1, t
                assert [j for _, j, _ in splits] == sorted(matched), t
            assert predictor.aci_n3(t).is_exact


class TestOnePeak:
    def test_gorenstein_shape(self):
        gor = predictor.gor_one_peak(4, 3)
        assert gor.table() == _table({4: 25}, {5: 48}, {6: 25}, {10: 1})
        assert check_gorenstein_symmetry(gor, 6, 4)

    def test_profile_mismatch(self):
        with pytest.raises(ProfileMismatch):
            predictor.gor_one_peak(4, 2, _t(4, 5, 5, 5, 5, 10))

    def test_cone_is_minimal(self):
        pred = predictor.predict(_t(4, 5, 5, 5, 5, 10))
        assert pred.route is Route.ONE_PEAK_COMPRESSED
        assert pred.table() == _table({5: 4, 10: 1}, {10: 6, 14: 25}, {15: 52}, {16: 25})

    def test_end_split(self):
        pred = predictor.predict(_t(4, 3, 5, 5, 5, 10))
        assert pred.table() == _table({3: 1, 5: 3, 10: 1}, {8: 3, 10: 3, 13: 16},
                                      {13: 3, 14: 30}, {15: 15})
        assert _ghosts(pred) == [(1, 10), (2, 13)]

    def test_quadrics_match_equal_degree_route(self):
        expected = _table({2: 5}, {4: 15}, {5: 16}, {6: 5})
        assert predictor.aci_one_peak(_t(4, 2, 2, 2, 2, 2)).table() == expected
        assert predictor.predict(_t(4, 2, 2, 2, 2, 2)).table() == expected

    def test_two_peak_tuple_rejected(self):
        with pytest.raises(HypothesisNotMet):
            predictor.aci_one_peak(_t(4, 4, 4, 4, 4, 5))


class TestTwoPeaks:
    def test_gorenstein_four_variables(self):
        assert predictor.gor_two_peaks_even(4, 4).table() == _table(
            {4: 15}, {5: 14, 6: 14}, {7: 15}, {11: 1})
        assert predictor.gor_two_peaks_even(4, 2).table() == _table(
            {2: 6}, {3: 5, 4: 5}, {5: 6}, {7: 1})

    def test_even_rejects_odd(self):
        with pytest.raises(OddDimension):
            predictor.gor_two_peaks_even(5, 2)

    def test_odd_rejects_even(self):
        with pytest.raises(EvenDimension):
            predictor.gor_two_peaks_odd_bounds(4, 2)

    def test_end_splits(self):
        pred = predictor.predict(_t(4, 4, 4, 4, 4, 5))
        assert pred.route is Route.TWO_PEAKS_COMPRESSED
        assert pred.table() == _table({4: 4, 5: 1}, {8: 6, 9: 15}, {10: 14, 11: 14}, {12: 11})
        assert pred.is_proven

    def test_cubics(self):
        pred = predictor.predict(_t(4, 3, 3, 3, 3, 3))
        assert pred.table() == _table({3: 5}, {6: 16}, {7: 9, 8: 9}, {9: 6})

    def test_generator_pair_rule(self):
        pred = predictor.predict(_t(4, 2, 2, 4, 4, 5))
        assert pred.table() == _table({2: 2, 4: 2, 5: 1}, {4: 1, 6: 4, 7: 6}, {8: 6, 9: 5}, {10: 4})

    def test_odd_bounds(self):
        gor = predictor.gor_two_peaks_odd_bounds(5, 2)
        assert gor.table() == _table({2: 10}, {3: 16, 4: 3}, {4: 3, 5: 16}, {6: 10}, {8: 1})
        assert gor.bounds == frozenset({(2, 4), (3, 4)})
        assert gor.status(2, 4) is EntryStatus.UPPER_BOUND


class TestEqualDegrees:
    @pytest.mark.parametrize("a, ell, alpha", [
        (4, 4, (9, 23, 11)),
        (5, 5, (16, 36, 17)),
    ])
    def test_params(self, a, ell, alpha):
        params = predictor.samedeg_params(4, a)
        assert params.ell == ell
        assert params.t == 1
        assert params.alpha == alpha
        assert params.alpha_j(2) == alpha[1]

    def test_params_reject_small(self):
        with pytest.raises(InvalidInput):
            predictor.samedeg_params(2, 3)

    def test_linear_section(self):
        assert predictor.samedeg_linear_section(4, 4) == _table({4: 4, 5: 9}, {6: 23}, {7: 11})

    def test_linear_section_bound_window(self):
        table, bounds = predictor.linear_section_bound(predictor.samedeg_linear_section(4, 4), 4, 8)
        assert table == _table({4: 4, 5: 20}, {6: 46}, {7: 20, 8: 4}, {12: 1})
        assert (4, 12) not in bounds
        assert (0, 0) not in bounds
        assert (2, 6) in bounds

    def test_even_socle_exact(self):
        pred = predictor.predict(_t(4, 4, 4, 4, 4, 4))
        assert pred.route is Route.EQUAL_DEGREES
        assert pred.table() == _table({4: 5}, {8: 10, 9: 20}, {10: 46}, {11: 20})
        assert pred.is_exact

    def test_odd_socle_bounds(self):
        pred = predictor.predict(_t(4, 5, 5, 5, 5, 5))
        assert pred.route is Route.EQUAL_DEGREES_BOUND
        assert pred.table() == _table({5: 5}, {10: 10, 11: 16, 12: 17},
                                      {12: 36, 13: 36}, {13: 17, 14: 16})
        assert pred.bounds == frozenset({(2, 12), (3, 12), (3, 13), (4, 13)})

    def test_five_variables_is_bound(self):
        pred = predictor.predict(_t(5, 3, 3, 3, 3, 3, 3))
        assert pred.route is Route.EQUAL_DEGREES_BOUND
        assert not pred.is_exact

    def test_three_variables_delegates(self):
        assert predictor.aci_samedeg(3, 4).route is Route.THREE_VARIABLES_EQUAL_DEGREES


class TestFourVariablesEvenSum:
    def test_two_ghosts(self):
        pred = predictor.predict(_t(4, 3, 3, 4, 6, 6))
        assert pred.route is Route.FOUR_VARIABLES_EVEN_SUM
        assert pred.table() == _table({3: 2, 4: 1, 6: 2}, {6: 1, 7: 2, 9: 4, 10: 18},
                                      {10: 1, 11: 36}, {12: 16})
        assert pred.gorenstein is not None
        assert pred.gorenstein.table() == _table({3: 2, 4: 17}, {5: 36}, {6: 17, 7: 2}, {10: 1})
        assert _ghosts(pred) == [(1, 6), (2, 10)]
        assert pred.ghosts[0].reason is GhostReason.KOSZUL_VS_GENERATOR

    def test_requires_even_sum(self):
        with pytest.raises(HypothesisNotMet):
            predictor.aci_n4_even(_t(4, 4, 4, 4, 4, 5))

    @pytest.mark.parametrize("degrees, twist, third", [
        ((2, 2, 4, 4, 4), 8, 19),
        ((2, 2, 4, 5, 5), 9, 18),
        ((2, 3, 5, 5, 5), 10, 27),
    ])
    def test_koszul_pair_cancels_with_dual_summand(self, degrees, twist, third):
        pred = predictor.predict(_t(4, *degrees))
        assert pred.route is Route.FOUR_VARIABLES_EVEN_SUM
        assert pred.table().get(2, twist) == 0
        assert pred.table().get(3, twist) == third

    @pytest.mark.parametrize("degrees", [
        (2, 2, 4, 6, 6), (2, 2, 5, 5, 6), (2, 2, 6, 6, 6),
        (2, 3, 5, 6, 6), (2, 4, 6, 6, 6), (3, 3, 6, 6, 6),
    ])
    def test_no_koszul_pair_left_at_position_two(self, degrees):
        t = _t(4, *degrees)
        pred = predictor.aci_n4_even(t)
        assert pred.table().get(2, t.regular[2] + t.regular[3]) == 0

    def test_pair_kept_when_first_degrees_are_large(self):
        pred = predictor.aci_n4_even(_t(4, 3, 3, 4, 6, 6))
        assert pred.table().get(2, 10) == 18


class TestFallback:
    def test_lex_bound(self):
        pred = predictor.lex_bound_prediction(_t(3, 4, 4, 4, 8))
        assert pred.route is Route.LEX_BOUND
        assert pred.default_status is EntryStatus.UPPER_BOUND
        assert not pred.is_exact
        assert pred.status(1, 4) is EntryStatus.UPPER_BOUND

    def test_no_route_falls_back_to_lex_bound(self, monkeypatch):
        monkeypatch.setattr(predictor, "_EXACT_ROUTES", ())
        pred = predictor.predict(_t(4, 4, 4, 4, 4, 5))
        assert pred.route is Route.LEX_BOUND

    def test_odd_bound_route_skipped_without_maximal_growth(self):
        with pytest.raises(HypothesisNotMet):
            predictor.aci_two_peaks_odd_bounds(_t(5, 3, 3, 3, 3, 3, 3))


class TestGhostsAndFamilies:
    def test_detect_ghosts_needs_exact(self):
        with pytest.raises(BoundsPresent):
            predictor.detect_ghosts(predictor.predict(_t(4, 5, 5, 5, 5, 5)))

    def test_family_fit_measures_cancellations(self):
        pred = predictor.predict(_t(4, 5, 5, 5, 5, 5))
        measured = _table({5: 5}, {10: 10, 11: 16, 12: 15}, {12: 34, 13: 34}, {13: 15, 14: 16})
        assert predictor.family_fit(pred, measured) == {(2, 12): 2, (3, 13): 2}
        assert predictor.measured_bounds(pred, measured) == {
            (2, 12): 15, (3, 12): 34, (3, 13): 34, (4, 13): 15}

    def test_family_fit_no_cancellation(self):
        pred = predictor.predict(_t(4, 5, 5, 5, 5, 5))
        assert predictor.family_fit(pred, pred.table()) == {}

    def test_family_fit_rejects_exact_mismatch(self):
        pred = predictor.predict(_t(4, 5, 5, 5, 5, 5))
        measured = BettiTable.of([*pred.table(), ((1, 5), 1)])
        assert predictor.family_fit(pred, measured) is None
