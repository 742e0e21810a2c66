"""Tests for lex-segment ideals and the Betti number bounds built from them."""

import random

import pytest

from aci_betti import hilbert, lexbound, oracle
from aci_betti.betti import hilbert_from_betti, shape_from_positions
from aci_betti.commands.scan import tuples_in_box
from aci_betti.errors import InvalidInput, NotOSequence, NotSISequence, NotStable
from aci_betti.models import (DegreeTuple, FieldConfig, HilbertFunction,
                              MonomialIdeal)
from aci_betti.predictor import predict


class TestLexIdeal:
    def test_square_of_maximal_ideal(self):
        m = lexbound.lex_ideal_from_hilbert(HilbertFunction.of([1, 2]), 2)
        assert set(m.generators) == {(2, 0), (1, 1), (0, 2)}
        assert m.degrees() == [2, 2, 2]

    def test_lex_segment_in_degree_two(self):
        m = lexbound.lex_ideal_from_hilbert(HilbertFunction.of([1, 3, 5]), 3)
        assert m.generators[0] == (2, 0, 0)
        assert m.contains((3, 1, 0))
        assert not m.contains((0, 0, 2))

    def test_not_o_sequence(self):
        with pytest.raises(NotOSequence):
            lexbound.lex_ideal_from_hilbert(HilbertFunction.of([1, 1, 2]), 2)

    def test_too_many_linear_forms(self):
        with pytest.raises(InvalidInput):
            lexbound.lex_ideal_from_hilbert(HilbertFunction.of([1, 4]), 3)

    def test_lex_ideals_are_stable(self):
        m = lexbound.lex_ideal_from_hilbert(HilbertFunction.of([1, 3, 6, 10, 12]), 3)
        assert lexbound.is_stable(m)


class TestEliahouKervaire:
    def test_square_of_maximal_ideal(self):
        m = lexbound.lex_ideal_from_hilbert(HilbertFunction.of([1, 2]), 2)
        table = lexbound.ek_betti(m)
        assert table == shape_from_positions([{2: 3}, {3: 2}]).table()

    def test_rejects_unstable(self):
        with pytest.raises(NotStable):
            lexbound.ek_betti(MonomialIdeal(c=2, generators=((0, 2),)))

    def test_max_index(self):
        assert lexbound.max_index((1, 0, 2)) == 3
        assert lexbound.max_index((2, 0, 0)) == 1


class TestGorensteinBound:
    def test_complete_intersection_of_two_quadrics(self):
        table = lexbound.gor_betti_bound(HilbertFunction.of([1, 2, 1]), 2)
        assert table == shape_from_positions([{2: 2}, {4: 1}]).table()

    def test_two_peak_four_variables(self):
        h = HilbertFunction.of([1, 4, 10, 20, 20, 10, 4, 1])
        table = lexbound.gor_betti_bound(h, 4)
        expected = shape_from_positions([{4: 15, 5: 10}, {5: 24, 6: 24}, {6: 10, 7: 15}, {11: 1}])
        assert table == expected.table()

    def test_rejects_non_si(self):
        with pytest.raises(NotSISequence):
            lexbound.gor_betti_bound(HilbertFunction.of([1, 2, 4, 2, 1]), 2)


class TestAciBound:
    @pytest.mark.parametrize("n, degrees", [
        (3, (4, 4, 4, 8)),
        (3, (2, 3, 5, 5)),
        (4, (5, 5, 5, 5, 10)),
    ])
    def test_dominates_exact_prediction(self, n, degrees):
        t = DegreeTuple.of(n, degrees)
        bound = lexbound.aci_betti_bound(t)
        for (i, j), m in predict(t).table():
            assert bound.get(i, j) >= m, (i, j)

    def test_dominates_oracle(self):
        pool = [t for n in (2, 3, 4) for t in tuples_in_box(n, 2, 6)]
        cfg = FieldConfig(prime=32003, seed=1)
        for t in random.Random(3).sample(pool, 50):
            bound = lexbound.aci_betti_bound(t)
            measured, _ = oracle.oracle_betti(t, cfg)
            for (i, j), m in measured:
                assert bound.get(i, j) >= m, (t, i, j)


def _generated_lex_ideals(n, max_d):
    for t in tuples_in_box(n, 1, max_d):
        h = hilbert.linked_gorenstein_hilbert(t)
        g = hilbert.first_difference_up_to(h, h.values.index(max(h.values)))
        if g.socle_degree <= 8:
            yield g, lexbound.lex_ideal_from_hilbert(g, n - 1)


class TestGeneratedLexIdeals:
    @pytest.mark.parametrize("n, max_d", [(2, 8), (3, 8), (4, 8), (5, 6)])
    def test_eliahou_kervaire_reproduces_hilbert(self, n, max_d):
        for g, m in _generated_lex_ideals(n, max_d):
            assert lexbound.is_stable(m)
            assert hilbert_from_betti(lexbound.ek_betti(m), n - 1) == g, g
