"""Tests for GF(p) linear algebra."""

import numpy as np
import pytest

from aci_betti import gf
from aci_betti.errors import InvalidInput


class TestAsField:
    def test_reduces_mod_p(self):
        assert gf.as_field([[8, -1]], 7).tolist() == [[1, 6]]

    def test_rejects_bad_prime(self):
        with pytest.raises(InvalidInput):
            gf.as_field([[1]], 1)
        with pytest.raises(InvalidInput):
            gf.as_field([[1]], gf.MAX_PRIME + 2)

    def test_rejects_vectors(self):
        with pytest.raises(InvalidInput):
            gf.as_field([1, 2, 3], 7)


class TestRank:
    def test_dependent_rows(self):
        assert gf.rank([[1, 2], [2, 4]], 7) == 1

    def test_dependent_only_mod_p(self):
        # det = 5, so the rows are dependent mod 5 only
        a = [[1, 2], [3, 11]]
        assert gf.rank(a, 5) == 1
        assert gf.rank(a, 7) == 2

    def test_identity(self):
        assert gf.rank(np.eye(4, dtype=np.int64), 32003) == 4

    def test_empty(self):
        assert gf.rank(np.zeros((0, 3), dtype=np.int64), 7) == 0
        assert gf.rank(np.zeros((3, 0), dtype=np.int64), 7) == 0


class TestRowReduce:
    def test_pivots(self):
        reduced, pivots = gf.row_reduce([[0, 2, 4], [0, 1, 3]], 7)
        assert pivots == [1, 2]
        assert reduced.tolist() == [[0, 1, 0], [0, 0, 1]]

    def test_zero_rows_dropped(self):
        reduced, pivots = gf.row_reduce([[1, 1], [2, 2]], 3)
        assert reduced.tolist() == [[1, 1]]
        assert pivots == [0]


class TestNullspace:
    def test_kernel_vectors(self):
        a = np.array([[1, 2, 3], [2, 4, 6]], dtype=np.int64)
        basis = gf.nullspace(a, 11)
        assert basis.shape == (2, 3)
        assert not ((a @ basis.T) % 11).any()

    def test_full_rank_has_trivial_kernel(self):
        assert gf.nullspace(np.eye(3, dtype=np.int64), 7).shape == (0, 3)


class TestMatmul:
    def test_small(self):
        a = np.array([[1, 2], [3, 4]], dtype=np.int64)
        assert gf.matmul(a, a, 5).tolist() == [[2, 0], [0, 2]]

    def test_large_prime_does_not_overflow(self):
        p = gf.MAX_PRIME
        a = np.full((2, 4), p - 1, dtype=np.int64)
        expected = (4 * (p - 1) ** 2) % p
        assert gf.matmul(a, a.T, p).tolist() == [[expected] * 2] * 2
