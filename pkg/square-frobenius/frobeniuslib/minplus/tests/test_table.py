import unittest

import numpy as np
import pytest

from .. import table
from ..constants import MAX_TABLE_ENTRIES
from ..series import stability_bound
from ...arithmetic import iota
from ...errors import DomainError, IntegerRangeError, ResourceError
from ...oracle import iota_k_bruteforce_table


def test_known_values():
    iota_3 = table.iota_table(3, 61)
    assert iota_3.values[13] == 2
    assert iota_3.values[52] == 8
    assert iota_3.values[61] == 9
    iota_5 = table.iota_table(5, 60)
    assert iota_5.values[7] == 4
    assert iota_5.values[32] == 2
    assert iota_5.values[57] == 3


def test_iota_k():
    assert table.iota_k(6, 79, table.iota_table(6)) == 4
    assert table.iota_k(3, 142, table.iota_table(3)) == 18
    assert table.iota_k(1, 7, table.iota_table(1)) == 7
    assert table.iota_k(4, 0, table.iota_table(4)) == 0


def test_lookup_is_vectorized():
    iota_3 = table.iota_table(3)
    np.testing.assert_array_equal(iota_3.lookup(np.array([13, 52, 142])), [2, 8, 18])


def test_lookup_errors():
    with pytest.raises(DomainError):
        table.iota_table(3).lookup(-1)
    with pytest.raises(DomainError):
        table.iota_table(3, 10).lookup(11)
    with pytest.raises(DomainError):
        table.iota_k(4, 10, table.iota_table(3))


def test_lookup_range():
    iota_3 = table.iota_table(3)
    assert table.iota_k(3, 9 * 10**17, iota_3) == 10**17
    with pytest.raises(IntegerRangeError):
        iota_3.lookup(2**63)
    with pytest.raises(IntegerRangeError):
        table.iota_k(3, 10**20, iota_3)


def test_representation_budget():
    with pytest.raises(ResourceError):
        table.optimal_representation(3, 9 * 10**17, table.iota_table(3))
    with pytest.raises(ResourceError):
        table.greedy_representation(3, 9 * 10**17)


def test_table_budget():
    with pytest.raises(ResourceError):
        table.iota_table(2, MAX_TABLE_ENTRIES)
    with pytest.raises(DomainError):
        table.iota_table(0)


def test_stability_threshold():
    assert table.stability_threshold(3, table.iota_table(3)) == 8
    assert table.stability_threshold(1, table.iota_table(1)) == 0
    assert table.stability_threshold(2, table.iota_table(2)) <= 4
    with pytest.raises(DomainError):
        table.stability_threshold(3, table.iota_table(3, 20))


def test_irregular_terms():
    terms = table.irregular_terms(table.iota_table(3, 45))
    assert [r for r, _ in terms] == list(range(9)) + [12, 16]
    assert terms[7] == (7, 4)
    assert terms[-1] == (16, 4)


def test_optimal_representation():
    iota_6 = table.iota_table(6)
    assert table.optimal_representation(6, 79, iota_6) == (6, 5, 3, 3)
    assert table.optimal_representation(3, 9, table.iota_table(3)) == (3,)
    assert table.optimal_representation(2, 11, table.iota_table(2)) == (2, 2, 1, 1, 1)
    assert table.optimal_representation(3, 0, table.iota_table(3)) == ()


def test_greedy_representation():
    assert table.greedy_representation(6, 79) == (6, 6, 2, 1, 1, 1)
    assert table.greedy_representation(3, 0) == ()


class TestTableProperties(unittest.TestCase):
    def setUp(self):
        self.tables = {k: table.iota_table(k) for k in range(1, 9)}

    def test_matches_oracle(self):
        n = np.arange(501)
        for k in range(1, 7):
            expected = iota_k_bruteforce_table(k, 500)
            self.assertEqual(list(self.tables[k].lookup(n)), expected, f"k={k}")

    def test_bounds(self):
        for k, iota_k in self.tables.items():
            r = np.arange(1, iota_k.truncation + 1)
            values = iota_k.values[1:]
            k2 = k * k
            self.assertTrue(np.all(-(-r // k2) <= values), f"k={k}")
            self.assertTrue(np.all(values <= r // k2 + 4), f"k={k}")

    def test_monotone_in_k(self):
        n = np.arange(1000)
        for k in range(1, 8):
            self.assertTrue(np.all(self.tables[k + 1].lookup(n) <= self.tables[k].lookup(n)), f"k={k}")

    def test_dominates_iota(self):
        for k, iota_k in self.tables.items():
            for n in range(1, iota_k.truncation + 1):
                self.assertGreaterEqual(iota_k.values[n], iota(n))
                if n <= k * k:
                    self.assertEqual(iota_k.values[n], iota(n))

    def test_stability(self):
        for k, iota_k in self.tables.items():
            self.assertLessEqual(iota_k.stable_from, stability_bound(k))
            r = np.arange(stability_bound(k), 3000)
            np.testing.assert_array_equal(iota_k.lookup(r + k * k), iota_k.lookup(r) + 1)

    def test_squares_take_one_part(self):
        for k, iota_k in self.tables.items():
            self.assertEqual(iota_k.values[0], 0)
            for i in range(1, k + 1):
                self.assertEqual(iota_k.values[i * i], 1)

    def test_witnesses(self):
        for k in (2, 4, 6):
            for n in range(400):
                parts = table.optimal_representation(k, n, self.tables[k])
                self.assertEqual(sum(i * i for i in parts), n)
                self.assertEqual(len(parts), table.iota_k(k, n, self.tables[k]))
