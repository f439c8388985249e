import unittest

import numpy as np
import pytest

from .. import series
from ..constants import MAX_TABLE_ENTRIES, UNREACHABLE
from ...errors import DomainError, ResourceError
from ...oracle import iota_k_bruteforce_table


def test_caps():
    assert series.caps(1).h == (1,)
    assert series.caps(2).h == (3, 2)
    assert series.caps(3).h == (3, 7, 4)
    assert series.caps(6).h == (3, 3, 3, 7, 13, 8)


def test_caps_rejects_zero():
    with pytest.raises(DomainError):
        series.caps(0)


def test_windows():
    assert series.ceil_three_halves(3) == 5
    assert series.ceil_three_halves(4) == 6
    assert series.minimal_truncation(3) == 36
    assert series.stability_bound(3) == 27
    assert series.stability_bound(1) == 0


def test_intermediate_products():
    f1, f2, f3 = series.partial_products(3, 50)
    # 13 = 4 + 4 + 4 + 1 with squares up to 4, 13 = 9 + 4 once 9 is allowed
    assert f2.degree(13) == 4
    assert f3.degree(13) == 2
    # h_1 = 3 ones at most
    assert f1.degree(3) == 3
    assert f1.degree(4) is None
    assert f3.coeff[0] == 0


def test_times_geometric_leaves_unreachable_alone():
    base = series.MinPlusSeries.one(10)
    product = base.times_geometric(4, 2)
    assert list(product.coeff) == [0, -1, -1, -1, 1, -1, -1, -1, 2, -1, -1]
    assert UNREACHABLE == -1
    assert not product.coeff.flags.writeable


def test_truncation_budget():
    with pytest.raises(ResourceError):
        series.partial_products(3, MAX_TABLE_ENTRIES)
    with pytest.raises(DomainError):
        series.partial_products(3, -1)


class TestCapSoundness(unittest.TestCase):
    truncation = 500

    def uncapped(self, k: int) -> np.ndarray:
        cap_vector = series.CapVector(k=k, h=tuple(self.truncation // (i * i) for i in range(1, k + 1)))
        return list(series.iter_products(k, self.truncation, cap_vector))[-1].coeff

    def test_capped_matches_uncapped(self):
        for k in range(1, 7):
            capped = series.partial_products(k, self.truncation)[-1].coeff
            np.testing.assert_array_equal(capped, self.uncapped(k), err_msg=f"k={k}")

    def test_every_intermediate_matches_oracle(self):
        for k in range(1, 7):
            products = series.partial_products(k, self.truncation)
            expected = iota_k_bruteforce_table(k, self.truncation)
            self.assertEqual(list(products[-1].coeff), expected, f"k={k}")
