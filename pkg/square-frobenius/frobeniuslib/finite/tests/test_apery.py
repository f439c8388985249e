import unittest

import numpy as np
import pytest

from .. import apery
from ...errors import DomainError, IntegerRangeError, ResourceError
from ...minplus import iota_table
from ...minplus.constants import MAX_TABLE_ENTRIES
from ...oracle import frobenius_dp, iota_k_bruteforce_table


def test_n_r_finite():
    record = apery.n_r_finite(54, 3, 52)
    assert record.n_r == 484
    assert record.m_star == 0
    assert record.coefficient == 8
    assert sum(i * i for i in record.witness) == 52
    assert len(record.witness) == 8


def test_n_r_zero():
    record = apery.n_r_finite(54, 3, 0)
    assert record.n_r == 0
    assert record.witness == ()


def test_n_r_finite_against_exhaustive_sweep():
    expected = iota_k_bruteforce_table(3, 300)
    for a in (5, 10, 17):
        for r in range(1, a):
            best = min(expected[m * a + r] * a + m * a + r for m in range(21) if m * a + r <= 300)
            assert apery.n_r_finite(a, 3, r).n_r == best


def test_frobenius_direct():
    assert apery.frobenius_direct(54, 3) == 430
    assert apery.frobenius_direct(7, 2) == frobenius_dp((7, 8, 11))


def test_frobenius_direct_domain():
    with pytest.raises(DomainError):
        apery.frobenius_direct(2, 3)
    with pytest.raises(DomainError):
        apery.n_r_finite(10, 3, 10)
    with pytest.raises(DomainError):
        apery.frobenius_direct(10, 3, iota_table(2))


def test_frobenius_direct_budget():
    with pytest.raises(ResourceError):
        apery.frobenius_direct(MAX_TABLE_ENTRIES + 1, 3)
    with pytest.raises(IntegerRangeError):
        apery.frobenius_direct(2**63, 3)
    with pytest.raises(IntegerRangeError):
        apery.n_r_finite(2**63, 3, 1)


def test_formula_start():
    assert apery.formula_start(1) == 3
    assert apery.formula_start(2) == 16
    assert apery.formula_start(3) == 54


class TestResidueMinima(unittest.TestCase):
    def test_matches_scalar_path(self):
        for k in (2, 3, 5):
            table = apery.default_table(k)
            for a in (3, 11, 40, 3 * k * k + 1):
                n_r, m_star = apery.residue_minima(a, table)
                for r in range(a):
                    record = apery.n_r_finite(a, k, r, table)
                    self.assertEqual(n_r[r], record.n_r, f"k={k}, a={a}, r={r}")
                    self.assertEqual(m_star[r], record.m_star, f"k={k}, a={a}, r={r}")

    def test_residues(self):
        n_r, _ = apery.residue_minima(30, apery.default_table(4))
        np.testing.assert_array_equal(n_r % 30, np.arange(30))

    def test_matches_reachability(self):
        for k in range(1, 6):
            table = apery.default_table(k)
            for a in range(3, 61):
                generators = [a + i * i for i in range(k + 1)]
                self.assertEqual(apery.frobenius_direct(a, k, table), frobenius_dp(generators), f"k={k}, a={a}")
