import os
from fractions import Fraction
from math import factorial

import pytest

from ylattice.counts import (
    A_kn,
    A_le_kn,
    C_kn,
    b_direct,
    b_recursive,
    c_kn,
    convergence_table,
    falling_factorial,
    fraction_decimal,
    fraction_str,
    g_k,
    worker_count,
)
from ylattice.partitions import enumerate_partitions
from ylattice.rankpoly import interval_count
from ylattice.series import qk_xm

# exact reference values for the first seven growth constants
GK_TABLE = {
    1: Fraction(1),
    2: Fraction(1, 8),
    3: Fraction(49, 6480),
    4: Fraction(1597, 5806080),
    5: Fraction(104797, 15552000000),
    6: Fraction(30867157, 258660864000000),
    7: Fraction(8883026474947, 5538476941949952000000),
}


class TestCkn:
    def test_examples(self):
        for n in range(1, 10):
            assert c_kn(1, n) == 1
        assert c_kn(2, 5) == 2
        assert c_kn(3, 6) == 3

    def test_edges(self):
        assert c_kn(0, 0) == 1
        assert c_kn(0, 4) == 0
        assert c_kn(5, 3) == 0

    def test_matches_enumeration(self):
        for n in range(31):
            for k in range(n + 1):
                assert c_kn(k, n) == len(enumerate_partitions(k, n))

    def test_classical_recurrence(self):
        for n in range(2, 31):
            for k in range(1, n + 1):
                assert c_kn(k, n) == c_kn(k - 1, n - 1) + c_kn(k, n - k)


class TestCknBig:
    def test_examples(self):
        assert C_kn(2, 4, 0) == 13  # 7 + 6 over (3,1) and (2,2)
        assert C_kn(2, 3, 0) == 5
        for n in range(1, 9):
            assert C_kn(1, n, 0) == n + 1

    def test_matches_series_coefficients(self):
        for k in range(1, 4):
            for m in range(3):
                coeffs = qk_xm(k, m, 20)
                for n in range(21):
                    assert C_kn(k, n, m) == coeffs[n]

    def test_brute_force_m(self):
        # weight n = rank + m * first_part
        for k in (1, 2, 3):
            for m in (1, 2):
                for n in range(k, 15):
                    expected = 0
                    for rank in range(n + 1):
                        for lam in enumerate_partitions(k, rank):
                            if rank + m * lam[0] == n:
                                expected += interval_count(lam)
                    assert C_kn(k, n, m) == expected

    def test_worker_pool_same_result(self, monkeypatch):
        monkeypatch.setenv("YL_THREADS", "2")
        assert worker_count() == 2
        forked = C_kn(2, 40, 0)
        monkeypatch.delenv("YL_THREADS")
        assert worker_count() == 1
        assert forked == C_kn(2, 40, 0)


class TestAverages:
    def test_examples(self):
        for n in range(1, 9):
            assert A_kn(1, n) == n + 1
        assert A_kn(2, 4) == Fraction(13, 2)
        assert A_kn(2, 3) == 5

    def test_empty_rank_raises(self):
        with pytest.raises(ZeroDivisionError):
            A_kn(3, 2)

    def test_at_most_k(self):
        for n in range(1, 9):
            assert A_le_kn(1, n) == n + 1
        assert A_le_kn(2, 3) == Fraction(9, 2)

    def test_at_most_k_tends_to_full(self):
        # the length-k slice dominates, so the two averages approach each other
        gaps = [abs(A_le_kn(2, n) / A_kn(2, n) - 1) for n in (20, 40, 80)]
        assert gaps[0] > gaps[1] > gaps[2]


class TestFallingFactorial:
    def test_values(self):
        assert falling_factorial(5, 3) == 60
        assert falling_factorial(4, 0) == 1
        assert falling_factorial(4, 4) == 24

    def test_domain(self):
        with pytest.raises(ValueError):
            falling_factorial(3, 4)


class TestBConstants:
    def test_base_cases(self):
        for m in range(5):
            assert b_recursive(0, m) == 1
            assert b_direct(0, m) == 1

    def test_single_row(self):
        for m in range(5):
            expected = Fraction(1, (m + 1) ** 2)
            assert b_recursive(1, m) == expected
            assert b_direct(1, m) == expected

    def test_hand_unrolled(self):
        assert b_recursive(2, 0) == Fraction(3, 8)
        assert b_direct(2, 0) == Fraction(3, 8)

    def test_two_routes_agree(self):
        for k in range(9):
            for m in range(9 - k):
                assert b_recursive(k, m) == b_direct(k, m)


class TestGk:
    def test_table(self):
        for k, expected in GK_TABLE.items():
            assert g_k(k) == expected

    def test_recursion_route(self):
        for k in range(1, 8):
            scale = Fraction(factorial(k) * factorial(k - 1), factorial(2 * k - 1))
            assert g_k(k) == scale * b_recursive(k, 0)


class TestConvergenceTable:
    def test_k1_exact(self):
        rows = convergence_table(1, range(10, 31, 10))
        assert [r["ratio"] for r in rows] == [
            Fraction(11, 10),
            Fraction(21, 20),
            Fraction(31, 30),
        ]

    def test_skips_empty_ranks(self):
        rows = convergence_table(3, [2, 3])
        assert [r["n"] for r in rows] == [3]

    def test_k2_improves(self):
        rows = convergence_table(2, [40, 80])
        r40, r80 = [r["ratio"] for r in rows]
        assert abs(r80 - 1) < abs(r40 - 1)

    def test_row_contents(self):
        (row,) = convergence_table(2, [4])
        assert row["c"] == 2 and row["C"] == 13
        assert row["A"] == Fraction(13, 2)
        assert row["ratio"] == Fraction(13, 2) / (Fraction(1, 8) * 16)


class TestFormatting:
    def test_fraction_str(self):
        assert fraction_str(Fraction(3, 8)) == "3/8"
        assert fraction_str(Fraction(4, 2)) == "2"

    def test_fraction_decimal(self):
        assert fraction_decimal(Fraction(1, 8)) == "0.125"
        assert fraction_decimal(Fraction(1)) == "1"
        assert fraction_decimal(Fraction(-3, 2)) == "-1.5"
        assert fraction_decimal(Fraction(1, 3), digits=6) == "0.333333"
