import random

import pytest

from ylattice.partitions import Partition, enumerate_partitions, rho
from ylattice.rankpoly import YPoly, rank_gen_poly
from ylattice.series import (
    CLOSED_FORM_NUMERATORS,
    MultiSeries,
    closed_form_series,
    denominator_product,
    dk_product_check,
    geometric_factor,
    partition_monomial_series,
    prefix_monomial,
    qk_direct,
    qk_recursion_rhs,
    qk_recursive,
    qk_substituted,
    qk_xm,
    specialize_y0,
    verify_xm_recursion,
)


def sum_lower(k, trunc, upto):
    acc = MultiSeries(k, trunc)
    for i in range(upto):
        acc = acc + qk_direct(i, trunc).extend(k)
    return acc


def random_series(rng, nvars, trunc, nterms=6):
    terms = {}
    for _ in range(nterms):
        exps = tuple(rng.randint(0, 2) for _ in range(nvars))
        coeff = YPoly([rng.randint(-3, 3) for _ in range(3)])
        if coeff:
            terms[exps] = terms.get(exps, YPoly()) + coeff
    return MultiSeries(nvars, trunc, {e: c for e, c in terms.items() if c})


class TestMultiSeries:
    def test_truncation_and_equality(self):
        a = MultiSeries(2, 6, {(1, 1): YPoly([1]), (5, 2): YPoly([3])})
        b = MultiSeries(2, 4, {(1, 1): YPoly([1])})
        assert a == b  # compared after cutting to the smaller order
        assert a.cut(4).terms == b.terms
        assert a != MultiSeries(2, 4, {(1, 0): YPoly([1])})

    def test_extend(self):
        a = MultiSeries(1, 5, {(2,): YPoly([1, 1])})
        assert a.extend(3).terms == {(2, 0, 0): YPoly([1, 1])}

    def test_mul_truncates(self):
        a = MultiSeries(1, 4, {(3,): YPoly([1])})
        assert not (a * a).terms

    def test_algebra_randomized(self):
        rng = random.Random(20240817)
        for _ in range(25):
            a = random_series(rng, 2, 6)
            b = random_series(rng, 2, 6)
            c = random_series(rng, 2, 6)
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_json_deterministic(self):
        s = qk_direct(2, 5)
        listed = s.to_json()
        degrees = [sum(item["exponents"]) for item in listed]
        assert degrees == sorted(degrees)
        assert listed == qk_direct(2, 5).to_json()


class TestGeometricFactor:
    def test_single_variable(self):
        g = geometric_factor((1,), 0, 3)
        assert g.terms == {(0,): YPoly([1]), (1,): YPoly([1]), (2,): YPoly([1]), (3,): YPoly([1])}

    def test_with_y(self):
        g = geometric_factor((1, 1), 1, 4)
        assert g.terms == {
            (0, 0): YPoly([1]),
            (1, 1): YPoly([0, 1]),
            (2, 2): YPoly([0, 0, 1]),
        }

    def test_telescoping(self):
        trunc = 7
        g = geometric_factor((1, 1), 1, trunc)
        one = MultiSeries.one(2, trunc)
        binom = one - one.shift((1, 1), YPoly.monomial(1))
        assert binom * g == one

    def test_zero_degree_rejected(self):
        with pytest.raises(ValueError):
            geometric_factor((0, 0), 1, 5)


class TestQkDirect:
    def test_q0(self):
        assert qk_direct(0, 9) == MultiSeries.one(0, 9)

    def test_coefficients(self):
        q2 = qk_direct(2, 4)
        assert q2.coefficient((2, 1)) == YPoly([1, 1, 2, 1])
        assert q2.coefficient((1, 1)) == YPoly([1, 1, 1])
        assert q2.coefficient((2, 2)) == YPoly([1, 1, 2, 1, 1])

    def test_exponents_are_partitions(self):
        for exps in qk_direct(3, 7).terms:
            assert Partition(exps).length == 3

    def test_last_part_refinement(self):
        q = qk_direct(2, 6)
        pieces = [qk_direct(2, 6, last_part=m) for m in range(1, 4)]
        merged = {}
        for piece in pieces:
            merged.update(piece.terms)
        assert merged == q.terms


class TestQkRecursive:
    def test_matches_direct(self):
        for k in range(5):
            assert qk_recursive(k, 8) == qk_direct(k, 8)

    def test_matches_closed_form_k1(self):
        assert qk_recursive(1, 6) == closed_form_series(1, 6)

    def test_matches_closed_form_k2(self):
        assert qk_recursive(2, 6) == closed_form_series(2, 6)

    def test_multiplied_form(self):
        for k in range(1, 5):
            direct = qk_direct(k, 8)
            lhs = direct - direct.shift(prefix_monomial(k, k))
            assert lhs == qk_recursion_rhs(k, 8)


class TestQkSubstituted:
    def test_zero_factor(self):
        assert qk_substituted(0, 2, 6) == MultiSeries.one(2, 6)

    def test_one_row_inside_two_vars(self):
        # single-row partitions (a): coefficient y^a P_{(a)} on (x1 x2)^a
        got = qk_substituted(1, 1, 6)
        expected = {}
        for a in range(1, 4):
            expected[(a, a)] = rank_gen_poly((a,)).shift(a)
        assert got.terms == expected

    def test_degree_bookkeeping(self):
        # the (r+1) weighting on the first part bounds retained terms
        for exps in qk_substituted(2, 2, 9).terms:
            lam1 = exps[0]
            assert exps[:3] == (lam1,) * 3
            assert sum(exps) <= 9


class TestDenominatorProduct:
    def test_k1_numerator(self):
        report = dk_product_check(1, 8)
        assert report["product"] == MultiSeries(1, 8, CLOSED_FORM_NUMERATORS[1])
        assert report["max_degree"] == 2
        assert report["stabilized"]

    def test_k2_numerator(self):
        report = dk_product_check(2, 10)
        assert report["product"] == MultiSeries(2, 10, CLOSED_FORM_NUMERATORS[2])
        assert report["max_degree"] == 6

    def test_k3_stabilizes(self):
        # true numerator degree is 15, so the tail is visible only past that
        report = dk_product_check(3, 18)
        assert report["max_degree"] == 15
        assert report["stabilized"]

    def test_closed_forms_match_direct(self):
        assert closed_form_series(1, 12) == qk_direct(1, 12)
        assert closed_form_series(2, 12) == qk_direct(2, 12)


class TestSpecializations:
    def test_y0_k1(self):
        s = specialize_y0(1, 6)
        assert s.terms == {(a,): YPoly([1]) for a in range(1, 7)}

    def test_y0_matches_product_formula(self):
        for k in range(4):
            assert specialize_y0(k, 7) == partition_monomial_series(k, 7)

    def test_y0_collapse_counts_partitions(self):
        from ylattice.counts import c_kn

        for k in range(1, 5):
            collapsed = specialize_y0(k, 12).collapse()
            assert collapsed == [c_kn(k, n) for n in range(13)]


class TestQkXm:
    def test_examples(self):
        assert qk_xm(1, 0, 6)[3] == 4
        assert qk_xm(1, 1, 6)[4] == 3
        assert qk_xm(2, 0, 6)[3] == 5
        assert qk_xm(0, 2, 5) == [1, 0, 0, 0, 0, 0]

    def test_matches_weighted_collapse(self):
        for k in range(1, 4):
            for m in range(3):
                weights = (m + 1,) + (1,) * (k - 1)
                assert qk_xm(k, m, 20) == qk_direct(k, 20).collapse(weights)

    def test_recursion_spec_points(self):
        assert verify_xm_recursion(1, 0, 30)["ok"]
        assert verify_xm_recursion(2, 1, 30)["ok"]
        assert verify_xm_recursion(3, 2, 25)["ok"]

    def test_recursion_sweep(self):
        for k in range(1, 4):
            for m in range(3):
                assert verify_xm_recursion(k, m, 24)["ok"]


class TestPartialSumIdentities:
    """Identities between last-part slices of the series and lower orders."""

    def test_smallest_part_one(self):
        trunc = 9
        for k in range(1, 5):
            lhs = qk_direct(k, trunc, last_part=1)
            x_k = (0,) * (k - 1) + (1,)
            rhs = qk_direct(k - 1, trunc).extend(k).shift(x_k) + sum_lower(
                k, trunc, k
            ).shift(prefix_monomial(k, k), YPoly.monomial(k))
            assert lhs == rhs

    def test_decrement_slice(self):
        trunc = 9
        for k in (2, 3):
            for m in (2, 3):
                terms = {}
                for n in range(k, trunc + 1):
                    for lam in enumerate_partitions(k, n):
                        if lam[-1] == m:
                            terms[tuple(lam)] = rank_gen_poly(rho(lam))
                lhs = MultiSeries(k, trunc, terms)
                rhs = qk_direct(k, trunc, last_part=m - 1).shift(prefix_monomial(k, k))
                assert lhs == rhs

    def test_rectangle_floor_slice(self):
        trunc = 9
        for k in (2, 3):
            for m in (2, 3):
                terms = {}
                for n in range(k, trunc + 1):
                    for lam in enumerate_partitions(k, n):
                        if lam[-1] == m:
                            terms[tuple(lam)] = rank_gen_poly((m,) * k, lam)
                lhs = MultiSeries(k, trunc, terms)
                rhs = sum_lower(k, trunc, k).shift((m,) * k, YPoly.monomial(m * k))
                assert lhs == rhs

    def test_prefix_product_slice(self):
        trunc = 9
        for k in (2, 3):
            for m in (2, 3):
                for r in range(1, k):
                    terms = {}
                    for n in range(k, trunc + 1):
                        for lam in enumerate_partitions(k, n):
                            if lam[-1] != m:
                                continue
                            pre = rank_gen_poly((lam[r - 1],) * r, lam[:r])
                            suf = rank_gen_poly(rho(Partition(lam[r:])))
                            terms[tuple(lam)] = pre * suf
                    lhs = MultiSeries(k, trunc, terms)
                    rhs = (
                        geometric_factor(prefix_monomial(k, r), r, trunc)
                        * sum_lower(k, trunc, r)
                        * qk_substituted(k - r, r, trunc, last_part=m - 1)
                    ).shift(prefix_monomial(k, k), YPoly.monomial(r))
                    assert lhs == rhs
