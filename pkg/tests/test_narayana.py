from fractions import Fraction as F
from itertools import product
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gnarayana.exactcore import Poly, poly_eval
from gnarayana.narayana import (
    FamilyIndex,
    apply_recurrence,
    catalan,
    chu_vandermonde_check,
    coefficient_comparison,
    diff_poly,
    gn_coefficient,
    gn_coefficient_factored,
    gn_poly,
    narayana_number,
    recurrence_coeffs,
    recurrence_residual,
    verify_recurrence,
)


def brute_poly(n, m):
    """Direct term-by-term sum with its own binomial helper."""
    def c(a, b):
        return comb(a, b) if 0 <= b <= a else 0
    return [c(n, k) * c(m, k) - c(n, k + 1) * c(m, k - 1) for k in range(n + 1)]


def test_family_index():
    assert FamilyIndex(4, 3).regime == "classical"
    assert FamilyIndex(5, 3).regime == "chu-vandermonde"
    assert FamilyIndex(6, 3).regime == "bounded-zero"
    assert FamilyIndex(2, 3).regime == "low"
    with pytest.raises(ValueError):
        FamilyIndex(-1, 0)


class TestCoefficients:
    def test_examples(self):
        for n, m in product(range(8), range(8)):
            assert gn_coefficient((n, m), 0) == 1
        for m in range(6):
            for n in range(m + 2, m + 10):
                assert gn_coefficient((n, m), m + 1) == -comb(n, m + 2)
        assert gn_coefficient((5, 2), 1) == 0

    def test_against_brute_force(self):
        for n, m in product(range(15), range(15)):
            coeffs = brute_poly(n, m)
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
            assert gn_poly((n, m)).coeffs == tuple(F(c) for c in coeffs)

    @given(st.integers(0, 30), st.integers(0, 30), st.integers(0, 35))
    def test_factored_form(self, n, m, k):
        assert gn_coefficient_factored((n, m), k) == gn_coefficient((n, m), k)


class TestPolys:
    @pytest.mark.parametrize("n", range(2, 15))
    def test_m0(self, n):
        assert gn_poly((n, 0)) == Poly((1, -comb(n, 2)))

    @pytest.mark.parametrize("n", range(3, 15))
    def test_m1(self, n):
        assert gn_poly((n, 1)) == Poly((1, F(-n * (n - 3), 2), -comb(n, 3)))

    def test_small(self):
        assert gn_poly((3, 2)) == Poly((1, 3, 1))
        assert gn_poly((5, 1)) == Poly((1, -5, -10))
        assert gn_poly((4, 1)) == Poly((1, -2, -4))
        assert gn_poly((5, 2)) == Poly((1, 0, -10, -5))

    def test_degree_law(self):
        for m in range(12):
            assert gn_poly((m + 1, m)).degree == m
            for n in range(m + 2, m + 15):
                assert gn_poly((n, m)).degree == m + 1


class TestClassical:
    def test_narayana_numbers(self):
        assert narayana_number(3, 1) == 3
        assert narayana_number(7, 0) == 1
        assert narayana_number(4, -1) == 0
        assert narayana_number(4, 4) == 0
        with pytest.raises(ValueError):
            narayana_number(0, 0)

    def test_catalan(self):
        assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
        for n in range(1, 25):
            assert sum(narayana_number(n, k) for k in range(n)) == catalan(n)

    @pytest.mark.parametrize("m", range(21))
    def test_reduction(self, m):
        p = gn_poly((m + 1, m))
        assert list(p.coeffs) == [narayana_number(m + 1, k) for k in range(m + 1)]
        assert poly_eval(p, 1) == catalan(m + 1)


class TestDifference:
    def test_examples(self):
        assert diff_poly((5, 1)) == Poly((0, 3, 6))
        for n in range(2, 12):
            assert diff_poly((n, 0)) == Poly((0, n - 1))
        assert diff_poly((9, 3))[0] == 0

    def test_matches_subtraction_and_nonnegative(self):
        for m in range(10):
            for n in range(m + 2, m + 20):
                d = diff_poly((n, m))
                assert d == gn_poly((n - 1, m)) - gn_poly((n, m))
                assert all(c >= 0 for c in d.coeffs) and any(c > 0 for c in d.coeffs)

    def test_regime(self):
        with pytest.raises(ValueError):
            diff_poly((4, 3))


class TestRecurrence:
    def test_coeffs_example(self):
        rc = recurrence_coeffs((5, 1))
        assert rc.a == Poly((-10, 34))
        assert rc.b == Poly((10, -40, 30))
        assert rc.c == Poly((0, 24))

    def test_aux_constants(self):
        for n, m in product(range(1, 30), range(20)):
            rc = recurrence_coeffs((n, m))
            assert rc.aux_A - rc.aux_C - rc.aux_D == 0
            assert rc.aux_C == rc.aux_B + 2 * n

    def test_c_vanishes_on_classical(self):
        for m in range(10):
            assert recurrence_coeffs((m + 1, m)).c.is_zero()
            assert recurrence_coeffs((m + 2, m)).c.is_zero()

    def test_n0_rejected(self):
        with pytest.raises(ValueError):
            recurrence_coeffs((0, 3))

    def test_hand_expansion(self):
        rc = recurrence_coeffs((5, 1))
        lhs = rc.c * gn_poly((5, 2))
        assert lhs == Poly((0, 24, 0, -240, -120))
        assert lhs == rc.a * gn_poly((5, 1)) + rc.b * gn_poly((4, 1))
        assert verify_recurrence((5, 1))

    def test_identity_grid(self):
        for n, m in product(range(1, 26), range(13)):
            assert recurrence_residual((n, m)).is_zero(), (n, m)

    def test_termwise_comparison(self):
        for n, m in product(range(1, 16), range(10)):
            for k in range(n + 2):
                lhs, rhs = coefficient_comparison((n, m), k)
                assert lhs == rhs, (n, m, k)

    def test_degenerate_cases(self):
        for m in range(10):
            assert verify_recurrence((m + 1, m))
            assert verify_recurrence((m + 2, m))

    def test_apply(self):
        assert apply_recurrence((5, 1)) == Poly((1, 0, -10, -5))
        assert apply_recurrence((6, 1)) == gn_poly((6, 2))
        for n, m in product(range(1, 26), range(13)):
            if n in (m + 1, m + 2):
                with pytest.raises(ValueError):
                    apply_recurrence((n, m))
            else:
                assert apply_recurrence((n, m)) == gn_poly((n, m + 1))

    def test_numerator_divisible_by_x(self):
        for n, m in product(range(1, 15), range(10)):
            rc = recurrence_coeffs((n, m))
            num = rc.a * gn_poly((n, m)) + rc.b * gn_poly((n - 1, m))
            assert num[0] == 0


def test_chu_vandermonde():
    assert poly_eval(gn_poly((2, 0)), 1) == 0
    assert gn_poly((3, 1)) == Poly((1, 0, -1))
    assert all(chu_vandermonde_check(m) for m in range(31))
