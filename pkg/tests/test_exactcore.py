from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gnarayana.exactcore import (
    NEG_INF,
    POS_INF,
    NotSquarefreeError,
    Poly,
    RootInterval,
    binomial,
    cauchy_bound,
    count_real_roots,
    descartes_positive_count,
    format_poly,
    is_squarefree,
    isolate_real_roots,
    isolate_unique_root,
    poly_arith,
    poly_eval,
    poly_gcd,
    sturm_chain,
)

N51 = Poly((1, -5, -10))


def pascal_rows(n_max):
    rows = [[1]]
    for _ in range(n_max):
        prev = rows[-1]
        rows.append([1] + [a + b for a, b in zip(prev, prev[1:])] + [1])
    return rows


def from_roots(roots):
    p = Poly((1,))
    for r in roots:
        p = p * Poly((-F(r), 1))
    return p


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=60)
nonzero_rationals = rationals.filter(lambda q: q != 0)
polys = st.lists(rationals, max_size=6).map(Poly)


class TestBinomial:
    def test_against_pascal(self):
        rows = pascal_rows(30)
        for n, row in enumerate(rows):
            for k in range(-2, n + 3):
                expected = row[k] if 0 <= k <= n else 0
                assert binomial(n, k) == expected

    def test_examples(self):
        assert binomial(5, 2) == 10
        assert binomial(7, 0) == 1
        assert binomial(3, -1) == 0

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)


class TestPoly:
    def test_normalization(self):
        p = Poly((1, 2, 0, 0))
        assert p.coeffs == (1, 2)
        assert p.degree == 1
        assert Poly((0, 0)).degree is None
        assert Poly().is_zero()

    def test_eval(self):
        assert poly_eval(Poly((1, -3)), F(1, 3)) == 0
        assert poly_eval(N51, F(2, 7)) == F(-61, 49)
        assert poly_eval(Poly(), F(17, 3)) == 0

    def test_arith_examples(self):
        assert poly_arith(Poly((1, 1)), Poly((1, -1)), "mul") == Poly((1, 0, -1))
        assert poly_arith(N51, N51, "sub").is_zero()
        assert poly_arith(Poly((-10, 34)), N51, "mul") == Poly((-10, 84, -70, -340))
        assert poly_arith(N51, F(1, 2), "scale") == Poly((F(1, 2), F(-5, 2), -5))
        with pytest.raises(ValueError):
            poly_arith(N51, N51, "pow")

    def test_format(self):
        assert format_poly(N51) == "1 - 5*x - 10*x^2"
        assert format_poly(Poly((1, 3, 1))) == "1 + 3*x + 1*x^2"
        assert format_poly(Poly((0, F(-1, 2)))) == "-1/2*x"
        assert format_poly(Poly()) == "0"

    def test_immutable(self):
        with pytest.raises(AttributeError):
            N51.coeffs = ()

    @given(polys, polys)
    def test_no_trailing_zero_ever(self, p, q):
        for r in (p + q, p - q, p * q, p.derivative(), p.scale(0)):
            assert not r.coeffs or r.coeffs[-1] != 0

    @given(polys, polys)
    def test_degree_of_product(self, p, q):
        if p and q:
            assert (p * q).degree == p.degree + q.degree

    @given(polys, polys, rationals)
    def test_eval_is_ring_homomorphism(self, p, q, x):
        assert poly_eval(p + q, x) == poly_eval(p, x) + poly_eval(q, x)
        assert poly_eval(p * q, x) == poly_eval(p, x) * poly_eval(q, x)

    @given(polys, polys.filter(bool))
    def test_divmod(self, p, q):
        quot, rem = divmod(p, q)
        assert quot * q + rem == p
        assert rem.is_zero() or rem.degree < q.degree

    @given(rationals, nonzero_rationals)
    def test_rationals_exact(self, a, b):
        assert (a + b) - b == a
        assert (a * b) / b == a


class TestSturm:
    def test_examples(self):
        assert sturm_chain(Poly((-1, 0, 1))) == (Poly((-1, 0, 1)), Poly((0, 2)), Poly((1,)))
        assert sturm_chain(Poly((0, 1))) == (Poly((0, 1)), Poly((1,)))

    def test_repeated_root_ends_at_gcd(self):
        chain = sturm_chain(Poly((1, -2, 1)))
        assert chain[-1].monic() == Poly((-1, 1))
        assert not is_squarefree(Poly((1, -2, 1)))

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            sturm_chain(Poly())

    @given(polys.filter(bool))
    def test_chain_shape(self, p):
        chain = sturm_chain(p)
        assert len(chain) <= p.degree + 1
        degs = [q.degree for q in chain]
        assert all(a > b for a, b in zip(degs, degs[1:]))


class TestCounting:
    def test_examples(self):
        assert count_real_roots(N51, 0, POS_INF) == 1
        assert count_real_roots(N51, NEG_INF, 0) == 1
        assert count_real_roots(Poly((1, 0, 1))) == 0

    def test_not_squarefree(self):
        with pytest.raises(NotSquarefreeError):
            count_real_roots(from_roots([1, 1, 2]))

    def test_endpoint_root_rejected(self):
        with pytest.raises(ValueError):
            count_real_roots(Poly((-1, 1)), 1, 2)

    @given(st.lists(rationals, min_size=1, max_size=5, unique=True), rationals, rationals)
    @settings(max_examples=60)
    def test_matches_known_roots(self, roots, a, b):
        lo, hi = min(a, b), max(a, b)
        if lo == hi or lo in roots or hi in roots:
            return
        p = from_roots(roots).scale(F(-3, 7))
        assert count_real_roots(p, lo, hi) == sum(lo < r <= hi for r in roots)
        assert count_real_roots(p) == len(roots)

    @given(st.lists(rationals, min_size=1, max_size=5, unique=True), st.integers(0, 2))
    @settings(max_examples=60)
    def test_count_equals_isolated(self, roots, extra):
        # irreducible quadratic factors add no real roots
        p = from_roots(roots)
        for quad in [Poly((3, 1, 1)), Poly((5, 2, 1))][:extra]:
            p = p * quad
        bound = cauchy_bound(p)
        found = isolate_real_roots(p, -bound, bound, bits=8)
        assert len(found) == count_real_roots(p) == len(roots)
        for iv, r in zip(found, sorted(roots)):
            assert iv.is_valid_for(p)
            assert iv.exact == r if iv.exact is not None else iv.lo < r < iv.hi

    def test_descartes(self):
        assert descartes_positive_count(N51) == 1
        assert descartes_positive_count(Poly((1, 3, 1))) == 0
        assert descartes_positive_count(Poly((1,))) == 0


class TestIsolation:
    def test_exact_rational_root(self):
        iv = isolate_unique_root(Poly((1, -3)), 0, 1, bits=50)
        assert iv.exact == F(1, 3)

    def test_n51_positive_root(self):
        lo, hi = F(1, 7), F(1, 6)
        iv = isolate_unique_root(N51, lo, hi, bits=20)
        assert iv.exact is None
        assert iv.width <= (hi - lo) / 2**20
        # (sqrt(65) - 5)/20 in (lo, hi)  <=>  (20 lo + 5)^2 < 65 < (20 hi + 5)^2
        assert (20 * iv.lo + 5) ** 2 < 65 < (20 * iv.hi + 5) ** 2

    def test_mixed_closed_form_root(self):
        for n in range(3, 20):
            p = Poly((1, -F(n * (n - 1), 2)))
            iv = isolate_unique_root(p, F(1, 10 * n * n), F(1), bits=64)
            assert iv.exact == F(2, n * (n - 1))

    def test_same_sign_rejected(self):
        with pytest.raises(ValueError):
            isolate_unique_root(N51, 0, F(1, 10))

    def test_two_roots_rejected(self):
        with pytest.raises(ValueError, match="expected exactly one"):
            isolate_unique_root(from_roots([F(1, 4), F(1, 2), F(3, 4)]), 0, 1)

    @given(st.lists(rationals, min_size=1, max_size=4, unique=True), st.integers(1, 40))
    @settings(max_examples=40)
    def test_interval_invariant(self, roots, bits):
        p = from_roots(roots)
        r = max(roots)
        iv = isolate_unique_root(p, r - F(1, 1000), r + 1 + abs(r), bits)
        assert iv.is_valid_for(p)
        if iv.exact is None:
            assert poly_eval(p, iv.lo) * poly_eval(p, iv.hi) < 0


def test_gcd():
    g = poly_gcd(from_roots([1, 2, 3]), from_roots([2, 3, 5]))
    assert g == from_roots([2, 3])


def test_root_interval_invariants():
    with pytest.raises(ValueError):
        RootInterval(F(1), F(0))
    with pytest.raises(ValueError):
        RootInterval(F(0), F(1), F(1, 2))
    assert RootInterval.at(F(1, 2)).contains(F(1, 2))


def test_simplest_between():
    from gnarayana.exactcore import simplest_between

    assert simplest_between(F(0), F(1)) == 0
    assert simplest_between(F(3, 10), F(7, 20)) == F(1, 3)
    assert simplest_between(F(-7, 20), F(-3, 10)) == F(-1, 3)
    assert simplest_between(F(5, 2), F(5, 2)) == F(5, 2)
    for q in (F(2, 7), F(13, 97), F(-5, 3)):
        eps = F(1, 10**12)
        assert simplest_between(q - eps, q + eps) == q
