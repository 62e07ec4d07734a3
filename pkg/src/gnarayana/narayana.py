"""Generalized Narayana polynomials and their three-term recurrence in m.

    N_{n,m}(x) = sum_k [C(n,k)C(m,k) - C(n,k+1)C(m,k-1)] x^k

satisfies, for n >= 1, m >= 0,

    c(x) N_{n,m+1}(x) = a(x) N_{n,m}(x) + b(x) N_{n-1,m}(x)

with a = (m+2-n)(m^2-n^2+4m+3)x - 2n, b = n[(m+2-n)(m+1-n)x - 2](x-1),
c = (m+3)(m+2-n)(m+1-n)x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple, Union

from .exactcore import Poly, binomial, poly_eval


@dataclass(frozen=True, order=True)
class FamilyIndex:
    n: int
    m: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.m, int):
            raise TypeError("family indices must be integers")
        if self.n < 0 or self.m < 0:
            raise ValueError(f"need n, m >= 0, got (n, m) = ({self.n}, {self.m})")

    @property
    def regime(self) -> str:
        if self.n == self.m + 1:
            return "classical"
        if self.n == self.m + 2:
            return "chu-vandermonde"
        if self.n >= self.m + 3:
            return "bounded-zero"
        return "low"

    def __str__(self) -> str:
        return f"({self.n},{self.m})"


IndexLike = Union[FamilyIndex, Tuple[int, int]]


def as_index(idx: IndexLike) -> FamilyIndex:
    if isinstance(idx, FamilyIndex):
        return idx
    n, m = idx
    return FamilyIndex(n, m)


def gn_coefficient(idx: IndexLike, k: int) -> Fraction:
    idx = as_index(idx)
    if k < 0:
        raise ValueError("coefficient index must be nonnegative")
    n, m = idx.n, idx.m
    return Fraction(binomial(n, k) * binomial(m, k) - binomial(n, k + 1) * binomial(m, k - 1))


def gn_coefficient_factored(idx: IndexLike, k: int) -> Fraction:
    """Same coefficient via C(n+1,k+1)C(m+1,k)((m-n)k+m+1)/((n+1)(m+1))."""
    idx = as_index(idx)
    n, m = idx.n, idx.m
    return Fraction(binomial(n + 1, k + 1) * binomial(m + 1, k) * ((m - n) * k + m + 1), (n + 1) * (m + 1))


@lru_cache(maxsize=None)
def _gn_poly(n: int, m: int) -> Poly:
    # sum to k = n as printed; normalization drops the zero tail
    return Poly(gn_coefficient(FamilyIndex(n, m), k) for k in range(n + 1))


def gn_poly(idx: IndexLike) -> Poly:
    """N_{n,m}(x).  Degree m+1 when n >= m+2 and m when n = m+1."""
    idx = as_index(idx)
    return _gn_poly(idx.n, idx.m)


def narayana_number(n: int, k: int) -> Fraction:
    if n < 1:
        raise ValueError(f"Narayana numbers need n >= 1, got {n}")
    if k < 0 or k > n - 1:
        return Fraction(0)
    return Fraction(binomial(n, k) * binomial(n, k + 1), n)


def catalan(n: int) -> Fraction:
    if n < 0:
        raise ValueError(f"Catalan numbers need n >= 0, got {n}")
    return Fraction(binomial(2 * n, n), n + 1)


def diff_poly(idx: IndexLike) -> Poly:
    """N_{n-1,m} - N_{n,m} from its closed form C(n,k)C(m,k-1)(n-m-1)/n.

    Only offered for n >= m+2; every coefficient is then nonnegative.
    """
    idx = as_index(idx)
    n, m = idx.n, idx.m
    if n < m + 2:
        raise ValueError(f"difference closed form needs n >= m+2, got {idx}")
    return Poly(Fraction(binomial(n, k) * binomial(m, k - 1) * (n - m - 1), n) for k in range(m + 2))


@dataclass(frozen=True)
class RecurrenceCoeffs:
    """Coefficient polynomials a, b, c plus the constants A, B, C, D with
    a = A x - 2n, b = B x^2 - C x + 2n, C = B + 2n, A = C + D."""

    idx: FamilyIndex
    a: Poly
    b: Poly
    c: Poly
    aux_A: Fraction
    aux_B: Fraction
    aux_C: Fraction
    aux_D: Fraction

    def __post_init__(self):
        n = self.idx.n
        if self.aux_C != self.aux_B + 2 * n:
            raise ArithmeticError(f"C != B + 2n at {self.idx}")
        if self.aux_A != self.aux_C + self.aux_D:
            raise ArithmeticError(f"A != C + D at {self.idx}")
        if self.a != Poly((-2 * n, self.aux_A)):
            raise ArithmeticError(f"a != Ax - 2n at {self.idx}")
        if self.b != Poly((2 * n, -self.aux_C, self.aux_B)):
            raise ArithmeticError(f"b != Bx^2 - Cx + 2n at {self.idx}")

    @property
    def gamma(self) -> Fraction:
        """Coefficient of x in c."""
        return self.c[1]


@lru_cache(maxsize=None)
def _recurrence_coeffs(n: int, m: int) -> RecurrenceCoeffs:
    x = Poly.x()
    a = Poly((-2 * n, (m + 2 - n) * (m * m - n * n + 4 * m + 3)))
    b = (x.scale((m + 2 - n) * (m + 1 - n)) - 2) * (x - 1) * n
    c = x.scale((m + 3) * (m + 2 - n) * (m + 1 - n))
    A = Fraction((m + 2 - n) * (m * m - n * n + 4 * m + 3))
    B = Fraction(n * (m + 2 - n) * (m + 1 - n))
    C = B + 2 * n
    D = Fraction((m + 1 - n) * (m * m - m * n + 5 * m - n + 6))
    return RecurrenceCoeffs(FamilyIndex(n, m), a, b, c, A, B, C, D)


def recurrence_coeffs(idx: IndexLike) -> RecurrenceCoeffs:
    idx = as_index(idx)
    if idx.n < 1:
        raise ValueError("the recurrence needs n >= 1")
    return _recurrence_coeffs(idx.n, idx.m)


def recurrence_residual(idx: IndexLike) -> Poly:
    """c N_{n,m+1} - a N_{n,m} - b N_{n-1,m}; zero when the recurrence holds."""
    idx = as_index(idx)
    rc = recurrence_coeffs(idx)
    n, m = idx.n, idx.m
    return rc.c * gn_poly((n, m + 1)) - rc.a * gn_poly((n, m)) - rc.b * gn_poly((n - 1, m))


def verify_recurrence(idx: IndexLike) -> bool:
    return recurrence_residual(idx).is_zero()


def coefficient_comparison(idx: IndexLike, k: int) -> Tuple[Fraction, Fraction]:
    """Both sides of the termwise identity behind the recurrence, at x^(k+1).

    The left side sums the four contributions of 2n(N_{n-1,m} - N_{n,m}),
    C x (N_{n,m} - N_{n-1,m}), D x N_{n,m} and B x^2 N_{n-1,m}; the right side
    is the matching coefficient of c N_{n,m+1}.
    """
    idx = as_index(idx)
    rc = recurrence_coeffs(idx)
    n, m = idx.n, idx.m
    lhs = (
        2 * (n - m - 1) * Fraction(binomial(m, k) * binomial(n, k + 1))
        + rc.aux_C * Fraction(binomial(m, k - 1) * binomial(n, k) * (m + 1 - n), n)
        + rc.aux_D * Fraction(binomial(n + 1, k + 1) * binomial(m + 1, k) * ((m - n) * k + m + 1), (n + 1) * (m + 1))
        + rc.aux_B * Fraction(binomial(n, k) * binomial(m + 1, k - 1) * ((m + 1 - n) * k + n), n * (m + 1))
    )
    rhs = (m + 3) * (m + 2 - n) * (m + 1 - n) * Fraction(
        binomial(n + 1, k + 1) * binomial(m + 2, k) * ((m + 1 - n) * k + m + 2), (n + 1) * (m + 2)
    )
    return lhs, rhs


def apply_recurrence(idx: IndexLike) -> Poly:
    """N_{n,m+1} rebuilt from N_{n,m} and N_{n-1,m} by exact division by c."""
    idx = as_index(idx)
    n, m = idx.n, idx.m
    if n < 1:
        raise ValueError("the recurrence needs n >= 1")
    if n in (m + 1, m + 2):
        raise ValueError(f"c vanishes identically at {idx}; normalized recurrence undefined")
    rc = recurrence_coeffs(idx)
    num = rc.a * gn_poly((n, m)) + rc.b * gn_poly((n - 1, m))
    quot, rem = divmod(num, rc.c)
    if rem:
        raise ArithmeticError(f"recurrence numerator not divisible by c at {idx}: remainder {rem}")
    return quot


def chu_vandermonde_check(m: int) -> bool:
    """N_{m+2,m}(1) == 0."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return poly_eval(gn_poly((m + 2, m)), 1) == 0
