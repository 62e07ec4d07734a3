"""Exact rational polynomial algebra and certified real-root isolation.

Scalars are :class:`fractions.Fraction`; polynomials are dense, ascending,
and always normalized (no stored trailing zeros).  Nothing in here touches
floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction]

NEG_INF = -math.inf
POS_INF = math.inf


class NotSquarefreeError(ValueError):
    """The polynomial has a repeated root; Sturm counting is not applicable."""

    def __init__(self, poly: "Poly", gcd: "Poly"):
        super().__init__(f"polynomial {poly} is not squarefree (gcd with derivative: {gcd})")
        self.poly = poly
        self.gcd = gcd


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"binomial: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _sign(v) -> int:
    return (v > 0) - (v < 0)


class Poly:
    """Dense univariate polynomial over Q, ``coeffs[k]`` is the coefficient of x^k."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "_hash", hash(self.coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: RationalLike) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> Optional[int]:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)})"

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        n = max(len(self), len(other))
        return Poly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        n = max(len(self), len(other))
        return Poly(self[k] - other[k] for k in range(n))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _as_poly(other)
        if not self or not other:
            return Poly()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, c: RationalLike) -> "Poly":
        c = Fraction(c)
        return Poly(c * a for a in self.coeffs)

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if not self:
            return self
        return Poly((0,) * k + self.coeffs)

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def __divmod__(self, other: "Poly"):
        other = _as_poly(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lead
        if len(rem) - 1 < dq:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for i in range(len(rem) - 1 - dq, -1, -1):
            q = rem[i + dq] / lc
            quot[i] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= q * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        return self.scale(1 / self.lead) if self else self


def _as_poly(p) -> Poly:
    if isinstance(p, Poly):
        return p
    if isinstance(p, (int, Fraction)):
        return Poly((p,))
    raise TypeError(f"cannot interpret {type(p).__name__} as a polynomial")


def format_poly(p: Poly, var: str = "x") -> str:
    """Render ascending, e.g. ``1 - 5*x - 10*x^2``."""
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        body = str(mag)
        if k == 1:
            body += f"*{var}"
        elif k > 1:
            body += f"*{var}^{k}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def poly_eval(p: Poly, x: RationalLike) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return Fraction(acc)


def poly_arith(p: Poly, q, op: str) -> Poly:
    """Functional front door to the Poly operators.

    ``op`` is one of ``add``, ``sub``, ``mul`` or ``scale`` (``q`` then a rational).
    """
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * _as_poly(q)
    if op == "scale":
        return p.scale(q)
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd (zero polynomial if both inputs are zero)."""
    while q:
        p, q = q, p % q
    return p.monic()


def is_squarefree(p: Poly) -> bool:
    if not p:
        raise ValueError("the zero polynomial has no squarefree part")
    return poly_gcd(p, p.derivative()).degree == 0


@lru_cache(maxsize=4096)
def sturm_chain(p: Poly) -> tuple:
    """Sturm sequence p, p', -rem(...), ... ending at the last nonzero remainder.

    For a squarefree ``p`` the final entry is a nonzero constant; otherwise it is
    (a constant multiple of) gcd(p, p').
    """
    if not p:
        raise ValueError("Sturm chain of the zero polynomial is undefined")
    chain = [p]
    d = p.derivative()
    while d:
        chain.append(d)
        d = -(chain[-2] % chain[-1])
    return tuple(chain)


def _sign_at(p: Poly, x) -> int:
    if x == POS_INF:
        return _sign(p.lead)
    if x == NEG_INF:
        return _sign(p.lead) * (-1 if p.degree % 2 else 1)
    return _sign(poly_eval(p, x))


def sign_variations(values: Sequence) -> int:
    """Sign changes in a sequence, zeros dropped."""
    signs = [_sign(v) for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at(chain, x) -> int:
    return sign_variations([_sign_at(q, x) for q in chain])


def _checked_chain(p: Poly) -> tuple:
    chain = sturm_chain(p)
    if chain[-1].degree != 0:
        raise NotSquarefreeError(p, chain[-1].monic())
    return chain


def _count(chain, lo, hi) -> int:
    # roots in (lo, hi]; valid for squarefree p even when an endpoint is a root
    return _variations_at(chain, lo) - _variations_at(chain, hi)


def count_real_roots(p: Poly, lo=NEG_INF, hi=POS_INF) -> int:
    """Distinct real roots of squarefree ``p`` in ``(lo, hi]`` by Sturm's theorem.

    ``lo``/``hi`` may be :data:`NEG_INF`/:data:`POS_INF`.  Finite endpoints
    must not be roots.
    """
    if not p:
        raise ValueError("cannot count roots of the zero polynomial")
    if not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi}]")
    for e in (lo, hi):
        if not math.isinf(e) and poly_eval(p, e) == 0:
            raise ValueError(f"endpoint {e} is a root")
    return _count(_checked_chain(p), lo, hi)


def descartes_positive_count(p: Poly) -> int:
    if not p:
        raise ValueError("Descartes' rule is undefined for the zero polynomial")
    return sign_variations(p.coeffs)


def cauchy_bound(p: Poly) -> Fraction:
    """All real roots lie in (-B, B) for B = 1 + max|c_k|/|c_lead|."""
    if not p or p.degree == 0:
        return Fraction(1)
    lc = abs(p.lead)
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / lc


@dataclass(frozen=True)
class RootInterval:
    """Certified enclosure of one real root.

    Either ``exact`` is set (and ``lo == hi == exact``), or the polynomial has
    strictly opposite signs at ``lo`` and ``hi`` with one root strictly between.
    """

    lo: Fraction
    hi: Fraction
    exact: Optional[Fraction] = None

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"inverted interval [{self.lo}, {self.hi}]")
        if self.exact is not None and not (self.lo == self.hi == self.exact):
            raise ValueError("exact root must coincide with both endpoints")

    @classmethod
    def at(cls, r: RationalLike) -> "RootInterval":
        r = Fraction(r)
        return cls(r, r, r)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: RationalLike) -> bool:
        if self.exact is not None:
            return x == self.exact
        return self.lo < x < self.hi

    def is_valid_for(self, p: Poly) -> bool:
        if self.exact is not None:
            return poly_eval(p, self.exact) == 0
        return self.lo < self.hi and _sign(poly_eval(p, self.lo)) * _sign(poly_eval(p, self.hi)) == -1


def bisect_once(p: Poly, iv: RootInterval) -> RootInterval:
    """Halve a root interval (no-op on exact roots)."""
    if iv.exact is not None:
        return iv
    mid = iv.midpoint
    v = poly_eval(p, mid)
    if v == 0:
        return RootInterval.at(mid)
    if _sign(v) == _sign(poly_eval(p, iv.lo)):
        return RootInterval(mid, iv.hi)
    return RootInterval(iv.lo, mid)


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with least denominator in ``[lo, hi]`` (continued fractions)."""
    if lo > hi:
        raise ValueError("empty interval")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_between(-hi, -lo)
    fl = math.floor(lo)
    if fl == lo or fl + 1 <= hi:
        return Fraction(fl if fl == lo else fl + 1)
    return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl))


def snap_rational(p: Poly, iv: RootInterval) -> RootInterval:
    """Promote ``iv`` to an exact root if its simplest rational is one.

    Any root a/b inside an interval narrower than 1/b^2 is that simplest rational.
    """
    if iv.exact is not None:
        return iv
    c = simplest_between(iv.lo, iv.hi)
    if poly_eval(p, c) == 0:
        return RootInterval.at(c)
    return iv


def refine(p: Poly, iv: RootInterval, width: Fraction) -> RootInterval:
    """Bisect down to ``width``, then try to snap onto a rational root."""
    while iv.exact is None and iv.width > width:
        iv = bisect_once(p, iv)
    return snap_rational(p, iv)


def isolate_unique_root(p: Poly, lo: RationalLike, hi: RationalLike, bits: int = 64) -> RootInterval:
    """Enclose the single root of ``p`` in ``[lo, hi]`` to width ``(hi-lo)*2**-bits``.

    Raises ``ValueError`` on same-sign endpoints or when Sturm counting finds
    more than one root inside.
    """
    if bits < 1:
        raise ValueError("bits must be >= 1")
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError(f"inverted bracket [{lo}, {hi}]")
    flo, fhi = poly_eval(p, lo), poly_eval(p, hi)
    if flo == 0 and fhi == 0 and lo != hi:
        raise ValueError(f"both endpoints of [{lo}, {hi}] are roots")
    if flo == 0:
        return RootInterval.at(lo)
    if fhi == 0:
        return RootInterval.at(hi)
    if _sign(flo) == _sign(fhi):
        raise ValueError(f"no sign change on [{lo}, {hi}]: p(lo)={flo}, p(hi)={fhi}")
    if p.degree > 1:
        found = _count(_checked_chain(p), lo, hi)
        if found != 1:
            raise ValueError(f"{found} roots of {p} in [{lo}, {hi}], expected exactly one")
    return refine(p, RootInterval(lo, hi), (hi - lo) / 2**bits)


def isolate_real_roots(p: Poly, lo: RationalLike, hi: RationalLike, bits: int = 64) -> list:
    """All roots of squarefree ``p`` in ``(lo, hi)``, sorted, each refined to
    width ``(hi-lo)*2**-bits``."""
    lo, hi = Fraction(lo), Fraction(hi)
    chain = _checked_chain(p)
    target = (hi - lo) / 2**bits
    found = []
    # (a, b] segments; an exact root at hi is excluded from the open interval
    hi_is_root = poly_eval(p, hi) == 0
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        k = _count(chain, a, b)
        if b == hi and hi_is_root:
            k -= 1
        if k == 0:
            continue
        if k == 1:
            fa, fb = poly_eval(p, a), poly_eval(p, b)
            if fb == 0 and b != hi:
                found.append(RootInterval.at(b))
                continue
            if fa != 0 and fb != 0:
                found.append(refine(p, RootInterval(a, b), target))
                continue
        mid = (a + b) / 2
        stack.append((a, mid))
        stack.append((mid, b))
    found.sort(key=lambda iv: iv.lo)
    return found
