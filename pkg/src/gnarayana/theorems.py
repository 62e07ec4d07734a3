"""Certified checks of the zero-location results for N_{n,m}.

Every verdict is decided by exact evaluation or by comparing disjoint
rational intervals.  A comparison that cannot be separated within
``MAX_ROUNDS`` bisections per polynomial is reported as undecided, never
as a pass.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .exactcore import (
    NEG_INF,
    POS_INF,
    NotSquarefreeError,
    Poly,
    RootInterval,
    bisect_once,
    cauchy_bound,
    count_real_roots,
    descartes_positive_count,
    is_squarefree,
    isolate_real_roots,
    isolate_unique_root,
    poly_eval,
)
from .narayana import FamilyIndex, IndexLike, as_index, gn_poly, recurrence_coeffs

MAX_ROUNDS = 4096
DEFAULT_BITS = 64
ONE_THIRD = Fraction(1, 3)


class Verdict(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    UNDECIDED = "undecided"


class TheoremViolation(Exception):
    """A computed fact contradicts a claimed property of the family."""

    def __init__(self, idx: FamilyIndex, detail: str):
        super().__init__(f"{idx}: {detail}")
        self.idx = idx
        self.detail = detail


@dataclass(frozen=True)
class CheckResult:
    check: str
    idx: FamilyIndex
    verdict: Verdict
    witness: Dict = field(default_factory=dict, compare=False)

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS


def _verdict(ok: bool) -> Verdict:
    return Verdict.PASS if ok else Verdict.FAIL


def _require(idx: FamilyIndex, offset: int) -> None:
    if idx.n < idx.m + offset:
        raise ValueError(f"{idx} outside regime n >= m+{offset}")


@dataclass(frozen=True)
class BoundPair:
    idx: FamilyIndex
    lower: Fraction
    upper: Fraction


def positive_zero_bounds(idx: IndexLike) -> BoundPair:
    """lower = 2(n+1)/((m+1-n)((m+2)^2-(n+1)^2-1)), upper = 2/((m-n)(m+1-n))."""
    idx = as_index(idx)
    _require(idx, 3)
    n, m = idx.n, idx.m
    lo_den = (m + 1 - n) * ((m + 2) ** 2 - (n + 1) ** 2 - 1)
    up_den = (m - n) * (m + 1 - n)
    if lo_den <= 0 or up_den <= 0:
        raise ArithmeticError(f"nonpositive bound denominator at {idx}")
    return BoundPair(idx, Fraction(2 * (n + 1), lo_den), Fraction(2, up_den))


@lru_cache(maxsize=None)
def _positive_zero(n: int, m: int, bits: int) -> RootInterval:
    idx = FamilyIndex(n, m)
    p = gn_poly(idx)
    found = count_real_roots(p, 0, POS_INF)
    if found != 1:
        raise TheoremViolation(idx, f"{found} positive zeros, expected exactly one")
    if n == m + 2 and poly_eval(p, 1) == 0:
        return RootInterval.at(1)
    if n >= m + 3:
        bp = positive_zero_bounds(idx)
        if poly_eval(p, bp.lower) > 0 and poly_eval(p, bp.upper) <= 0:
            return isolate_unique_root(p, bp.lower, bp.upper, bits)
    # bracket unusable: fall back to (0, Cauchy bound]
    return isolate_unique_root(p, 0, cauchy_bound(p), bits)


def certified_positive_zero(idx: IndexLike, bits: int = DEFAULT_BITS) -> RootInterval:
    idx = as_index(idx)
    _require(idx, 2)
    return _positive_zero(idx.n, idx.m, bits)


@lru_cache(maxsize=None)
def _negative_zeros(n: int, m: int, bits: int) -> Tuple[RootInterval, ...]:
    idx = FamilyIndex(n, m)
    p = gn_poly(idx)
    bound = cauchy_bound(p)
    roots = isolate_real_roots(p, -bound, 0, bits)
    if len(roots) != m:
        raise TheoremViolation(idx, f"{len(roots)} negative zeros, expected {m}")
    return tuple(roots)


def negative_zero_set(idx: IndexLike, bits: int = DEFAULT_BITS) -> List[RootInterval]:
    """The m negative zeros of N_{n,m}, ascending, as disjoint certified intervals."""
    idx = as_index(idx)
    _require(idx, 2)
    return list(_negative_zeros(idx.n, idx.m, bits))


@dataclass(frozen=True)
class Separation:
    order: Optional[int]  # -1, 0, +1, or None when undecided
    first: RootInterval
    second: RootInterval
    rounds: Tuple[int, int]


def compare_roots(p: Poly, first: RootInterval, q: Poly, second: RootInterval,
                  max_rounds: int = MAX_ROUNDS) -> Separation:
    """Order the root of ``p`` in ``first`` against the root of ``q`` in ``second``.

    Intervals are bisected (wider one first) until they are strictly
    disjoint or provably share the root.
    """
    rp = rq = 0
    while True:
        if first.hi < second.lo:
            return Separation(-1, first, second, (rp, rq))
        if second.hi < first.lo:
            return Separation(1, first, second, (rp, rq))
        if first.exact is not None and second.exact is not None:
            return Separation(0, first, second, (rp, rq))
        if first.exact is not None and poly_eval(q, first.exact) == 0:
            return Separation(0, first, second, (rp, rq))
        if second.exact is not None and poly_eval(p, second.exact) == 0:
            return Separation(0, first, second, (rp, rq))
        refine_first = second.exact is not None or (first.exact is None and first.width >= second.width)
        if refine_first:
            if rp >= max_rounds:
                return Separation(None, first, second, (rp, rq))
            first = bisect_once(p, first)
            rp += 1
        else:
            if rq >= max_rounds:
                return Separation(None, first, second, (rp, rq))
            second = bisect_once(q, second)
            rq += 1


def interval_repr(iv: RootInterval) -> Dict:
    if iv.exact is not None:
        return {"exact": iv.exact}
    return {"lo": iv.lo, "hi": iv.hi}


def _strictly_below(p, i, q, j, label_lo, label_hi) -> Tuple[Verdict, Dict]:
    sep = compare_roots(p, i, q, j)
    witness = {label_lo: interval_repr(sep.first), label_hi: interval_repr(sep.second), "rounds": list(sep.rounds)}
    if sep.order is None:
        return Verdict.UNDECIDED, witness
    return _verdict(sep.order == -1), witness


def verify_bounds(idx: IndexLike) -> CheckResult:
    """N(lower) > 0, and N(upper) < 0 (m >= 1) or N(upper) == 0 (m == 0)."""
    idx = as_index(idx)
    _require(idx, 3)
    bp = positive_zero_bounds(idx)
    p = gn_poly(idx)
    at_lo, at_hi = poly_eval(p, bp.lower), poly_eval(p, bp.upper)
    upper_ok = at_hi == 0 if idx.m == 0 else at_hi < 0
    return CheckResult("bounds", idx, _verdict(at_lo > 0 and upper_ok), {
        "lower": bp.lower, "upper": bp.upper,
        "N_at_lower": at_lo, "N_at_upper": at_hi,
        "equality": at_hi == 0,
    })


def default_sign_samples(idx: IndexLike, bits: int = DEFAULT_BITS) -> List[Fraction]:
    idx = as_index(idx)
    iv = certified_positive_zero(idx, bits)
    pts = {Fraction(1, 1000), Fraction(1, 100), Fraction(1, 10), Fraction(1, 4), ONE_THIRD,
           Fraction(1, 2), Fraction(1), Fraction(2), Fraction(10),
           iv.lo / 2, iv.lo, iv.hi, 2 * iv.hi}
    if idx.n >= idx.m + 3:
        bp = positive_zero_bounds(idx)
        pts |= {bp.lower, bp.upper}
    return sorted(x for x in pts if x > 0)


def verify_sign_lemma(idx: IndexLike, samples: Optional[Sequence] = None,
                      bits: int = DEFAULT_BITS) -> CheckResult:
    """For x > 0: N(x) > 0 iff x below the positive zero, N(x) < 0 iff above."""
    idx = as_index(idx)
    _require(idx, 2)
    p = gn_poly(idx)
    if samples is None:
        samples = default_sign_samples(idx, bits)
    iv = certified_positive_zero(idx, bits)
    bad, undecided = [], []
    for x in samples:
        x = Fraction(x)
        if x <= 0:
            raise ValueError(f"sample {x} is not positive")
        s = poly_eval(p, x)
        sign = (s > 0) - (s < 0)
        cur, rounds = iv, 0
        # locate x against the root by midpoint bisection only, never splitting at x
        while True:
            if cur.exact is not None and x == cur.exact:
                expected = 0
                break
            if x < cur.lo or (cur.exact is None and x == cur.lo):
                expected = 1
                break
            if x > cur.hi or (cur.exact is None and x == cur.hi):
                expected = -1
                break
            if cur.exact is None and sign == 0:
                expected = 0  # x inside an isolating interval and a root: it is the root
                break
            if rounds >= MAX_ROUNDS:
                expected = None
                break
            cur = bisect_once(p, cur)
            rounds += 1
        if expected is None:
            undecided.append(x)
        elif expected != sign:
            bad.append({"x": x, "sign": sign, "expected": expected})
    verdict = Verdict.FAIL if bad else (Verdict.UNDECIDED if undecided else Verdict.PASS)
    return CheckResult("signs", idx, verdict, {
        "root": interval_repr(iv), "samples": len(samples), "violations": bad, "undecided": undecided,
    })


def verify_monotonicity(m: int, n: int, bits: int = DEFAULT_BITS):
    """Three comparisons of positive zeros:

    (i) r(n+1,m) < r(n,m); (ii) r(n+1,m+1) < r(n,m); (iii) r(n,m) < r(n,m+1),
    the last only for n >= m+4 (``None`` otherwise).
    """
    idx = FamilyIndex(n, m)
    _require(idx, 3)

    def zero(nn, mm):
        return gn_poly((nn, mm)), certified_positive_zero((nn, mm), bits)

    p0, r0 = zero(n, m)
    out = []
    for name, (nn, mm), flip in (("monotonic.n", (n + 1, m), False),
                                 ("monotonic.diag", (n + 1, m + 1), False),
                                 ("monotonic.m", (n, m + 1), True)):
        if flip and n < m + 4:
            out.append(None)
            continue
        q, rq = zero(nn, mm)
        other = f"r{FamilyIndex(nn, mm)}"
        here = f"r{idx}"
        if flip:
            v, w = _strictly_below(p0, r0, q, rq, here, other)
        else:
            v, w = _strictly_below(q, rq, p0, r0, other, here)
        out.append(CheckResult(name, idx, v, w))
    return tuple(out)


def verify_interlacing(idx: IndexLike, bits: int = DEFAULT_BITS) -> CheckResult:
    """Negative zeros u of N_{n+1,m+1} and v of N_{n,m}: u1 < v1 < u2 < ... < vm < u_{m+1}."""
    idx = as_index(idx)
    _require(idx, 2)
    nxt = FamilyIndex(idx.n + 1, idx.m + 1)
    p, q = gn_poly(idx), gn_poly(nxt)
    try:
        v = negative_zero_set(idx, bits)
        u = negative_zero_set(nxt, bits)
    except (TheoremViolation, NotSquarefreeError) as exc:
        return CheckResult("interlace", idx, Verdict.FAIL, {"error": str(exc)})
    chain = []
    for k in range(len(v)):
        chain += [(q, u[k], f"u{k + 1}"), (p, v[k], f"v{k + 1}")]
    chain.append((q, u[-1], f"u{len(u)}"))
    pairs = []
    status = Verdict.PASS
    for k in range(len(chain) - 1):
        (f, i, a), (g, j, b) = chain[k], chain[k + 1]
        verdict, w = _strictly_below(f, i, g, j, a, b)
        # keep refined intervals for the next comparison
        chain[k + 1] = (g, _from_repr(w[b]), b)
        pairs.append(w)
        if verdict is not Verdict.PASS:
            return CheckResult("interlace", idx, verdict, {"offending": w})
    return CheckResult("interlace", idx, status, {"pairs": len(pairs), "u": len(u), "v": len(v)})


def _from_repr(r: Dict) -> RootInterval:
    if "exact" in r:
        return RootInterval.at(r["exact"])
    return RootInterval(r["lo"], r["hi"])


def verify_proposition(m: int, n_max: int, epsilon: Optional[Fraction] = None,
                       bits: int = DEFAULT_BITS) -> CheckResult:
    """Positive zeros in (0, 1/3], touching 1/3 only at (3, 0); upper bound
    strictly decreasing in n (and below ``epsilon`` at ``n_max`` if given)."""
    idx = FamilyIndex(n_max, m)
    _require(idx, 3)
    problems = []
    prev_upper = None
    for n in range(m + 3, n_max + 1):
        p = gn_poly((n, m))
        iv = certified_positive_zero((n, m), bits)
        rounds = 0
        while iv.exact is None and iv.hi == ONE_THIRD and rounds < MAX_ROUNDS:
            iv = bisect_once(p, iv)
            rounds += 1
        touches = iv.hi == ONE_THIRD
        if not (iv.lo > 0 and iv.hi <= ONE_THIRD) or (touches and (n, m) != (3, 0)):
            problems.append({"n": n, "root": interval_repr(iv)})
        upper = positive_zero_bounds((n, m)).upper
        if prev_upper is not None and not upper < prev_upper:
            problems.append({"n": n, "upper": upper, "previous_upper": prev_upper})
        prev_upper = upper
    witness = {"n_max": n_max, "upper_at_n_max": prev_upper, "problems": problems}
    if epsilon is not None:
        witness["epsilon"] = Fraction(epsilon)
        if not prev_upper < epsilon:
            problems.append({"n": n_max, "upper": prev_upper, "epsilon": Fraction(epsilon)})
    return CheckResult("proposition", idx, _verdict(not problems), witness)


def root_census(idx: IndexLike) -> CheckResult:
    """Squarefree, one positive and m negative zeros, m+1 real zeros in total."""
    idx = as_index(idx)
    _require(idx, 2)
    p = gn_poly(idx)
    witness = {"degree": p.degree, "descartes": descartes_positive_count(p)}
    if not is_squarefree(p):
        witness["squarefree"] = False
        return CheckResult("census", idx, Verdict.FAIL, witness)
    pos = count_real_roots(p, 0, POS_INF)
    neg = count_real_roots(p, NEG_INF, 0)
    total = count_real_roots(p)
    witness.update(squarefree=True, positive=pos, negative=neg, total=total)
    ok = pos == 1 and neg == idx.m and total == idx.m + 1 == p.degree
    return CheckResult("census", idx, _verdict(ok), witness)


def proof_identities(idx: IndexLike) -> Dict[str, bool]:
    """Exact checks of the closed forms used in the inductive step from m to m+1.

    Here x1, x2 are the bounds for (n, m+1) and a, b, c the recurrence
    coefficients at (n, m); requires n >= m+4.
    """
    idx = as_index(idx)
    _require(idx, 4)
    n, m = idx.n, idx.m
    rc = recurrence_coeffs(idx)
    br = positive_zero_bounds((n, m + 1))
    x1, x2 = br.lower, br.upper
    a1, b1, c1 = rc.a(x1), rc.b(x1), rc.c(x1)
    q = (n + m + 4) * (n - m - 2) + 1
    prev_lower = Fraction(2 * n, (m + 2 - n) * ((m + 2) ** 2 - n ** 2 - 1))
    return {
        "0<x1<x2<=1/3": 0 < x1 < x2 <= ONE_THIRD,
        "c(x1)>0": c1 > 0,
        "c(x2)>0": rc.c(x2) > 0,
        "a(x1)": a1 == Fraction(-2 * (n - m - 3) * (n - m - 1), q) and a1 < 0,
        "b-factor(x1)": (m + 2 - n) * (m + 1 - n) * x1 - 2 == Fraction(-2 * (m + 2) * (n - m - 3), q),
        "b(x1)>0": b1 > 0,
        "a(x1)+b(x1)": a1 + b1 == Fraction(
            2 * (n + 1) * (n - m - 3) * (n - m - 1) * ((n - m - 3) * (m + 1) * (n + m + 4) - 2),
            q * q * (n - m - 2)) and a1 + b1 > 0,
        "x1<lower(n-1,m)": x1 - prev_lower == Fraction(
            -2 * (n - m - 3) * (n - m - 1),
            (n - m - 2) * q * (n * n - (m + 1) * (m + 3))) and x1 < prev_lower,
        "b(x2)=0": rc.b(x2) == 0,
        "a(x2)": rc.a(x2) == Fraction(2 * (m + 1) * (n - m - 3), n - m - 1) and rc.a(x2) > 0,
    }


CHECK_REGISTRY = ("census", "bounds", "bracket", "signs", "negatives")


@dataclass(frozen=True)
class ZeroReport:
    idx: FamilyIndex
    bracket: Optional[BoundPair]
    positive_zero: RootInterval
    negative_zeros: Tuple[RootInterval, ...]
    checks: Dict[str, Verdict]

    @property
    def all_passed(self) -> bool:
        return all(v is Verdict.PASS for v in self.checks.values())


def zero_report(idx: IndexLike, bits: int = DEFAULT_BITS) -> ZeroReport:
    """Bracket, certified zeros and per-cell checks for one N_{n,m} (n >= m+2).

    ``bracket`` is ``None`` for n = m+2, where the positive zero is exactly 1.
    """
    idx = as_index(idx)
    _require(idx, 2)
    p = gn_poly(idx)
    checks = {"census": root_census(idx).verdict}
    bracket = None
    pos = certified_positive_zero(idx, bits)
    if idx.n >= idx.m + 3:
        bracket = positive_zero_bounds(idx)
        checks["bounds"] = verify_bounds(idx).verdict
        inside = bracket.lower <= pos.lo and pos.hi <= bracket.upper
        checks["bracket"] = _verdict(inside)
    checks["signs"] = verify_sign_lemma(idx, bits=bits).verdict
    try:
        neg = tuple(negative_zero_set(idx, bits))
        ok = all(iv.hi < 0 and iv.is_valid_for(p) for iv in neg) and all(
            a.hi < b.lo for a, b in zip(neg, neg[1:]))
        checks["negatives"] = _verdict(ok)
    except TheoremViolation:
        neg = ()
        checks["negatives"] = Verdict.FAIL
    assert set(checks) <= set(CHECK_REGISTRY)
    return ZeroReport(idx, bracket, pos, neg, checks)
