"""Exact construction and certified zero analysis of generalized Narayana polynomials."""

from .exactcore import (
    NotSquarefreeError,
    Poly,
    RootInterval,
    binomial,
    count_real_roots,
    descartes_positive_count,
    isolate_real_roots,
    isolate_unique_root,
    poly_arith,
    poly_eval,
    sturm_chain,
)
from .narayana import (
    FamilyIndex,
    RecurrenceCoeffs,
    apply_recurrence,
    catalan,
    chu_vandermonde_check,
    diff_poly,
    gn_coefficient,
    gn_poly,
    narayana_number,
    recurrence_coeffs,
    verify_recurrence,
)
from .theorems import (
    BoundPair,
    CheckResult,
    TheoremViolation,
    Verdict,
    ZeroReport,
    certified_positive_zero,
    negative_zero_set,
    root_census,
    positive_zero_bounds,
    verify_bounds,
    verify_interlacing,
    verify_monotonicity,
    verify_proposition,
    verify_sign_lemma,
    zero_report,
)

__version__ = "0.1.0"
