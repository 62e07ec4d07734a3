"""Command line front end: ``poly``, ``zero`` and ``verify``.

Exit codes: 0 all checks pass, 1 a mathematical failure or undecided
verdict, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .exactcore import NotSquarefreeError, RootInterval, format_poly
from .narayana import FamilyIndex, apply_recurrence, chu_vandermonde_check, gn_poly, recurrence_residual
from .theorems import (
    DEFAULT_BITS,
    CheckResult,
    TheoremViolation,
    Verdict,
    root_census,
    verify_bounds,
    verify_interlacing,
    verify_monotonicity,
    verify_proposition,
    verify_sign_lemma,
    zero_report,
)

ALL_CHECKS = ("recurrence", "bounds", "signs", "monotonic", "interlace", "proposition", "census", "chu")
FORMATS = ("text", "json", "csv")


def rational_pair(q) -> List[str]:
    q = Fraction(q)
    return [str(q.numerator), str(q.denominator)]


def jsonable(obj):
    """Recursively turn Fractions into [num, den] string pairs."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return rational_pair(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, RootInterval):
        return jsonable({"lo": obj.lo, "hi": obj.hi, "exact": obj.exact})
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _q(q: Optional[Fraction]) -> str:
    return "" if q is None else str(q)


# ---------------------------------------------------------------- poly

def cmd_poly(args) -> int:
    p = gn_poly((args.n, args.m))
    out = args.stdout
    if args.format == "json":
        json.dump({"n": args.n, "m": args.m, "coeffs": [rational_pair(c) for c in p.coeffs]}, out)
        out.write("\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["k", "num", "den"])
        for k, c in enumerate(p.coeffs):
            w.writerow([k, *rational_pair(c)])
    else:
        out.write(format_poly(p) + "\n")
    return 0


# ---------------------------------------------------------------- zero

ZERO_CSV_HEADER = ["n", "m", "lower_num", "lower_den", "upper_num", "upper_den",
                   "root_lo", "root_hi", "root_exact", "checks_passed"]


def cmd_zero(args) -> int:
    rep = zero_report((args.n, args.m), args.bits)
    iv = rep.positive_zero
    out = args.stdout
    if args.format == "json":
        doc = {
            "n": args.n, "m": args.m, "bits": args.bits,
            "bracket": None if rep.bracket is None else {"lower": rep.bracket.lower, "upper": rep.bracket.upper},
            "positive_zero": {"lo": iv.lo, "hi": iv.hi, "exact": iv.exact, "width": iv.width},
            "negative_zeros": [{"lo": z.lo, "hi": z.hi, "exact": z.exact} for z in rep.negative_zeros],
            "checks": {k: v.value for k, v in rep.checks.items()},
            "all_checks_pass": rep.all_passed,
        }
        json.dump(jsonable(doc), out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(ZERO_CSV_HEADER)
        b = rep.bracket
        w.writerow([
            args.n, args.m,
            *(rational_pair(b.lower) if b else ["", ""]),
            *(rational_pair(b.upper) if b else ["", ""]),
            iv.lo, iv.hi, _q(iv.exact), str(rep.all_passed).lower(),
        ])
    else:
        out.write(f"N_{{{args.n},{args.m}}}(x) = {format_poly(gn_poly((args.n, args.m)))}\n")
        if rep.bracket is not None:
            out.write(f"bracket: ({rep.bracket.lower}, {rep.bracket.upper}]\n")
        if iv.exact is not None:
            out.write(f"positive zero: {iv.exact} (exact)\n")
        else:
            out.write(f"positive zero in ({iv.lo}, {iv.hi})  ≈ {float(iv.midpoint):.12g}, width {float(iv.width):.3g}\n")
        for k, z in enumerate(rep.negative_zeros, 1):
            if z.exact is not None:
                out.write(f"negative zero {k}: {z.exact} (exact)\n")
            else:
                out.write(f"negative zero {k} in ({z.lo}, {z.hi})  ≈ {float(z.midpoint):.12g}\n")
        for name, v in rep.checks.items():
            out.write(f"  {name:<10} {v.value}\n")
    return 0 if rep.all_passed else 1


# ---------------------------------------------------------------- verify

@dataclass(frozen=True)
class SweepConfig:
    m_min: int = 0
    m_max: int = 10
    n_offset_max: int = 20
    bits: int = DEFAULT_BITS
    checks: Tuple[str, ...] = ALL_CHECKS
    output_format: str = "text"
    output_path: Optional[str] = None
    parallelism: int = 1

    def __post_init__(self):
        if self.m_min < 0 or self.m_min > self.m_max:
            raise ValueError(f"need 0 <= m_min <= m_max, got {self.m_min}, {self.m_max}")
        if self.n_offset_max < 1:
            raise ValueError("n_offset_max must be >= 1")
        if self.bits < 1:
            raise ValueError("bits must be >= 1")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")
        if not self.checks:
            raise ValueError("no checks selected")
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")
        if self.output_format not in FORMATS:
            raise ValueError(f"unknown format {self.output_format!r}")

    def as_dict(self) -> Dict:
        return {"m_min": self.m_min, "m_max": self.m_max, "n_offset_max": self.n_offset_max,
                "bits": self.bits, "checks": list(self.checks)}


def sweep_cells(cfg: SweepConfig) -> List[Tuple[str, int, int, int]]:
    """(check, n, m, bits) for every grid cell, in the regime each check needs."""
    cells = []
    k = cfg.n_offset_max
    for m in range(cfg.m_min, cfg.m_max + 1):
        for check in cfg.checks:
            if check == "recurrence":
                ns = range(1, m + k + 1)
            elif check == "chu":
                ns = [m + 2]
            elif check in ("census", "interlace"):
                ns = range(m + 2, m + k + 1)
            elif check == "proposition":
                ns = [m + k] if k >= 3 else []
            else:
                ns = range(m + 3, m + k + 1)
            cells.extend((check, n, m, cfg.bits) for n in ns)
    return cells


def _recurrence_result(idx: FamilyIndex) -> CheckResult:
    residual = recurrence_residual(idx)
    witness = {"residual_degree": residual.degree}
    ok = residual.is_zero()
    if idx.n not in (idx.m + 1, idx.m + 2):
        normalized_ok = apply_recurrence(idx) == gn_poly((idx.n, idx.m + 1))
        witness["normalized"] = normalized_ok
        ok = ok and normalized_ok
    return CheckResult("recurrence", idx, Verdict.PASS if ok else Verdict.FAIL, witness)


def run_cell(cell: Tuple[str, int, int, int]) -> List[Dict]:
    check, n, m, bits = cell
    idx = FamilyIndex(n, m)
    try:
        if check == "recurrence":
            results = [_recurrence_result(idx)]
        elif check == "chu":
            ok = chu_vandermonde_check(m)
            results = [CheckResult("chu", idx, Verdict.PASS if ok else Verdict.FAIL, {"N_at_1": gn_poly(idx)(1)})]
        elif check == "bounds":
            results = [verify_bounds(idx)]
        elif check == "signs":
            results = [verify_sign_lemma(idx, bits=bits)]
        elif check == "monotonic":
            results = [r for r in verify_monotonicity(m, n, bits) if r is not None]
        elif check == "interlace":
            results = [verify_interlacing(idx, bits)]
        elif check == "proposition":
            results = [verify_proposition(m, n, bits=bits)]
        elif check == "census":
            results = [root_census(idx)]
        else:
            raise ValueError(check)
    except (TheoremViolation, NotSquarefreeError) as exc:
        results = [CheckResult(check, idx, Verdict.FAIL, {"error": str(exc)})]
    return [{"n": r.idx.n, "m": r.idx.m, "check": r.check, "verdict": r.verdict.value,
             "witness": jsonable(r.witness)} for r in results]


def run_sweep(cfg: SweepConfig) -> List[Dict]:
    cells = sweep_cells(cfg)
    if cfg.parallelism == 1:
        chunks = map(run_cell, cells)
        rows = [r for chunk in chunks for r in chunk]
    else:
        with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
            rows = [r for chunk in pool.map(run_cell, cells, chunksize=4) for r in chunk]
    rows.sort(key=lambda r: (r["m"], r["n"], r["check"]))
    return rows


def summarize(rows: Sequence[Dict]) -> Dict[str, Dict[str, int]]:
    summary: Dict[str, Dict[str, int]] = {}
    for r in rows:
        family = r["check"].split(".")[0]
        counts = summary.setdefault(family, {v.value: 0 for v in Verdict})
        counts[r["verdict"]] += 1
    return dict(sorted(summary.items()))


def render_report(cfg: SweepConfig, rows: Sequence[Dict], fmt: str) -> str:
    summary = summarize(rows)
    if fmt == "json":
        return json.dumps({"config": cfg.as_dict(), "summary": summary, "results": list(rows)}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "m", "check", "verdict", "witness"])
        for r in rows:
            w.writerow([r["n"], r["m"], r["check"], r["verdict"], json.dumps(r["witness"], separators=(",", ":"))])
        return buf.getvalue()
    lines = [f"sweep m={cfg.m_min}..{cfg.m_max}, n offset <= {cfg.n_offset_max}, bits={cfg.bits}"]
    lines.append(f"{'check':<12} {'pass':>6} {'fail':>6} {'undecided':>10}")
    for name, c in summary.items():
        lines.append(f"{name:<12} {c['pass']:>6} {c['fail']:>6} {c['undecided']:>10}")
    bad = [r for r in rows if r["verdict"] != Verdict.PASS.value]
    for r in bad:
        lines.append(f"{r['verdict'].upper()} {r['check']} n={r['n']} m={r['m']} {json.dumps(r['witness'])}")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    cfg = args.config
    rows = run_sweep(cfg)
    report = render_report(cfg, rows, cfg.output_format)
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(report)
        if cfg.output_format != "text":
            args.stdout.write(render_report(cfg, rows, "text"))
    else:
        args.stdout.write(report)
    return 0 if all(r["verdict"] == Verdict.PASS.value for r in rows) else 1


# ---------------------------------------------------------------- parsing

def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {s}")
    return v


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gnarayana", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="print the coefficients of N_{n,m}")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_poly)

    z = sub.add_parser("zero", help="certified zeros and checks for one N_{n,m}, n >= m+2")
    z.add_argument("--n", type=_nonneg, required=True)
    z.add_argument("--m", type=_nonneg, required=True)
    z.add_argument("--bits", type=_positive, default=DEFAULT_BITS)
    z.add_argument("--format", choices=FORMATS, default="text")
    z.set_defaults(func=cmd_zero)

    v = sub.add_parser("verify", help="sweep theorem checks over an (n, m) grid")
    v.add_argument("--checks", default=",".join(ALL_CHECKS),
                   help=f"comma-separated subset of {','.join(ALL_CHECKS)}")
    v.add_argument("--m-min", type=_nonneg, default=0)
    v.add_argument("--m-max", type=_nonneg, default=10)
    v.add_argument("--n-offset-max", type=_positive, default=20)
    v.add_argument("--bits", type=_positive, default=DEFAULT_BITS)
    v.add_argument("--out", default=None)
    v.add_argument("--format", choices=FORMATS, default="text")
    v.add_argument("--parallelism", type=_positive, default=1)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.stdout = stdout if stdout is not None else sys.stdout
    if args.command == "zero" and args.n < args.m + 2:
        parser.error(f"zero needs n >= m+2, got n={args.n}, m={args.m}")
    if args.command == "verify":
        checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
        try:
            args.config = SweepConfig(args.m_min, args.m_max, args.n_offset_max, args.bits, checks,
                                      args.format, args.out, args.parallelism)
        except ValueError as exc:
            parser.error(str(exc))
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
