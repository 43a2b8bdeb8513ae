"""Command-line front end.

    rampoly table r 1 20                 # expanded R_n for 1 <= n <= 20
    rampoly table t 16 16 --format json
    rampoly eval 6 3 --verbose           # c_6(3) by all three methods
    rampoly verify 1 1000 --jobs 4       # full identity suite

Exit status is 0 on success, 1 when ``verify`` finds a failing claim and 2
for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import family as fam
from .numtheory import _require_positive
from .polyring import IntPoly, format_poly
from .ramanujan import c_holder, c_mobius, c_multiplicative, set_cross_check
from .theorems import CLAIMS, SuiteConfig, VerificationReport, run_suite, select_claims

__all__ = ["main", "render_table", "render_report", "render_eval", "n_cap"]

DEFAULT_CAP = 10_000
CAP_ENV = "RAMPOLY_MAX_N"

FAMILIES = {
    "r": ("R", fam.r_poly),
    "t": ("T", fam.t_poly),
    "v": ("V", fam.v_poly),
    "phi": ("Phi", fam.phi_poly),
    "psi": ("Psi", fam.psi_poly),
}
# CSV rows span the defining exponent range, so R_20 lists all of c_20(0..19)
_CSV_WIDTH = {
    "r": lambda n: n,
    "t": lambda n: n,
    "v": lambda n: n,
    "phi": lambda n: 0,
    "psi": lambda n: n + 1,
}
FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


def n_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise UsageError(f"{CAP_ENV} must be >= 1")
    return cap


def _check_range(n_min: int, n_max: int) -> None:
    cap = n_cap()
    if not 1 <= n_min <= n_max:
        raise UsageError(f"need 1 <= min <= max, got {n_min}..{n_max}")
    if n_max > cap:
        raise UsageError(f"max {n_max} exceeds cap {cap} (set {CAP_ENV} to raise it)")


def render_table(family: str, n_min: int, n_max: int, fmt: str = "text") -> str:
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    _check_range(n_min, n_max)
    label, build = FAMILIES[family]
    polys = [(n, build(n)) for n in range(n_min, n_max + 1)]
    if fmt == "json":
        rows = [{"n": n, "coefficients": list(p.coeffs)} for n, p in polys]
        return json.dumps(rows) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        width = _CSV_WIDTH[family]
        for n, p in polys:
            pad = max(0, width(n) - len(p))
            writer.writerow([n, *p.coeffs, *([0] * pad)])
        return buf.getvalue()
    return "".join(f"{label}_{n}(x) = {format_poly(p)}\n" for n, p in polys)


def render_eval(n: int, k: int, fmt: str = "text", verbose: bool = False) -> str:
    _require_positive("n", n)
    values = {
        "multiplicative": c_multiplicative(n, k),
        "mobius": c_mobius(n, k),
        "holder": c_holder(n, k),
    }
    if len(set(values.values())) != 1:
        raise ArithmeticError(f"methods disagree for c_{n}({k}): {values}")
    value = values["multiplicative"]
    if fmt == "json":
        doc = {"n": n, "k": k, "value": value}
        if verbose:
            doc["algorithms"] = values
        return json.dumps(doc) + "\n"
    if fmt == "csv":
        head = ["n", "k", "value"] + (list(values) if verbose else [])
        body = [n, k, value] + (list(values.values()) if verbose else [])
        return ",".join(head) + "\n" + ",".join(map(str, body)) + "\n"
    if not verbose:
        return f"{value}\n"
    lines = [f"c_{n}({k}) = {value}"]
    lines += [f"  {name:<15}{v}" for name, v in values.items()]
    return "\n".join(lines) + "\n"


def _jsonable(value):
    if isinstance(value, IntPoly):
        return list(value.coeffs)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _params_text(params) -> str:
    return ";".join(f"{k}={v}" for k, v in params)


def render_report(report: VerificationReport, fmt: str = "text") -> str:
    if fmt == "json":
        doc = {
            "range": list(report.range),
            "results": [
                {
                    "claim": r.claim,
                    "n": r.n,
                    "params": {k: _jsonable(v) for k, v in r.params},
                    "status": r.status.value,
                    "witness": _jsonable(r.witness),
                }
                for r in report.results
            ],
            "summary": report.summary,
        }
        return json.dumps(doc) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["claim", "n", "params", "status"])
        for r in report.results:
            writer.writerow([r.claim, r.n, _params_text(r.params), r.status.value])
        return buf.getvalue()
    summary = report.summary
    totals = {s: sum(c[s] for c in summary.values()) for s in ("pass", "fail", "na")}
    lines = [
        f"verify n={report.n_min}..{report.n_max}: "
        f"{totals['pass']} pass, {totals['fail']} fail, {totals['na']} na"
    ]
    width = max((len(c) for c in summary), default=0)
    for claim, c in summary.items():
        lines.append(f"  {claim:<{width}}  pass={c['pass']:<6} fail={c['fail']:<4} na={c['na']}")
    for r in report.failures:
        extra = f" [{_params_text(r.params)}]" if r.params else ""
        lines.append(f"FAIL {r.claim} n={r.n}{extra}: {json.dumps(_jsonable(r.witness))}")
    return "\n".join(lines) + "\n"


def _range_args(args) -> tuple[int, int]:
    lo = args.min if args.min is not None else args.lo
    hi = args.max if args.max is not None else args.hi
    if lo is None:
        raise UsageError("missing lower bound (positional or --min)")
    if hi is None:
        hi = lo
    return lo, hi


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rampoly",
        description="Ramanujan-sum polynomials, cyclotomic polynomials and their identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("--fast", action="store_true", help="skip the triple-method row cross-check")

    def ranged(p):
        p.add_argument("lo", type=int, nargs="?")
        p.add_argument("hi", type=int, nargs="?")
        p.add_argument("--min", type=int)
        p.add_argument("--max", type=int)

    p = sub.add_parser("table", help="print expanded polynomials for a range of n")
    p.add_argument("family", choices=sorted(FAMILIES))
    ranged(p)
    common(p)

    p = sub.add_parser("eval", help="evaluate c_n(k)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("-v", "--verbose", action="store_true")
    common(p)

    p = sub.add_parser("verify", help="run the identity suite")
    ranged(p)
    p.add_argument("--claims", help="comma-separated claim ids or prefixes, e.g. Thm7,Rem1")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--x0", type=Fraction, default=Fraction(1, 2))
    p.add_argument("--terms", type=int, default=200)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--list-claims", action="store_true", help="print the claim registry and exit")
    common(p)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    previous = set_cross_check(not args.fast)
    try:
        if args.command == "table":
            lo, hi = _range_args(args)
            out.write(render_table(args.family, lo, hi, args.format))
            return 0
        if args.command == "eval":
            if args.n < 1:
                raise UsageError(f"n must be >= 1, got {args.n}")
            out.write(render_eval(args.n, args.k, args.format, args.verbose))
            return 0
        if args.list_claims:
            out.write("".join(f"{cid}\t{text}\n" for cid, text in CLAIMS.items()))
            return 0
        lo, hi = _range_args(args)
        _check_range(lo, hi)
        if abs(args.x0) >= 1:
            raise UsageError("--x0 must satisfy |x0| < 1")
        if args.terms < 1 or args.tol <= 0 or args.jobs < 1:
            raise UsageError("--terms, --tol and --jobs must be positive")
        claims = None
        if args.claims:
            claims = [c for c in args.claims.split(",") if c.strip()]
            select_claims(claims)
        config = SuiteConfig(x0=args.x0, terms=args.terms, tol=args.tol, cross_check=not args.fast)
        report = run_suite(lo, hi, claims, config, jobs=args.jobs)
        out.write(render_report(report, args.format))
        return 0 if report.ok else 1
    except (UsageError, ValueError) as exc:
        print(f"rampoly: error: {exc}", file=sys.stderr)
        return 2
    finally:
        set_cross_check(previous)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
