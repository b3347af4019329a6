"""Command-line frontend: number tables, integration runs, identity suites.

Every numeric output is exact (rationals as "num/den" strings, symbolic
values as coefficient lists, p-adic values as valuation/unit/precision); no
floating point appears anywhere.

Exit codes: 0 success, 1 verification failure, 2 usage or precondition
error, 3 non-convergence of a p-adic integral.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .algebra import CyclotomicElement, RationalFunction
from .characters import (character_value, conductor, enumerate_characters,
                         parse_character_id)
from .padic import DEFAULT_BALL_CAP, DEFAULT_PRECISION, PadicNumber, ProfiniteDomain, \
    padic_from_rational
from .qmeasure import (BOSONIC, FERMIONIC, MeasureSpec, NonConvergence,
                       QDescriptor, integrate, parse_integrand)
from .qnumbers import beta_polynomial, beta_number, k_chi, k_number, k_polynomial
from .series import (euler_gf, f_q_coefficient_partial, f_q_series,
                     scaled_coefficient)
from .verify import SUITES, run_suites

CSV_COLUMNS = ["kind", "n", "x", "m", "chi", "q_spec", "value"]

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_NO_CONVERGENCE = 3


class UsageError(Exception):
    pass


def parse_q_spec(text: str, default_precision: int = DEFAULT_PRECISION) -> QDescriptor:
    """Parse "sym", "sym:D", "a/b" or "padic:p:q:A" into a descriptor."""
    try:
        if text == "sym":
            return QDescriptor.symbolic(1)
        if text.startswith("sym:"):
            return QDescriptor.symbolic(int(text.split(":", 1)[1]))
        if text.startswith("padic:"):
            parts = text.split(":")
            if len(parts) not in (3, 4):
                raise ValueError("expected padic:p:q or padic:p:q:A")
            p = int(parts[1])
            q = Fraction(parts[2])
            prec = int(parts[3]) if len(parts) == 4 else default_precision
            return QDescriptor.padic(padic_from_rational(q, p, prec))
        return QDescriptor.rational(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad q spec {text!r}: {exc}") from exc


def parse_index_range(text: str) -> list[int]:
    """"3" or "0..8" (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
            if lo_i > hi_i or lo_i < 0:
                raise ValueError("empty or negative range")
            return list(range(lo_i, hi_i + 1))
        value = int(text)
        if value < 0:
            raise ValueError("negative index")
        return [value]
    except ValueError as exc:
        raise UsageError(f"bad index range {text!r}: {exc}") from exc


def value_to_json(value):
    if isinstance(value, RationalFunction):
        return value.to_json()
    if isinstance(value, PadicNumber):
        return value.to_json()
    if isinstance(value, CyclotomicElement):
        return {"L": value.order, "coeffs": [c.to_json() for c in value.coeffs]}
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    raise TypeError(f"cannot serialize {type(value).__name__}")


def value_from_json(data):
    if isinstance(data, str):
        return Fraction(data)
    if isinstance(data, dict) and "D" in data:
        return RationalFunction.from_json(data)
    if isinstance(data, dict) and "p" in data:
        return PadicNumber.from_json(data)
    if isinstance(data, dict) and "L" in data:
        return CyclotomicElement(int(data["L"]),
                                 [RationalFunction.from_json(c) for c in data["coeffs"]])
    raise TypeError(f"cannot parse serialized value {data!r}")


def _value_text(value) -> str:
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    return str(value)


def _emit(report: dict, rows: list[dict], args) -> None:
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow({col: row.get(col, "") for col in CSV_COLUMNS})
        text = buf.getvalue()
    else:
        payload = dict(report)
        payload["rows"] = [
            {k: (value_to_json(v) if k == "value" else v) for k, v in row.items()}
            for row in rows
        ]
        text = json.dumps(payload, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_numbers(args) -> int:
    q = parse_q_spec(args.q)
    rows = []
    for n in parse_index_range(args.n):
        if args.kind == "K":
            value = k_number(n, q)
        elif args.kind == "beta":
            value = beta_number(n, q)
        else:
            if not args.chi:
                raise UsageError("--chi is required for kind K_chi")
            chi = parse_character_id(args.chi)
            value = k_chi(n, chi, q, method=args.method)
        rows.append({"kind": args.kind, "n": n, "x": "", "m": "",
                     "chi": args.chi or "", "q_spec": args.q, "value": value})
    _emit({"command": "numbers", "kind": args.kind, "q_spec": args.q}, rows, args)
    return EXIT_OK


def cmd_polynomials(args) -> int:
    q = parse_q_spec(args.q)
    try:
        x = Fraction(args.x)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad x {args.x!r}: {exc}") from exc
    rows = []
    for n in parse_index_range(args.n):
        if args.kind == "K_poly":
            value = k_polynomial(n, x, q, form=args.form)
        else:
            value = beta_polynomial(n, x, q, form=args.form)
        rows.append({"kind": args.kind, "n": n, "x": str(x), "m": "",
                     "chi": "", "q_spec": args.q, "value": value})
    _emit({"command": "polynomials", "kind": args.kind, "x": str(x),
           "form": args.form, "q_spec": args.q}, rows, args)
    return EXIT_OK


def cmd_integrate(args) -> int:
    try:
        q_value = Fraction(args.q)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad q {args.q!r}: {exc}") from exc
    try:
        q = QDescriptor.padic(padic_from_rational(q_value, args.p, args.A))
        domain = ProfiniteDomain(args.p, args.d)
        spec = MeasureSpec(args.kind, q, domain)
        integrand = parse_integrand(args.f, q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    cap = int(os.environ.get("QVOLK_BALL_CAP", DEFAULT_BALL_CAP))
    try:
        result = integrate(spec, integrand, args.stability, args.n_max, cap)
    except NonConvergence as exc:
        report = {"command": "integrate", "error": "non-convergence",
                  "detail": str(exc), "trace": [list(t) for t in exc.trace]}
        sys.stderr.write(json.dumps(report, indent=2) + "\n")
        return EXIT_NO_CONVERGENCE
    report = {"command": "integrate", "kind": args.kind, "integrand": args.f,
              "p": args.p, "d": args.d, "q": str(q_value), "A": args.A}
    report.update(result.to_json())
    text = json.dumps(report, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    overrides = {}
    if args.m is not None:
        overrides["ms"] = (args.m,)
    if args.n_max is not None:
        overrides["n_max"] = args.n_max
    names = args.suite or None
    try:
        results = run_suites(names, **overrides)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    all_passed = all(r.passed for r in results)
    report = {"command": "verify", "all_passed": all_passed,
              "suites": [r.to_json() for r in results]}
    text = json.dumps(report, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if all_passed else EXIT_VERIFY_FAILED


def cmd_series(args) -> int:
    rows = []
    if args.gf == "euler":
        gf = euler_gf(args.T)
        for n in range(args.T + 1):
            rows.append({"kind": "euler_gf", "n": n, "x": "", "m": "", "chi": "",
                         "q_spec": "", "value": scaled_coefficient(gf, n),
                         "coefficient": str(gf[n])})
    elif args.gf == "Fq":
        q = parse_q_spec(args.q)
        try:
            gf = f_q_series(q, args.T)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        for n in range(args.T + 1):
            coeff = gf[n]
            rows.append({"kind": "Fq_gf", "n": n, "x": "", "m": "", "chi": "",
                         "q_spec": args.q, "value": scaled_coefficient(gf, n),
                         "coefficient": _value_text(coeff)})
    else:  # Kpartial
        try:
            q_value = Fraction(args.q)
            if not 0 < abs(q_value) < 1:
                raise ValueError("partial sums need 0 < |q| < 1")
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad q {args.q!r}: {exc}") from exc
        for k in range(args.k_max + 1):
            ps = f_q_coefficient_partial(k, q_value, args.n_terms)
            rows.append({"kind": "K_partial", "n": k, "x": "", "m": "",
                         "chi": "", "q_spec": args.q, "value": ps.value,
                         "tail_bound": str(ps.tail_bound), "terms": ps.terms})
    report = {"command": "series", "gf": args.gf}
    if args.gf != "euler":
        report["q_spec"] = args.q
    _emit(report, rows, args)
    return EXIT_OK


def cmd_characters(args) -> int:
    rows = []
    for chi in enumerate_characters(args.f):
        f0, primitive = conductor(chi)
        values = [_value_text(character_value(chi, a)) for a in range(args.f)]
        rows.append({"kind": "character", "n": "", "x": "", "m": "",
                     "chi": chi.id_string, "q_spec": "",
                     "value": Fraction(chi.value_order),
                     "conductor": f0, "primitive": primitive,
                     "values": values})
    _emit({"command": "characters", "modulus": args.f}, rows, args)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qvolk",
        description="Exact q-deformed number families, p-adic integrals and "
                    "their identity-verification suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p):
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--output", default=None, help="write to file instead of stdout")

    p = sub.add_parser("numbers", help="q-Bernoulli / q-Euler / twisted number tables")
    p.add_argument("--kind", choices=["K", "beta", "K_chi"], required=True)
    p.add_argument("--n", required=True, help='index or range, e.g. "3" or "0..8"')
    p.add_argument("--q", default="sym", help='"sym", "sym:D", "a/b", "padic:p:q:A"')
    p.add_argument("--chi", default=None, help='character id "f:e1,e2,..."')
    p.add_argument("--method", choices=["closed", "integral"], default="closed")
    add_output_flags(p)
    p.set_defaults(func=cmd_numbers)

    p = sub.add_parser("polynomials", help="shifted-argument polynomial tables")
    p.add_argument("--kind", choices=["K_poly", "beta_poly"], required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--x", default="0", help='rational shift, e.g. "1/2"')
    p.add_argument("--form", choices=["closed", "expansion", "integral"],
                   default="closed")
    p.add_argument("--q", default="sym")
    add_output_flags(p)
    p.set_defaults(func=cmd_polynomials)

    p = sub.add_parser("integrate", help="certified p-adic Riemann-sum limits")
    p.add_argument("--kind", choices=[BOSONIC, FERMIONIC], default=FERMIONIC)
    p.add_argument("--f", default="one",
                   help='"one", "bracket_pow:n", "shifted_bracket_pow:n:x", '
                        '"char_twisted:n:chi_id"')
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", required=True, help="rational q, e.g. 6 or 11/6")
    p.add_argument("--A", type=int, default=DEFAULT_PRECISION,
                   help="working precision in digits")
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--stability", type=int, default=6)
    p.add_argument("--N-max", dest="n_max", type=int, default=8)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("verify", help="run the identity-verification suites")
    p.add_argument("--suite", action="append", choices=sorted(SUITES),
                   help="suite name (repeatable); default: all")
    p.add_argument("--m", type=int, default=None,
                   help="override the distribution-suite moduli")
    p.add_argument("--n-max", dest="n_max", type=int, default=None)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", help="generating-function coefficient tables")
    p.add_argument("--gf", choices=["euler", "Fq", "Kpartial"], required=True)
    p.add_argument("--T", type=int, default=10, help="truncation order")
    p.add_argument("--q", default="sym")
    p.add_argument("--k-max", dest="k_max", type=int, default=6)
    p.add_argument("--n-terms", dest="n_terms", type=int, default=200)
    add_output_flags(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("characters", help="list the characters of a modulus")
    p.add_argument("--f", type=int, required=True)
    add_output_flags(p)
    p.set_defaults(func=cmd_characters)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
