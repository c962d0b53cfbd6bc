"""Command-line front end: eval | factorize | series | verify.

Problem files are JSON documents with string fields `b0`, `a`, `b` and
optional `target`, `name`; all expression fields are parsed by the same
grammars the library uses. Exit codes: 0 verified/ok, 1 refuted-at-depth,
2 parse error, 3 precondition failure, 4 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import (
    ExprSyntaxError,
    GcfForgeError,
    NonPolynomial,
    ProblemFileError,
)
from .expr import parse_const_expr, parse_polynomial, parse_rational
from .factorize import Coupling, find_couplings, verify_coupling
from .gcf import GcfProblem, convergents
from .numerics import (
    PrecisionReal,
    rational_to_real,
    real_from_decimal,
)
from .series import partial_sums, ratio_certificate, terms
from .verify import REFUTED_AT_DEPTH, VERIFIED, VerificationReport, verify_conjecture

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_INCONCLUSIVE = 4

DEFAULT_DIGITS = 30
DEFAULT_VERIFY_DEPTH = 256
DEFAULT_TABLE_DEPTH = 16

_REQUIRED_FIELDS = ("b0", "a", "b")
_OPTIONAL_FIELDS = ("target", "name")


@dataclass(frozen=True)
class ProblemFile:
    """A problem document: raw field text plus the parsed problem."""

    b0_text: str
    a_text: str
    b_text: str
    target_text: str | None
    name: str | None
    problem: GcfProblem


def load_problem_file(path: str | Path) -> ProblemFile:
    try:
        raw = Path(path).read_text()
    except OSError as exc:
        raise ProblemFileError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ProblemFileError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise ProblemFileError(f"{path}: expected a JSON object")
    unknown = sorted(set(doc) - set(_REQUIRED_FIELDS) - set(_OPTIONAL_FIELDS))
    if unknown:
        raise ProblemFileError(f"{path}: unknown fields {unknown}")
    missing = [key for key in _REQUIRED_FIELDS if key not in doc]
    if missing:
        raise ProblemFileError(f"{path}: missing fields {missing}")
    for key in doc:
        if not isinstance(doc[key], str):
            raise ProblemFileError(f"{path}: field {key!r} must be a string")

    b0 = parse_rational(doc["b0"])
    a = parse_polynomial(doc["a"])
    b = parse_polynomial(doc["b"])
    target_text = doc.get("target")
    target = parse_const_expr(target_text) if target_text is not None else None
    problem = GcfProblem(b0=b0, a=a, b=b, target=target)
    return ProblemFile(
        b0_text=doc["b0"],
        a_text=doc["a"],
        b_text=doc["b"],
        target_text=target_text,
        name=doc.get("name"),
        problem=problem,
    )


# --- report serialization ----------------------------------------------------


def _fraction_to_text(q: Fraction) -> str:
    return str(q) if q.denominator > 1 else str(q.numerator)


def _real_to_dict(x: PrecisionReal | None) -> dict | None:
    if x is None:
        return None
    return {"decimal": x.to_decimal(), "precision_bits": x.precision_bits}


def _real_from_dict(doc: dict | None) -> PrecisionReal | None:
    if doc is None:
        return None
    return real_from_decimal(doc["decimal"], doc["precision_bits"])


def _coupling_to_dict(coupling: Coupling | None) -> dict | None:
    if coupling is None:
        return None
    return {"c": coupling.c.to_text(), "d": coupling.d.to_text()}


def _coupling_from_dict(doc: dict | None) -> Coupling | None:
    if doc is None:
        return None
    return Coupling(c=parse_polynomial(doc["c"]), d=parse_polynomial(doc["d"]))


def report_to_dict(report: VerificationReport) -> dict:
    rho: str | None
    if report.rho is not None:
        rho = _fraction_to_text(report.rho)
    elif report.classification is not None:
        rho = "infinite"
    else:
        rho = None
    return {
        "problem": dict(report.problem),
        "coupling": _coupling_to_dict(report.coupling),
        "other_couplings": [_coupling_to_dict(cp) for cp in report.other_couplings],
        "boundary_rule_holds": report.boundary_rule_holds,
        "exact_identity_depth": report.exact_identity_depth,
        "numerator_product_depth": report.numerator_product_depth,
        "casoratian_depth": report.casoratian_depth,
        "rho": rho,
        "classification": report.classification,
        "series_value": _real_to_dict(report.series_value),
        "gcf_value": _real_to_dict(report.gcf_value),
        "target_value": _real_to_dict(report.target_value),
        "digits_matched": report.digits_matched,
        "monotone_convergents": report.monotone_convergents,
        "cauchy_digits": report.cauchy_digits,
        "terms_used": report.terms_used,
        "digits_requested": report.digits_requested,
        "depth": report.depth,
        "verdict": report.verdict,
    }


def report_from_dict(doc: dict) -> VerificationReport:
    rho_text = doc["rho"]
    rho = Fraction(rho_text) if rho_text not in (None, "infinite") else None
    return VerificationReport(
        problem=dict(doc["problem"]),
        coupling=_coupling_from_dict(doc["coupling"]),
        other_couplings=tuple(
            _coupling_from_dict(item) for item in doc["other_couplings"]
        ),
        boundary_rule_holds=doc["boundary_rule_holds"],
        exact_identity_depth=doc["exact_identity_depth"],
        numerator_product_depth=doc["numerator_product_depth"],
        casoratian_depth=doc["casoratian_depth"],
        rho=rho,
        classification=doc["classification"],
        series_value=_real_from_dict(doc["series_value"]),
        gcf_value=_real_from_dict(doc["gcf_value"]),
        target_value=_real_from_dict(doc["target_value"]),
        digits_matched=doc["digits_matched"],
        monotone_convergents=doc["monotone_convergents"],
        cauchy_digits=doc["cauchy_digits"],
        terms_used=doc["terms_used"],
        digits_requested=doc["digits_requested"],
        depth=doc["depth"],
        verdict=doc["verdict"],
    )


# --- commands -----------------------------------------------------------------


def _preview(q: Fraction, digits: int = 12) -> str:
    return rational_to_real(q, max(64, digits * 4)).to_decimal(digits)


def cmd_eval(args) -> int:
    pf = load_problem_file(args.file)
    table = convergents(pf.problem, args.depth)
    print(f"# {pf.name or args.file}: convergents to depth {args.depth}")
    header = f"{'n':>5}  {'A_n':>20}  {'B_n':>20}  x_n"
    print(header)
    for row in table:
        if args.exact:
            x = str(row.x) if row.x is not None else "-"
            print(f"{row.n:>5}  {row.A!s:>20}  {row.B!s:>20}  {x}")
        else:
            x = _preview(row.x) if row.x is not None else "-"
            print(f"{row.n:>5}  {_preview(row.A):>20}  {_preview(row.B):>20}  {x}")
    return EXIT_OK


def cmd_factorize(args) -> int:
    pf = load_problem_file(args.file)
    couplings = find_couplings(pf.problem.a, pf.problem.b)
    if not couplings:
        print("no coupling within linear-split search space")
        print("(search covers rational-root factors plus one indivisible residual)")
        return EXIT_OK
    for coupling in couplings:
        ok = verify_coupling(pf.problem.a, pf.problem.b, coupling)
        tick = "ok" if ok else "FAILED"
        print(f"{coupling}   [identities: {tick}]")
    return EXIT_OK


def cmd_series(args) -> int:
    pf = load_problem_file(args.file)
    couplings = find_couplings(pf.problem.a, pf.problem.b)
    if not couplings:
        print("no coupling within linear-split search space; no series to show")
        return EXIT_INCONCLUSIVE
    coupling = couplings[0]
    certificate = ratio_certificate(coupling)
    rho = "infinite" if certificate.rho is None else str(certificate.rho)
    print(f"coupling: {coupling}")
    print(
        f"ratio: ({certificate.numerator.to_text()}) / ({certificate.denominator.to_text()})"
        f"   rho = {rho}   [{certificate.classification}]"
    )
    ts = terms(coupling, args.count)
    sums = partial_sums(coupling, args.count)
    print(f"{'k':>5}  {'t_k':>24}  S_k")
    for k, (t, s) in enumerate(zip(ts, sums)):
        if args.exact:
            print(f"{k:>5}  {t!s:>24}  {s}")
        else:
            print(f"{k:>5}  {_preview(t):>24}  {_preview(s)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    pf = load_problem_file(args.file)
    report = verify_conjecture(
        pf.problem, digits=args.digits, depth=args.depth, name=pf.name
    )
    _print_report(report)
    if args.json:
        Path(args.json).write_text(json.dumps(report_to_dict(report), indent=2) + "\n")
        print(f"report written to {args.json}")
    if report.verdict == VERIFIED:
        return EXIT_OK
    if report.verdict == REFUTED_AT_DEPTH:
        return EXIT_REFUTED
    return EXIT_INCONCLUSIVE


def _print_report(report: VerificationReport) -> None:
    name = report.problem.get("name")
    if name:
        print(f"problem: {name}")
    print(f"  b0 = {report.problem['b0']}; a = {report.problem['a']}; b = {report.problem['b']}")
    if report.coupling is None:
        print("coupling: none within linear-split search space")
    else:
        extra = f" (+{len(report.other_couplings)} more)" if report.other_couplings else ""
        print(f"coupling: {report.coupling}{extra}")
        print(f"boundary rule b0 = d(1): {'holds' if report.boundary_rule_holds else 'fails'}")
        print(
            "structural depths: "
            f"reciprocal identity {report.exact_identity_depth}/{report.depth}, "
            f"numerator product {report.numerator_product_depth}/{report.depth}, "
            f"casoratian {report.casoratian_depth}/{report.depth}"
        )
        rho = "infinite" if report.rho is None else str(report.rho)
        print(f"rho = {rho}   [{report.classification}]")
    # previews show matched digits plus a small margin, not full precision
    shown = (report.digits_matched or report.digits_requested) + 5
    if report.series_value is not None:
        print(f"series value: {report.series_value.to_decimal(shown)}   ({report.terms_used} terms)")
    if report.gcf_value is not None:
        print(f"gcf value:    {report.gcf_value.to_decimal(shown)}")
    if report.target_value is not None:
        print(f"target:       {report.target_value.to_decimal(shown)}")
        print(f"digits matched: {report.digits_matched} (requested {report.digits_requested})")
    print(
        f"convergents: {'strictly decreasing' if report.monotone_convergents else 'not monotone'}; "
        f"cauchy digits {report.cauchy_digits}"
    )
    print(f"verdict: {report.verdict}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gcf-forge",
        description="verify polynomial generalized continued fraction conjectures",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="print a convergent table")
    p_eval.add_argument("file")
    p_eval.add_argument("--depth", type=int, default=DEFAULT_TABLE_DEPTH)
    p_eval.add_argument("--exact", action="store_true", help="exact rationals instead of previews")
    p_eval.set_defaults(func=cmd_eval)

    p_fact = sub.add_parser("factorize", help="search for couplings (c, d)")
    p_fact.add_argument("file")
    p_fact.set_defaults(func=cmd_factorize)

    p_series = sub.add_parser("series", help="show the induced series and its ratio certificate")
    p_series.add_argument("file")
    p_series.add_argument("--count", type=int, default=DEFAULT_TABLE_DEPTH)
    p_series.add_argument("--exact", action="store_true", help="exact rationals instead of previews")
    p_series.set_defaults(func=cmd_series)

    p_verify = sub.add_parser("verify", help="run the full verification pipeline")
    p_verify.add_argument("file")
    p_verify.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    p_verify.add_argument("--depth", type=int, default=DEFAULT_VERIFY_DEPTH)
    p_verify.add_argument("--json", metavar="PATH", help="also write the report as JSON")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ExprSyntaxError, NonPolynomial, ProblemFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (GcfForgeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
