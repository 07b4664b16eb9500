"""Command-line surface.

Verbs: field, survey, tbound, cubic, n1bound, autorder.  All verbs emit
JSON (indented by default, compact with --json).  Exit codes: 0 success,
2 parse/usage errors, 3 internal assertion failures (bug traps).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cyclo, theorems
from .abgroup import FiniteAbelianGroup, aut_order
from .certificates import Certificate
from .cubic import pht1_check, pht2_check, s3_family_check
from .errors import (
    AbelianCFTError,
    BugTrap,
    HypothesisFail,
    ShapeNotRecognized,
)
from .quadratic import (
    c2_bound_check,
    hcf_abelian_quadratic,
    polya_order_quadratic,
    quadratic_field_data,
)
from .survey import MODES, SurveyConfig, run_survey
from .theorems import (
    n1_bound,
    t_bound,
    t_bound_ell,
    verify_main_bound,
)

REPORT_SCHEMA = "abelian-cft/report-v1"


def _field_report(
    spec: cyclo.AbelianFieldSpec,
    h_external: int | None,
    unit_norm: int | None,
) -> dict:
    degree = cyclo.degree(spec)
    cond = cyclo.conductor(spec)
    disc = cyclo.discriminant(spec)
    real = cyclo.is_real(spec)
    cyclic = cyclo.is_cyclic(spec)
    profile = cyclo.ramification_profile(spec)
    breakdown = t_bound(cond)
    report: dict = {
        "schema": REPORT_SCHEMA,
        "m": spec.m,
        "degree": degree,
        "conductor": cond,
        "discriminant": disc,
        "is_real": real,
        "is_cyclic": cyclic,
        "ramification": [
            {
                "p": entry.p,
                "e": entry.e,
                "f": entry.f,
                "conductor_exponent": entry.conductor_exponent,
            }
            for entry in profile.entries
        ],
        "t_bound": breakdown.to_dict(),
    }
    certificates: list[Certificate] = []
    h_known: int | None = None
    h_source = "external"

    if degree == 2:
        signed_disc = disc if real else -disc
        from .quadratic import discriminant_to_d

        d = discriminant_to_d(signed_disc)
        data = quadratic_field_data(d)
        h_known, h_source = data.h, "computed"
        report["quadratic"] = {
            "d": d,
            "D": signed_disc,
            "r": data.r,
            "h": data.h,
            "h_narrow": data.h_narrow,
            "unit_norm": data.unit_norm,
        }
        report["polya_order"] = polya_order_quadratic(data)
        certificates.append(hcf_abelian_quadratic(data))
        certificates.append(c2_bound_check(data, cond))
        certificates.append(verify_main_bound(data.h, disc, 2))
    elif h_external is not None:
        h_known = h_external

    if cyclic:
        report["genus_degree"] = cyclo.genus_degree_cyclic(spec)
        if degree != 2:
            trivial_norm = unit_norm == 1
            if not real or degree % 2 == 1 or unit_norm is not None:
                report["polya_order"] = theorems.chabert_polya_cyclic(
                    spec, real, real and trivial_norm
                )
            if h_known is not None:
                try:
                    certificates.append(
                        theorems.c1_decision_cyclic(
                            spec, h_known, real, real and trivial_norm
                        )
                    )
                except HypothesisFail:
                    pass

    if degree != 2:
        try:
            certificates.append(theorems.cor32_check(spec, h_known))
        except ShapeNotRecognized:
            pass

    from .arith import is_prime

    if degree > 2 and is_prime(degree) and cyclic:
        predicted = theorems.prime_degree_class_group_predict(spec, degree)
        report["predicted_class_group"] = {
            "invariant_factors": list(predicted.invariant_factors),
            "assumption": "Hilbert class field assumed abelian over Q",
        }

    if h_known is not None:
        report["class_number"] = {"value": h_known, "source": h_source}
    report["certificates"] = [cert.to_dict() for cert in certificates]
    return report


def _add_global_flags(parser: argparse.ArgumentParser) -> None:
    # Registered on the main parser and on every subparser so the flags
    # are accepted both before and after the verb; SUPPRESS keeps the
    # subparser pass from clobbering values parsed before the verb.
    parser.add_argument(
        "--json",
        action="store_true",
        default=argparse.SUPPRESS,
        help="compact JSON output",
    )
    parser.add_argument(
        "--out", metavar="PATH", default=argparse.SUPPRESS, help="write output to PATH"
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=argparse.SUPPRESS,
        help="worker processes for survey",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abeliancft",
        description="Abelian number field calculators and batch surveys.",
    )
    _add_global_flags(parser)
    sub = parser.add_subparsers(dest="verb", required=True)

    p_field = sub.add_parser("field", help="report on one abelian field")
    _add_global_flags(p_field)
    p_field.add_argument("spec", help="m=..;gens=.. | quad:d=.. | cyclotomic:m=..")
    p_field.add_argument("--h", type=int, help="externally known class number")
    p_field.add_argument(
        "--unit-norm", type=int, choices=(1, -1), help="fundamental unit norm"
    )

    p_survey = sub.add_parser("survey", help="sweep fundamental discriminants")
    _add_global_flags(p_survey)
    p_survey.add_argument("--mode", choices=MODES, required=True)
    p_survey.add_argument("--min", type=int, required=True, dest="d_min")
    p_survey.add_argument("--max", type=int, required=True, dest="d_max")
    p_survey.add_argument("--format", choices=("csv", "jsonl"), default="csv")

    p_tbound = sub.add_parser("tbound", help="divisor bound t for a conductor")
    _add_global_flags(p_tbound)
    p_tbound.add_argument("--m", type=int, required=True)
    p_tbound.add_argument("--ell", type=int, help="prime for the torsion variant")

    p_cubic = sub.add_parser("cubic", help="x^3+cx+c family checks")
    _add_global_flags(p_cubic)
    p_cubic.add_argument("--c", type=int, required=True)
    p_cubic.add_argument("--h", type=int, help="class number of the sextic field")

    p_n1 = sub.add_parser("n1bound", help="class-number bound for the class field")
    _add_global_flags(p_n1)
    p_n1.add_argument("--n", type=int, required=True)
    p_n1.add_argument("--h", type=int, required=True)
    p_n1.add_argument("--m", type=int, required=True)
    p_n1.add_argument("--m1", type=int, required=True)
    p_n1.add_argument("--po-k", type=int, required=True, dest="po_k")
    p_n1.add_argument("--po-rel", type=int, required=True, dest="po_rel")

    p_aut = sub.add_parser("autorder", help="automorphism group order")
    _add_global_flags(p_aut)
    p_aut.add_argument("factors", type=int, nargs="+", help="cyclic factor list")

    return parser


def _emit(payload: dict, args) -> None:
    text = json.dumps(payload, indent=None if args.json else 2, sort_keys=False)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _run(args) -> int:
    if args.verb == "field":
        spec = cyclo.parse_field_spec(args.spec)
        report = _field_report(spec, args.h, args.unit_norm)
        report["input"] = args.spec
        _emit(report, args)
        return 0

    if args.verb == "survey":
        config = SurveyConfig(
            mode=args.mode,
            d_min=args.d_min,
            d_max=args.d_max,
            workers=args.workers,
            output_path=args.out,
            format=args.format,
        )
        if args.out:
            with open(args.out, "w") as fh:
                summary = run_survey(config, fh)
        else:
            summary = run_survey(config, sys.stdout)
        print(json.dumps(summary, indent=None if args.json else 2), file=sys.stderr)
        return 0

    if args.verb == "tbound":
        breakdown = t_bound(args.m)
        payload = {"schema": REPORT_SCHEMA, "m": args.m, "t_bound": breakdown.to_dict()}
        if args.ell is not None:
            payload["ell_certificate"] = t_bound_ell(args.m, args.ell).to_dict()
        _emit(payload, args)
        return 0

    if args.verb == "cubic":
        family = s3_family_check(args.c)
        payload = {
            "schema": REPORT_SCHEMA,
            "c": args.c,
            "family_certificate": family.to_dict(),
        }
        if args.h is not None:
            payload["assumed_class_number"] = args.h
            group = (
                FiniteAbelianGroup((args.h,)) if args.h > 1 else FiniteAbelianGroup()
            )
            tag = f"assumed h={args.h} (externally supplied, class group taken cyclic)"
            for key, cert in (
                ("pht2_certificate", pht2_check(args.h)),
                ("pht1_certificate", pht1_check(6, args.h, 3, 3, group)),
            ):
                payload[key] = cert.to_dict()
                payload[key]["assumptions"].append(tag)
        _emit(payload, args)
        return 0

    if args.verb == "n1bound":
        cert = n1_bound(args.n, args.h, args.m, args.m1, args.po_k, args.po_rel)
        _emit({"schema": REPORT_SCHEMA, "certificate": cert.to_dict()}, args)
        return 0

    if args.verb == "autorder":
        group = FiniteAbelianGroup(tuple(args.factors))
        _emit(
            {
                "schema": REPORT_SCHEMA,
                "invariant_factors": list(group.invariant_factors),
                "aut_order": aut_order(group),
            },
            args,
        )
        return 0

    raise AssertionError(f"unhandled verb {args.verb}")  # pragma: no cover


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    for name, default in (("json", False), ("out", None), ("workers", 1)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return _run(args)
    except BugTrap as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return 3
    except (AbelianCFTError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:  # pragma: no cover
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    console_main()
