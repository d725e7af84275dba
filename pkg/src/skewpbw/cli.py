"""Command-line front end: ``spbw <command> <file> [args]``.

Exit codes: 0 pass/certified, 1 parse error, 2 failed validation,
3 refuted, 4 inconclusive bounds, 5 precondition violated.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import gradings, koszul
from .classify import classify, constant_term
from .errors import InconclusiveError, ParseError, PreconditionError, ValidationError
from .fileformat import eval_element, format_presentation, load_presentation
from .skewcore import format_element, validate_presentation

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_REFUTED, EXIT_INCONCLUSIVE, EXIT_PRECONDITION = range(6)


def _emit(obj, as_json=True):
    if as_json:
        print(json.dumps(obj, indent=2, ensure_ascii=False))
    else:
        print(obj)


def _load(args):
    P = load_presentation(args.file)
    report = validate_presentation(P, seed=args.seed)
    if not report.ok:
        raise ValidationError(report.errors[0], report)
    P._derived["validated"] = report
    return P, report


def _bounds(args, default_h=4):
    H = args.H if args.H is not None else default_h
    D = args.D if args.D is not None else H + 4
    if args.bounds:
        H, D = args.bounds
    return H, D


def cmd_validate(args):
    P = load_presentation(args.file)
    report = validate_presentation(P, seed=args.seed)
    if args.json:
        _emit(report.to_dict())
    elif report.ok:
        print(f"ok: {P!r}")
    if not report.ok:
        print("validation failed: " + "; ".join(report.errors), file=sys.stderr)
        if report.witness:
            print(f"witness: {json.dumps(report.witness, ensure_ascii=False)}", file=sys.stderr)
        return EXIT_INVALID
    for w in report.warnings:
        print(f"warning: {w}", file=sys.stderr)
    return EXIT_OK


def cmd_classify(args):
    P, _ = _load(args)
    _emit(classify(P).to_dict())
    return EXIT_OK


def cmd_nf(args):
    P, _ = _load(args)
    a = eval_element(P, args.expr)
    _emit({"normal_form": format_element(a)} if args.json else format_element(a), args.json)
    return EXIT_OK


def cmd_mul(args):
    P, _ = _load(args)
    a, b = eval_element(P, args.a), eval_element(P, args.b)
    out = format_element(a * b)
    _emit({"product": out} if args.json else out, args.json)
    return EXIT_OK


def cmd_hilbert(args):
    P, _ = _load(args)
    g = gradings.grading_by_name(P, args.grading)
    bounds = (args.top, args.aux if args.aux is not None else 0)
    dims = gradings.grading_dims(P, g, bounds)
    _emit({"grading": g.to_dict(), "dims": dims.to_json(), "homogeneity": gradings.homogeneity_check(P, g).to_dict()})
    return EXIT_OK


def cmd_gr(args):
    P, _ = _load(args)
    Q = gradings.associated_quasicommutative(P)
    text = format_presentation(Q)
    _emit({"presentation": text, "classification": classify(Q).to_dict()} if args.json else text.rstrip(), args.json)
    return EXIT_OK


def cmd_aug(args):
    P, _ = _load(args)
    rep = classify(P)
    _, is_hom = constant_term(P, P.zero)
    out = {
        "r_augmented": rep.r_augmented,
        "augmented_over_K": rep.augmented_over_K,
        "constant_term_is_ring_hom": is_hom,
        "augmentation_ideal": "sum of R x^alpha over |alpha| >= 1" if rep.r_augmented else None,
    }
    _emit(out)
    return EXIT_OK if rep.r_augmented else EXIT_REFUTED


def cmd_koszul(args):
    P, _ = _load(args)
    H, D = _bounds(args)
    cert = koszul.koszul_certificate(P, args.mode, H, D, side=args.side)
    _emit(cert.to_dict())
    return EXIT_OK if cert.certified else EXIT_REFUTED


def cmd_tensor_check(args):
    P, _ = _load(args)
    rep = koszul.tensor_resolution_check(P, args.H, (args.J, args.X))
    _emit(rep.to_dict())
    return EXIT_OK if rep.verified else EXIT_REFUTED


def cmd_abar(args):
    P, _ = _load(args)
    H, D = _bounds(args)
    rep = koszul.abar_equivalence_check(P, H, D)
    _emit(rep.to_dict())
    return EXIT_OK if rep.agree else EXIT_REFUTED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output where it is optional")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    parser = argparse.ArgumentParser(prog="spbw", description="Skew PBW extension toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("file")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check a presentation file")
    add("classify", cmd_classify, "report sub-class membership")
    p = add("nf", cmd_nf, "normal form of an expression")
    p.add_argument("expr")
    p = add("mul", cmd_mul, "normal form of a product")
    p.add_argument("a")
    p.add_argument("b")
    p = add("hilbert", cmd_hilbert, "dimensions of graded components")
    p.add_argument("grading", choices=["standard", "augmentation", "base-induced"])
    p.add_argument("top", type=int, nargs="?", default=4)
    p.add_argument("aux", type=int, nargs="?")
    add("gr", cmd_gr, "associated quasi-commutative presentation")
    add("aug", cmd_aug, "augmentation structure")
    for name, func in (("koszul", cmd_koszul), ("abar", cmd_abar)):
        p = add(name, func, "Koszulity certificate" if name == "koszul" else "compare A with its radical quotient")
        if name == "koszul":
            p.add_argument("mode", choices=list(koszul.MODES))
        p.add_argument("H", type=int, nargs="?")
        p.add_argument("D", type=int, nargs="?")
        p.add_argument("--bounds", type=int, nargs=2, metavar=("H", "D"))
        if name == "koszul":
            p.add_argument("--side", choices=["left", "right"], default="left")
    p = add("tensor-check", cmd_tensor_check, "audit the tensored base resolution")
    p.add_argument("H", type=int, nargs="?", default=2)
    p.add_argument("J", type=int, nargs="?", default=4)
    p.add_argument("X", type=int, nargs="?", default=3)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # usage errors count as parse errors; --help exits 0
        return EXIT_OK if exc.code in (0, None) else EXIT_PARSE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"validation failed: {exc}", file=sys.stderr)
        if exc.report is not None and exc.report.witness:
            print(f"witness: {json.dumps(exc.report.witness, ensure_ascii=False)}", file=sys.stderr)
        return EXIT_INVALID
    except InconclusiveError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
