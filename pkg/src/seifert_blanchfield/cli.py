"""Command-line driver.

Exit codes: 0 on success, 2 for malformed input (the error is printed as a
JSON object), 1 when the input is well formed but the mathematics fails
(a singular form, a module that is not a near-projection, ...).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize as ser
from .blanchfield import seifertize
from .campaign import run_roundtrip, selftest, summarize
from .errors import AlgebraError, InternalAssertion, MathematicalError, ValidationError
from .forms import cover_form, localize_form, rank_certificate, uncover
from .invariants import invariant_report, knot
from .laurent import set_degree_cap
from .rings import BaseRing
from .seifert import split_near_projection


def _eta_arg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"eta must be +1 or -1, not {text!r}") from None
    if v not in (1, -1):
        raise argparse.ArgumentTypeError(f"eta must be +1 or -1, not {text!r}")
    return v


def _ring_arg(text):
    try:
        return BaseRing.parse(text)
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _seed_arg(text):
    v = int(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", type=_ring_arg, default=BaseRing.parse("z"),
                        help="coefficient ring: z, q or fp:<p> (default z)")
    common.add_argument("--eta", type=_eta_arg, default=1, help="+1 or -1 (default +1)")
    common.add_argument("--in", dest="infile", help="input JSON file ('-' for stdin)")
    common.add_argument("--out", dest="outfile", help="write the result here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=_seed_arg, default=0)
    common.add_argument("--count", type=int, default=100)
    common.add_argument("--max-rank", type=int, default=4)
    common.add_argument("--degree-cap", type=int, default=None,
                        help="largest allowed degree span of a Laurent polynomial")
    common.add_argument("--knot", help="use a built-in knot (unknot, trefoil, figure-eight)")

    parser = argparse.ArgumentParser(prog="seifert-blanchfield",
                                     description="Seifert and Blanchfield forms over Z[z, z^-1]")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in [
        ("cover", "Seifert form -> Blanchfield form"),
        ("seifertize", "presentation -> Seifert module"),
        ("uncover", "Blanchfield form -> nonsingular Seifert form"),
        ("decompose", "split a near-projection module"),
        ("invariants", "Alexander polynomial, signature, determinant"),
        ("localize", "the form (1 - z) theta over the localization"),
        ("roundtrip", "random uncover(cover(F)) campaign"),
        ("selftest", "run the built-in property suites"),
    ]:
        sub.add_parser(name, parents=[common], help=text)
    return parser


def _read_input(args):
    if args.infile is None or args.infile == "-":
        if args.infile is None and sys.stdin.isatty():
            raise ValidationError("no input: pass --in <file> (or --knot where supported)")
        text = sys.stdin.read()
    else:
        try:
            with open(args.infile, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ValidationError(f"cannot read {args.infile}: {exc.strerror}") from None
    return ser.loads(text)


def _form(args):
    if args.knot:
        return knot(args.knot).form()
    return ser.form_from_json(_read_input(args), args.ring, args.eta)


def _text_lines(obj, indent=""):
    lines = []
    for key in sorted(obj):
        val = obj[key]
        if isinstance(val, dict) and "entries" in val:
            rows = [[x["text"] if isinstance(x, dict) and "text" in x else x for x in r]
                    for r in val["entries"]]
            lines.append(f"{indent}{key}: {rows}")
        elif isinstance(val, dict) and "coeffs" in val:
            lines.append(f"{indent}{key}: {val['coeffs']}")
        elif isinstance(val, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_text_lines(val, indent + "  "))
        else:
            lines.append(f"{indent}{key}: {val}")
    return lines


def _emit(args, obj):
    if args.format == "json":
        text = ser.dumps(obj) + "\n"
    else:
        text = "\n".join(_text_lines(obj)) + "\n"
    if args.outfile:
        with open(args.outfile, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_cover(args):
    return ser.blanchfield_form_to_json(cover_form(_form(args)))


def cmd_seifertize(args):
    m = seifertize(ser.presentation_from_json(_read_input(args), args.ring))
    return ser.module_to_json(m)


def cmd_uncover(args):
    b = ser.blanchfield_form_from_json(_read_input(args), args.ring, args.eta)
    form, trace = uncover(b)
    cert = rank_certificate(trace, module=b.module)
    summary = {
        "shortcut": trace.shortcut,
        "k": trace.k,
        "twist": trace.twist,
        "input_rank": trace.input_rank,
        "output_rank": form.rank,
        "rank_certificate": "skipped" if cert.skipped else cert.holds,
        "isometry_found": trace.candidate_ok,
        "notes": list(trace.notes),
    }
    return {"form": ser.form_to_json(form), "trace": summary}


def cmd_decompose(args):
    m = ser.module_from_json(_read_input(args), args.ring)
    split = split_near_projection(m)
    return {
        "k": split.k,
        "projector": ser.matrix_to_json(split.projector),
        "plus": ser.module_to_json(split.plus),
        "minus": ser.module_to_json(split.minus),
    }


def cmd_invariants(args):
    return ser.report_to_json(invariant_report(_form(args)))


def cmd_localize(args):
    loc = localize_form(_form(args))
    entries = [[{"num": ser.poly_to_json(x.num), "a": x.a, "b": x.b, "text": str(x)}
                for x in row] for row in loc.matrix]
    return {"rank": loc.rank, "eta": loc.eta, "matrix": {"rows": loc.rank, "cols": loc.rank,
                                                          "entries": entries}}


def cmd_roundtrip(args):
    results = run_roundtrip(args.seed, args.count, args.max_rank)
    summary = summarize(results)
    summary["seed"] = args.seed
    return summary, 0 if summary["matches"] == summary["count"] else 1


def cmd_selftest(args):
    res = selftest(args.seed)
    seconds = res.pop("_seconds")
    passed = all(p == t for p, t in res.values())
    out = {name: f"{p}/{t}" for name, (p, t) in res.items()}
    out["passed"] = passed
    out["seconds"] = round(seconds, 3)
    return out, 0 if passed else 1


COMMANDS = {
    "cover": cmd_cover,
    "seifertize": cmd_seifertize,
    "uncover": cmd_uncover,
    "decompose": cmd_decompose,
    "invariants": cmd_invariants,
    "localize": cmd_localize,
    "roundtrip": cmd_roundtrip,
    "selftest": cmd_selftest,
}


def _error(args, exc, kind):
    obj = {"error": {"kind": kind, "type": type(exc).__name__, "message": str(exc)}}
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.degree_cap is not None:
        set_degree_cap(args.degree_cap)
    try:
        result = COMMANDS[args.command](args)
        code = 0
        if isinstance(result, tuple):
            result, code = result
        _emit(args, result)
        return code
    except ValidationError as exc:
        _error(args, exc, "validation")
        return 2
    except (MathematicalError, InternalAssertion) as exc:
        _error(args, exc, "mathematical")
        return 1
    except AlgebraError as exc:
        _error(args, exc, "mathematical")
        return 1


if __name__ == "__main__":
    sys.exit(main())
