"""Command-line front end.

Subcommands: `compute` prints one polynomial by any of the four routes,
`expand` prints basis coefficients, `verify` runs a seeded property suite,
`super` evaluates the two-alphabet realisation, and `stable` evaluates the
any-d expansion with an optional determinant cross-check.

Exit codes: 0 on success or a verified identity, 1 when an identity is
violated (counterexamples are printed), 2 for usage or contract errors, and
3 for mathematical failures (poles, inconsistent interpolation, inexact
division).  Identical invocations, including the seed, produce byte-identical
output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .coeffseq import PoleError, load_coeffseq
from .engine import GschurContext
from .exactalg import (
    DivisionNotExactError,
    MultiPoly,
    format_poly_text,
    poly_to_json_terms,
)
from .partitions import format_partition, parse_partition
from .presets import fh_character_det, make
from .stable import (
    InterpolationInconsistentError,
    SuperAlphabet,
    gschur_function,
    jt_infinite_check,
    schur_expand_at,
    super_schur,
)
from .verify import PROPERTY_NAMES, run_property

PRESET_NAMES = ("schur", "so_odd", "so_even", "sp", "factorial", "bc_jacobi")


def _latex_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"\\frac{{{value.numerator}}}{{{value.denominator}}}"


def format_poly_latex(poly: MultiPoly, names=None) -> str:
    """LaTeX rendering with explicit subscripted tokens, deterministic order."""
    if poly.is_zero:
        return "0"
    if names is None:
        names = [f"x_{{{i + 1}}}" for i in range(poly.arity)]
    pieces = []
    for pos, (e, c) in enumerate(poly.sorted_terms()):
        mono = "".join(
            f"{names[i]}^{{{k}}}" if k > 1 else names[i]
            for i, k in enumerate(e)
            if k
        )
        mag = abs(c)
        if not mono:
            body = _latex_fraction(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_latex_fraction(mag)} {mono}"
        if pos == 0:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(pieces)


def _render_poly(poly: MultiPoly, fmt: str, names=None, latex_names=None) -> str:
    if fmt == "text":
        return format_poly_text(poly, names)
    if fmt == "json":
        return json.dumps(poly_to_json_terms(poly))
    return format_poly_latex(poly, latex_names)


def _render_expansion(expansion, fmt: str) -> str:
    items = sorted(expansion.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    if fmt == "json":
        return json.dumps(
            [{"partition": list(mu), "c": str(c)} for mu, c in items]
        )
    if fmt == "latex":
        pieces = []
        for pos, (mu, c) in enumerate(items):
            body = f"{_latex_fraction(abs(c))} S_{{({format_partition(mu)})}}"
            if pos == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(pieces) if pieces else "0"
    lines = [f"{format_partition(mu) or 'empty'}: {c}" for mu, c in items]
    return "\n".join(lines) if lines else "empty expansion"


def _add_source_options(sub: argparse.ArgumentParser) -> None:
    group = sub.add_argument_group("coefficient sequence")
    group.add_argument("--preset", choices=PRESET_NAMES, help="built-in sequence")
    group.add_argument("--seq-file", help="JSON file with a and b tables")
    group.add_argument("--p", help="bc_jacobi parameter p (rational, e.g. 1 or 1/2)")
    group.add_argument("--q", help="bc_jacobi parameter q (rational)")
    group.add_argument(
        "--a-table",
        dest="a_table",
        help="comma-separated rationals for the factorial preset",
    )
    group.add_argument(
        "--probe-upto",
        dest="probe_upto",
        type=int,
        default=8,
        help="index range probed for bc_jacobi poles (default 8)",
    )


def _sequence_from_args(args):
    if bool(args.preset) == bool(args.seq_file):
        raise ValueError("give exactly one of --preset and --seq-file")
    if args.seq_file:
        return load_coeffseq(args.seq_file)
    params = {"probe_upto": args.probe_upto}
    if args.p is not None:
        params["p"] = Fraction(args.p)
    if args.q is not None:
        params["q"] = Fraction(args.q)
    if args.a_table is not None:
        params["a_table"] = [
            Fraction(tok.strip()) for tok in args.a_table.split(",") if tok.strip()
        ]
    return make(args.preset, **params)


def _cmd_compute(args) -> int:
    seq = _sequence_from_args(args)
    lam = parse_partition(args.lam)
    ctx = GschurContext(args.n, seq)
    if args.method == "bialternant":
        poly = ctx.bialternant(lam)
    elif args.method == "jt":
        poly = ctx.jacobi_trudi(lam)
    elif args.method == "giambelli":
        poly = ctx.giambelli(lam)
    else:
        poly = fh_character_det(ctx, lam)
    print(_render_poly(poly, args.format))
    return 0


def _cmd_expand(args) -> int:
    seq = _sequence_from_args(args)
    lam = parse_partition(args.lam)
    if args.basis == "monomial":
        expansion = GschurContext(args.n, seq).monomial_expansion(lam)
    else:
        expansion = schur_expand_at(lam, seq, args.n)
    print(_render_expansion(expansion, args.format))
    return 0


def _cmd_verify(args) -> int:
    report = run_property(
        args.property,
        trials=args.trials,
        seed=args.seed,
        max_weight=args.max_weight,
        max_vars=args.max_vars,
    )
    print(
        f"property {report.name}: {report.checks} checks, "
        f"{len(report.failures)} failures"
    )
    if report.failures:
        for failure in report.failures:
            print(json.dumps(failure))
        return 1
    return 0


def _cmd_super(args) -> int:
    seq = _sequence_from_args(args)
    lam = parse_partition(args.lam)
    alphabet = SuperAlphabet(args.n, args.m)
    poly = super_schur(lam, seq, alphabet, args.degree_bound)
    names = [f"x{i + 1}" for i in range(args.n)] + [
        f"y{j + 1}" for j in range(args.m)
    ]
    latex_names = [f"x_{{{i + 1}}}" for i in range(args.n)] + [
        f"y_{{{j + 1}}}" for j in range(args.m)
    ]
    print(_render_poly(poly, args.format, names=names, latex_names=latex_names))
    return 0


def _cmd_stable(args) -> int:
    seq = _sequence_from_args(args)
    lam = parse_partition(args.lam)
    d = Fraction(args.d)
    expansion = gschur_function(lam, seq, d, args.degree_bound)
    print(_render_expansion(expansion, args.format))
    if args.jt_check:
        ok = jt_infinite_check(lam, seq, d, args.n_eval, args.degree_bound)
        if not ok:
            print(
                json.dumps(
                    {
                        "property": "jt-infinite",
                        "lambda": list(lam),
                        "d": str(d),
                        "n_eval": args.n_eval,
                    }
                )
            )
            return 1
        print(f"jt-infinite holds at d = {d} (truncated to {args.n_eval} variables)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gschur",
        description="Generalized Schur polynomials from three-term recurrences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="print one polynomial")
    _add_source_options(compute)
    compute.add_argument("--n", type=int, required=True, help="variable count")
    compute.add_argument(
        "--lambda", dest="lam", default="", help="partition, e.g. 3,1 ('' for empty)"
    )
    compute.add_argument(
        "--method",
        choices=("bialternant", "jt", "giambelli", "fh"),
        default="bialternant",
    )
    compute.add_argument(
        "--format", choices=("text", "json", "latex"), default="text"
    )
    compute.set_defaults(func=_cmd_compute)

    expand = sub.add_parser("expand", help="print basis coefficients")
    _add_source_options(expand)
    expand.add_argument("--n", type=int, required=True)
    expand.add_argument("--lambda", dest="lam", default="")
    expand.add_argument(
        "--basis",
        choices=("monomial", "schur"),
        default="monomial",
        help="monomial symmetric functions or classical Schur polynomials",
    )
    expand.add_argument(
        "--format", choices=("text", "json", "latex"), default="text"
    )
    expand.set_defaults(func=_cmd_expand)

    verify = sub.add_parser("verify", help="run a seeded property suite")
    verify.add_argument(
        "--property", required=True, choices=PROPERTY_NAMES
    )
    verify.add_argument("--trials", type=int, default=5)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--max-weight", dest="max_weight", type=int, default=5)
    verify.add_argument("--max-vars", dest="max_vars", type=int, default=3)
    verify.set_defaults(func=_cmd_verify)

    sup = sub.add_parser("super", help="two-alphabet realisation")
    _add_source_options(sup)
    sup.add_argument("--n", type=int, required=True, help="x-variable count")
    sup.add_argument("--m", type=int, required=True, help="y-variable count")
    sup.add_argument("--lambda", dest="lam", default="")
    sup.add_argument(
        "--degree-bound", dest="degree_bound", type=int, default=4
    )
    sup.add_argument("--format", choices=("text", "json", "latex"), default="text")
    sup.set_defaults(func=_cmd_super)

    stable = sub.add_parser("stable", help="any-d expansion on classical Schurs")
    _add_source_options(stable)
    stable.add_argument(
        "--d", required=True, help="parameter value (rational, e.g. 7/2)"
    )
    stable.add_argument("--lambda", dest="lam", default="")
    stable.add_argument(
        "--degree-bound", dest="degree_bound", type=int, default=4
    )
    stable.add_argument(
        "--jt-check",
        dest="jt_check",
        action="store_true",
        help="also check the parameterised determinant identity",
    )
    stable.add_argument(
        "--n-eval",
        dest="n_eval",
        type=int,
        default=3,
        help="variables used to compare both sides of --jt-check",
    )
    stable.add_argument("--format", choices=("text", "json", "latex"), default="text")
    stable.set_defaults(func=_cmd_stable)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (PoleError, InterpolationInconsistentError, DivisionNotExactError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
