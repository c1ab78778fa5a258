"""Command-line entry point: ``resolvents <subcommand> [flags]``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .errors import PointNotOnCurve, ResolventError, SingularCurve
from .polyring import format_poly

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction | int:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    return int(value) if value.denominator == 1 else value


def _coeff_list(text: str) -> list:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected four comma-separated coefficients a3,a2,a1,a0")
    return [_rational(p) for p in parts]


def _emit(args, text_lines: list, payload: dict):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(text_lines))


# ---------------------------------------------------------------------------
# subcommands

def cmd_resolvent_cubic(args) -> int:
    from .resolvent import resolvent_cubic

    rep = resolvent_cubic(args.coeffs)
    payload = rep.to_json()
    payload["extra"].pop("in_roots", None)
    _emit(args, [format_poly(rep.resolvent)], payload)
    return EXIT_OK


def _curve(args):
    from .elliptic import Curve

    if (args.a is None) != (args.b is None):
        raise UsageError("give both --a and --b, or neither")
    return None if args.a is None else Curve(args.a, args.b)


def cmd_adelmann(args) -> int:
    from .elliptic import adelmann_pipeline

    curve = _curve(args)
    rep = adelmann_pipeline(curve)
    lines = [f"R_GP(Y) = {format_poly(rep.extra['R_GP'])}", f"B(Y) = {format_poly(rep.resolvent)}"]
    if curve is None:
        lines.append("Delta = -16*(4*a^3 + 27*b^2)")
    else:
        lines.append(f"Delta = {curve.Delta}")
    _emit(args, lines, rep.to_json())
    return EXIT_OK


def _point(args):
    from .elliptic import point_new, point_through, Curve

    given = [v is not None for v in (args.a, args.z, args.w)]
    if not any(given) and args.b is None:
        return None
    if not all(given):
        raise UsageError("a point needs --a, --z and --w (--b is derived when omitted)")
    if args.b is None:
        return point_through(args.a, args.z, args.w)
    return point_new(Curve(args.a, args.b), args.z, args.w)


def cmd_holq8(args) -> int:
    from .elliptic import holq8_pipeline
    from .elliptic.pipelines import octic_is_squarefree, oracle_confirm

    point = _point(args)
    res = holq8_pipeline(point, fallback=args.fallback)
    failed = False
    curves = args.curves
    if curves and point is not None and not octic_is_squarefree(point):
        curves = 0
        for rep in res:
            rep.notes.append("octic has repeated roots at this point; numeric check skipped")
    if curves:
        for rep in res:
            try:
                oracle_confirm(rep, point, curves)
            except ResolventError:
                failed = True
    lines = [f"{rep.name}(x) = {format_poly(rep.resolvent)}    [{rep.status}; {rep.engine}]" for rep in res]
    if point is None:
        lines.append("d = 4*a^3 + 27*b^2; w^2 has been reduced to z^3 + a*z + b")
    payload = {rep.name: rep.to_json() for rep in res}
    if point is not None:
        payload["point"] = point.to_json()
    _emit(args, lines, payload)
    return EXIT_FAILED if failed else EXIT_OK


def cmd_divpoly(args) -> int:
    from .elliptic import division_poly

    if args.n < -1:
        raise UsageError("--n must be at least -1")
    A = division_poly(args.n)
    _emit(args, [format_poly(A)], {"n": args.n, "A": format_poly(A)})
    return EXIT_OK


def cmd_t4(args) -> int:
    from .elliptic import torsion_field_poly
    from .elliptic.divpoly import CONVENTIONS

    curve = _curve(args)
    T = torsion_field_poly(4, curve, convention=args.convention)
    payload = {"T4": format_poly(T), "convention": args.convention, "quadratic": CONVENTIONS[args.convention],
               "monic": True}
    _emit(args, [format_poly(T)], payload)
    return EXIT_OK


def cmd_group_info(args) -> int:
    from .permgroup.catalog import group_facts

    facts = group_facts(args.which)
    lines = []
    for name, f in facts.items():
        lines.append(f"{name}:")
        lines.append(f"  |G| = {f['G_order']}, |H| = {f['H_order']}, |F| = {f['F_order']}, [G:F] = {f['index']}")
        lines.append(f"  H normal: {f['H_normal']}; H abelian: {f['H_abelian']}; involutions in H: {f['H_involutions']}")
        lines.append(f"  G/H isomorphic to {f['quotient']}: {f['quotient_isomorphic']}")
        lines.append(f"  H inside F: {f['H_in_F']}; Stab_G(P) = F: {f['stabilizer_is_F']}")
        lines.append(f"  transversal {' '.join(f['transversal'])}: left {f['left_transversal']}, "
                     f"right {f['right_transversal']}")
    _emit(args, lines, facts)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .suite import GOLDEN_VERSION, run_suite

    if not (Path(args.golden_dir) / GOLDEN_VERSION).is_dir():
        raise UsageError(f"no golden files under {args.golden_dir}/{GOLDEN_VERSION}")
    if args.precision is not None and args.precision < 64:
        raise UsageError("--precision must be at least 64 bits")
    result = run_suite(args.golden_dir, curves=args.curves, precision=args.precision)
    summary = result.to_json()
    if args.json:
        print(json.dumps(summary, indent=2, sort_keys=True))
    else:
        for c in result.checks:
            print(f"{'PASS' if c.passed else 'FAIL'} {c.name}{'  ' + c.detail if c.detail else ''}")
        short = {k: summary[k] for k in ("pass", "total", "failed")}
        print(json.dumps(short, sort_keys=True))
    return EXIT_OK if result.passed else EXIT_FAILED


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--golden-dir", default="golden", help="golden file directory (default ./golden)")

    parser = argparse.ArgumentParser(prog="resolvents", description="Exact resolvent polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resolvent-cubic", parents=[common], help="resolvent cubic of a quartic")
    p.add_argument("--coeffs", type=_coeff_list, help="a3,a2,a1,a0 of x^4 + a3 x^3 + a2 x^2 + a1 x + a0")
    p.set_defaults(func=cmd_resolvent_cubic)

    p = sub.add_parser("adelmann", parents=[common], help="S4 resolvent of the 4-division sextic")
    p.add_argument("--a", type=_rational)
    p.add_argument("--b", type=_rational)
    p.set_defaults(func=cmd_adelmann)

    p = sub.add_parser("holq8", parents=[common], help="the three Hol(Q8) resolvent quartics")
    for name in ("a", "b", "z", "w"):
        p.add_argument(f"--{name}", type=_rational)
    p.add_argument("--curves", type=int, default=2, help="sample curves for the numeric check (0 to skip)")
    p.add_argument("--fallback", choices=("ansatz", "v35"), default="ansatz")
    p.set_defaults(func=cmd_holq8)

    p = sub.add_parser("divpoly", parents=[common], help="division polynomial A_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_divpoly)

    p = sub.add_parser("t4", parents=[common], help="4-torsion field polynomial T_4")
    p.add_argument("--a", type=_rational)
    p.add_argument("--b", type=_rational)
    p.add_argument("--convention", choices=("curve", "printed"), default="curve")
    p.set_defaults(func=cmd_t4)

    p = sub.add_parser("group-info", parents=[common], help="group-theoretic facts behind a pipeline")
    p.add_argument("--which", choices=("warmup", "adelmann", "holq8"), required=True)
    p.set_defaults(func=cmd_group_info)

    p = sub.add_parser("verify", parents=[common], help="golden files plus numeric oracle")
    p.add_argument("--precision", type=int, help="working precision in bits")
    p.add_argument("--curves", type=int, default=5, help="number of sample curves")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, SingularCurve, PointNotOnCurve) as exc:
        print(f"resolvents {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResolventError as exc:
        print(f"resolvents {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
