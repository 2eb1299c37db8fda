"""Command-line front end.

Exit codes: 0 success/true, 1 false or negative verdict, 2 usage error,
3 parse error, 4 precondition violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import harness, muntz, operators, spaces, verify
from .multiindex import DimensionError, LowerSet
from .polynomial import ParseError, format_poly, parse

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3, 4


class InputError(ValueError):
    """Malformed command-line value (maps to the parse-error exit code)."""


def read_arg(value: str) -> str:
    """Inline text, or the contents of a file when prefixed with '@'."""
    if value.startswith("@"):
        with open(value[1:], encoding="utf-8") as fh:
            return fh.read()
    return value


def parse_rationals(text: str) -> tuple:
    body = text.strip().strip("()[]")
    if not body:
        raise InputError(f"empty vector {text!r}")
    out = []
    for pos, part in enumerate(body.split(",")):
        part = part.strip().strip('"')
        try:
            out.append(Fraction(part))
        except (ValueError, ZeroDivisionError):
            raise InputError(f"bad rational {part!r} at component {pos} of {text!r}") from None
        if "." in part or "e" in part.lower():
            raise InputError(f"decimal {part!r} at component {pos} of {text!r}; use a/b")
    return tuple(out)


def parse_multiindex(text: str) -> tuple:
    vals = parse_rationals(text)
    if any(v.denominator != 1 or v < 0 for v in vals):
        raise InputError(f"multi-index entries must be naturals: {text!r}")
    return tuple(int(v) for v in vals)


def parse_lowerset(text: str) -> LowerSet:
    try:
        return LowerSet.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"lower set is not valid JSON at position {exc.pos}: {exc.msg}") from None
    except (ValueError, TypeError) as exc:
        raise InputError(f"malformed lower set: {exc}") from None


def _dim(*candidates: Optional[int]) -> int:
    return max(c for c in candidates if c is not None)


def cmd_op(args) -> int:
    raw = read_arg(args.p)
    y = parse_rationals(args.y) if args.y else None
    alpha = parse_multiindex(args.alpha) if args.alpha else None
    P_text = read_arg(args.operator) if args.operator else None
    d = args.d or _dim(
        parse(raw).d,
        len(y) if y else None,
        len(alpha) if alpha else None,
        parse(P_text).d if P_text else None,
    )
    p = parse(raw, d)
    kind = args.apply
    if kind in ("translate", "dilate"):
        if y is None:
            raise InputError(f"--y is required for {kind}")
        out = operators.translate(p, y) if kind == "translate" else operators.dilate(p, y)
    elif kind in ("partial", "delta"):
        if alpha is None:
            raise InputError(f"--alpha is required for {kind}")
        out = operators.partial(p, alpha) if kind == "partial" else operators.difference(p, alpha)
    else:
        if P_text is None:
            raise InputError("--operator is required for polyop")
        out = operators.apply_operator(parse(P_text, d), p, operators.OperatorMode(args.mode))
    print(format_poly(out))
    return EXIT_OK


def cmd_orbit(args) -> int:
    raw = read_arg(args.p)
    p = parse(raw, args.d or parse(raw).d)
    if args.kind == "tausigma":
        print(spaces.tausigma_orbit(p).dumps())
    else:
        V = spaces.tau_orbit(p) if args.kind == "tau" else spaces.sigma_orbit(p)
        sys.stdout.write(V.dumps())
    return EXIT_OK


def cmd_member(args) -> int:
    omega = parse_lowerset(read_arg(args.omega))
    p = parse(read_arg(args.p), omega.d)
    m = spaces.lowerset_member(p, omega)
    if m.member:
        print("true")
        return EXIT_OK
    print("false")
    print("witness: " + json.dumps(list(m.witness), separators=(",", ":")))
    return EXIT_FALSE


def cmd_closure(args) -> int:
    try:
        scenario = harness.load_scenario(read_arg(args.scenario))
    except json.JSONDecodeError as exc:
        raise InputError(f"scenario is not valid JSON at position {exc.pos}: {exc.msg}") from None
    except (ValueError, TypeError) as exc:
        raise InputError(f"malformed scenario: {exc}") from None
    verdict = scenario.run()
    print(verdict.dumps())
    return EXIT_OK if verdict.member else EXIT_FALSE


def cmd_invariance(args) -> int:
    path = args.space[1:] if args.space.startswith("@") else args.space
    with open(path, encoding="utf-8") as fh:
        V = spaces.PolySpace.loads(fh.read(), args.d)
    check = {
        "translation": spaces.is_translation_invariant,
        "dilation": spaces.is_dilation_invariant,
        "tdi": spaces.is_tdi,
    }[args.kind]
    ok = check(V)
    print("true" if ok else "false")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_verify(args) -> int:
    names = verify.SUITES if args.suite == "all" else (args.suite,)
    results = [
        verify.run_suite(n, args.seed, args.trials, args.d, args.deg, args.height) for n in names
    ]
    d = "cycle" if args.d is None else args.d
    header = (
        f"verify suite={args.suite} seed={args.seed} trials={args.trials} "
        f"d={d} deg={args.deg} height={args.height}"
    )
    sys.stdout.write(verify.report(results, header))
    return EXIT_OK if all(r.ok for r in results) else EXIT_FALSE


def cmd_muntz(args) -> int:
    bounds = [int(b) for b in parse_multiindex(args.bounds)]
    reports = muntz.run_demo(args.target, bounds, args.grid)
    sys.stdout.write(muntz.format_table(reports))
    return EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tdipoly",
        description="Exact operator calculus and invariant subspaces of multivariate polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    op = sub.add_parser("op", help="apply an operator to a polynomial")
    op.add_argument("--apply", required=True, choices=["translate", "dilate", "partial", "delta", "polyop"])
    op.add_argument("-p", required=True, help="polynomial (or @file)")
    op.add_argument("--y", help="point, e.g. 1,1/2")
    op.add_argument("--alpha", help="multi-index, e.g. 1,0")
    op.add_argument("--operator", help="polynomial P for P(d) or P(Delta)")
    op.add_argument("--mode", choices=["d", "diff"], default="d")
    op.add_argument("--d", type=_positive, help="number of variables")
    op.set_defaults(func=cmd_op)

    orbit = sub.add_parser("orbit", help="invariant hull of a polynomial")
    orbit.add_argument("--kind", required=True, choices=["tau", "sigma", "tausigma"])
    orbit.add_argument("-p", required=True)
    orbit.add_argument("--d", type=_positive)
    orbit.set_defaults(func=cmd_orbit)

    member = sub.add_parser("member", help="is the support of p inside a lower set")
    member.add_argument("-p", required=True)
    member.add_argument("--omega", required=True, help="lower set JSON (or @file)")
    member.set_defaults(func=cmd_member)

    closure = sub.add_parser("closure", help="run a closure scenario file")
    closure.add_argument("--scenario", required=True, help="scenario file (or inline JSON)")
    closure.set_defaults(func=cmd_closure)

    inv = sub.add_parser("invariance", help="invariance predicates on a spanned space")
    inv.add_argument("--space", required=True, help="basis file, one polynomial per line")
    inv.add_argument("--kind", required=True, choices=["translation", "dilation", "tdi"])
    inv.add_argument("--d", type=_positive)
    inv.set_defaults(func=cmd_invariance)

    ver = sub.add_parser("verify", help="seeded oracle equivalence suites")
    ver.add_argument("--suite", required=True, choices=[*verify.SUITES, "all"])
    ver.add_argument("--seed", type=int, required=True)
    ver.add_argument("--trials", type=_positive, default=12)
    ver.add_argument("--d", type=_positive)
    ver.add_argument("--deg", type=int, default=4)
    ver.add_argument("--height", type=_positive, default=9)
    ver.set_defaults(func=cmd_verify)

    mz = sub.add_parser("muntz", help="least-squares lacunary approximation demo")
    mz.add_argument("--target", type=int, default=8)
    mz.add_argument("--bounds", default="10,30,100")
    mz.add_argument("--grid", type=int, default=512)
    mz.set_defaults(func=cmd_muntz)
    return parser


def _scenario_arg(args) -> None:
    # --scenario takes a path; '@path' and inline JSON are accepted too
    s = args.scenario
    if not s.startswith("@") and not s.lstrip().startswith("{"):
        args.scenario = "@" + s


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.command == "closure":
        _scenario_arg(args)
    try:
        return args.func(args)
    except (ParseError, InputError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, DimensionError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
