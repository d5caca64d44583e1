"""Command-line front end.

Exit codes: 0 success/verified, 1 negative math verdict, 2 usage or
parameter error, 3 internal assertion (a theorem check failed).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .construction import construct, cross_section_count, cross_section_monomials, verify_absorption
from .errors import IdealpowError, ParameterError, ParseError, TheoremViolationError
from .ioformat import emit_file, parse_file
from .monomial import DEFAULT_ORACLE_CAP, format_monomial, power
from .plots import render_staircase_ascii, render_staircase_svg, render_vgrid_ascii, render_vgrid_svg
from .selftest import run_suite
from .tiny_squares import VERIFIED_NINE, family_ideal, normalize, verify_tiny_square

EXIT_OK = 0
EXIT_UNVERIFIED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _oracle_cap(args) -> int:
    if getattr(args, "oracle_cap", None) is not None:
        return args.oracle_cap
    env = os.environ.get("IDEALPOW_ORACLE_CAP")
    return int(env) if env else DEFAULT_ORACLE_CAP


def _print_gens(I, out=sys.stdout):
    for g in I.gens:
        print(" ".join(str(e) for e in g.exps) + f"  # {format_monomial(g)}", file=out)


def cmd_power(args) -> int:
    I = parse_file(args.ideal_file)
    R = power(I, args.exponent)
    if args.json:
        print(json.dumps({
            "nvars": R.arity,
            "exponent": args.exponent,
            "gens": [list(g.exps) for g in R.gens],
            "count": len(R),
        }))
    else:
        _print_gens(R)
        print(f"|G(I^{args.exponent})| = {len(R)}")
    return EXIT_OK


def cmd_construct(args) -> int:
    rep = construct(args.nvars, args.depth, args.t)
    if args.output:
        emit_file(rep.ideal, args.output)
    if args.json:
        print(json.dumps(rep.to_json_dict()))
    else:
        print(f"n={rep.n} d={rep.d} t={rep.t} capacity={rep.capacity}")
        print(f"|G(I)| = {rep.sizes[0]} ({2 * rep.n} skeleton + {len(rep.added)} added)")
        for i, s in enumerate(rep.sizes, start=1):
            print(f"|G(I^{i})| = {s}")
        print("verified" if rep.verified else "NOT verified")
    return EXIT_OK if rep.verified else EXIT_UNVERIFIED


def _emit_check_report(rep, as_json: bool) -> int:
    if as_json:
        print(json.dumps(rep.to_json_dict()))
    else:
        for name, ok in rep.conditions.flags.items():
            print(f"condition {name}: {'holds' if ok else 'fails'}")
        print(f"|G(I^2)| = {len(rep.actual)}")
        print(f"verdict: {rep.verdict}")
    return EXIT_OK if rep.verdict == VERIFIED_NINE else EXIT_UNVERIFIED


def cmd_check(args) -> int:
    I = parse_file(args.ideal_file)
    S = normalize(I)
    rep = verify_tiny_square(S, scheme=args.scheme)
    return _emit_check_report(rep, args.json)


def cmd_family(args) -> int:
    S = family_ideal(args.l, args.k, args.t)
    if args.output:
        emit_file(S.as_ideal(), args.output)
    rep = verify_tiny_square(S)
    return _emit_check_report(rep, args.json)


def cmd_crosssection(args) -> int:
    count = cross_section_count(args.nvars, args.t)
    mons = None if args.count_only else cross_section_monomials(args.nvars, args.t)
    if args.json:
        doc = {"nvars": args.nvars, "t": args.t, "count": count}
        if mons is not None:
            doc["monomials"] = [list(m.exps) for m in mons]
        print(json.dumps(doc))
    else:
        print(f"count = {count}")
        if mons is not None:
            for m in mons:
                print(" ".join(str(e) for e in m.exps) + f"  # {format_monomial(m)}")
    return EXIT_OK


def cmd_absorb(args) -> int:
    if args.subset_file:
        subset = list(parse_file(args.subset_file).gens)
    else:
        subset = cross_section_monomials(args.nvars, args.t)
    ok = verify_absorption(args.nvars, args.t, subset, args.power)
    print("absorbed" if ok else "NOT absorbed")
    # a genuine False here contradicts a theorem, so it is a bug
    return EXIT_OK if ok else EXIT_INTERNAL


def cmd_plot(args) -> int:
    I = parse_file(args.ideal_file)
    if args.style == "staircase":
        text = render_staircase_svg(I) if args.format == "svg" else render_staircase_ascii(I)
    else:
        S = normalize(I)
        text = render_vgrid_svg(S) if args.format == "svg" else render_vgrid_ascii(S)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = run_suite(seed=args.seed, cap=_oracle_cap(args))
    failed = False
    for name, ok in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        failed = failed or not ok
    return EXIT_INTERNAL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="idealpow",
        description="Monomial ideals with tiny powers: construction and checks.",
    )
    p.add_argument("--version", action="version", version=f"idealpow {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("power", help="minimal generating set of I^i")
    sp.add_argument("ideal_file")
    sp.add_argument("exponent", type=int)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_power)

    sp = sub.add_parser("construct", help="build an ideal with tiny powers up to depth d")
    sp.add_argument("--nvars", type=int, required=True)
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--t", type=int, default=None, help="override the smallest suitable t")
    sp.add_argument("--output", help="write the constructed ideal to this file")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("check", help="tiny-square condition check on a bivariate ideal")
    sp.add_argument("ideal_file")
    sp.add_argument("--scheme", choices=["original", "improved"], default="improved")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("family", help="three-parameter family member plus its check")
    sp.add_argument("l", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("t", type=int)
    sp.add_argument("--output", help="write the family ideal to this file")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("crosssection", help="central cross-section count and monomials")
    sp.add_argument("--nvars", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_crosssection)

    sp = sub.add_parser("absorb", help="check that added monomials vanish from higher powers")
    sp.add_argument("--nvars", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--power", type=int, required=True)
    sp.add_argument("--subset-file", help="ideal file with the monomials to add (default: full cross-section)")
    sp.set_defaults(func=cmd_absorb)

    sp = sub.add_parser("plot", help="staircase or V-grid rendering")
    sp.add_argument("ideal_file")
    sp.add_argument("--style", choices=["staircase", "vgrid"], default="staircase")
    sp.add_argument("--format", choices=["svg", "ascii"], default="svg")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_plot)

    sp = sub.add_parser("selftest", help="run the randomized theorem-check suite")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--oracle-cap", type=int, default=None)
    sp.set_defaults(func=cmd_selftest)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (ParseError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TheoremViolationError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except IdealpowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
