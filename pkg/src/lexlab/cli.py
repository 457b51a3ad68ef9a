"""Command-line front end.

Exit codes: 0 success / consistent, 2 parse error, 3 engine error (caps,
unlucky coordinates, inadmissible data), 4 theorem violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .cohomology import DegreeWindow, default_window, local_cohomology_table
from .errors import LexlabError, ParseError
from .families import FamilySpec, enumerate_strongly_stable
from .gotzmann import lex_ideal, lex_ideal_from_values
from .groebner import gin
from .hilbert import hilbert_series
from .ideals import MonomialIdeal, saturate
from .parsing import parse_ideal, parse_ring, parse_window
from .reports import (VERDICT_VIOLATION, ideal_to_json, probe_rigidity, verify_main)
from .ring import Poly


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexlab",
        description="exact lex-ideal, saturation and local-cohomology computations")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", required=True,
                        help="comma-separated variable names, e.g. x,y,z")
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--window",
                        help="degree window lo:hi (use --window=-8:5 for negative lo)")

    p = sub.add_parser("hf", parents=[common], help="Hilbert function and series data")
    p.add_argument("ideal")

    p = sub.add_parser("lex", parents=[common], help="lex-segment ideal")
    p.add_argument("ideal", nargs="?", default=None)
    p.add_argument("--values", help="raw Hilbert function values, e.g. 1,3,3,1,1")

    p = sub.add_parser("sat", parents=[common], help="saturation")
    p.add_argument("ideal")

    p = sub.add_parser("gin", parents=[common], help="generic initial ideal (revlex)")
    p.add_argument("ideal")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=1000)

    p = sub.add_parser("lc", parents=[common], help="local cohomology table")
    p.add_argument("ideal")

    p = sub.add_parser("verify-main", parents=[common],
                       help="check the exchange/cohomology equivalence")
    p.add_argument("ideal")
    p.add_argument("--with-gin", action="store_true")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("enumerate", parents=[common],
                       help="strongly stable ideals with a target Hilbert function")
    p.add_argument("--target", help="values, e.g. 1,3,3,1,1")
    p.add_argument("--from-ideal", dest="from_ideal", help="take the target from an ideal")
    p.add_argument("--max-degree", type=int, required=True)

    p = sub.add_parser("probe-rigidity", parents=[common],
                       help="search a family for one-sided windowed equalities")
    p.add_argument("--target")
    p.add_argument("--from-ideal", dest="from_ideal")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)

    return parser


def _window(args) -> DegreeWindow | None:
    if not args.window:
        return None
    lo, hi = parse_window(args.window)
    return DegreeWindow(lo, hi)


def _monomial_ideal(args, ring) -> MonomialIdeal:
    parsed = parse_ideal(args.ideal, ring)
    if not isinstance(parsed, MonomialIdeal):
        raise ParseError("this command needs a monomial ideal")
    return parsed


def _emit(args, payload: dict, table: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(table)


def _family_spec(args, ring) -> FamilySpec:
    if bool(args.target) == bool(args.from_ideal):
        raise ParseError("give exactly one of --target or --from-ideal")
    if args.target:
        try:
            target = tuple(int(v) for v in args.target.split(","))
        except ValueError as exc:
            raise ParseError(f"bad target values {args.target!r}") from exc
    else:
        parsed = parse_ideal(args.from_ideal, ring)
        if not isinstance(parsed, MonomialIdeal):
            raise ParseError("--from-ideal needs a monomial ideal")
        target = parsed
    return FamilySpec(ring, target, args.max_degree)


def _dispatch(args) -> int:
    ring = parse_ring(args.ring)

    if args.command == "hf":
        ideal = _monomial_ideal(args, ring)
        w = _window(args)
        data = hilbert_series(ideal, w.hi if w else None)
        poly = " + ".join(f"{c}*X^{k}" if k else str(c)
                          for k, c in enumerate(data.polynomial)) or "0"
        table = "\n".join([
            f"values 0..{len(data.values) - 1}: {' '.join(map(str, data.values))}",
            f"numerator:  {list(data.numerator)}",
            f"polynomial: {poly}",
            f"d0:         {data.d0}",
        ])
        _emit(args, data.to_json(), table)
        return 0

    if args.command == "lex":
        if bool(args.ideal) == bool(args.values):
            raise ParseError("give an ideal or --values, not both")
        if args.values:
            values = tuple(int(v) for v in args.values.split(","))
            result = lex_ideal_from_values(ring, values)
        else:
            result = lex_ideal(_monomial_ideal(args, ring))
        _emit(args, ideal_to_json(result), str(result))
        return 0

    if args.command == "sat":
        result = saturate(_monomial_ideal(args, ring))
        _emit(args, ideal_to_json(result), str(result))
        return 0

    if args.command == "gin":
        parsed = parse_ideal(args.ideal, ring)
        gens = parsed if isinstance(parsed, MonomialIdeal) else parsed
        result = gin(gens, ring=ring, trials=args.trials, seed=args.seed,
                     bound=args.bound)
        _emit(args, ideal_to_json(result), str(result))
        return 0

    if args.command == "lc":
        ideal = _monomial_ideal(args, ring)
        table = local_cohomology_table(ideal, _window(args))
        _emit(args, table.to_json(), table.table_str())
        return 0

    if args.command == "verify-main":
        ideal = _monomial_ideal(args, ring)
        report = verify_main(ideal, _window(args), include_gin=args.with_gin,
                             trials=args.trials, seed=args.seed)
        _emit(args, report.to_json(), "\n".join(report.summary_lines()))
        return 4 if report.verdict == VERDICT_VIOLATION else 0

    if args.command == "enumerate":
        spec = _family_spec(args, ring)
        members = list(enumerate_strongly_stable(spec))
        members.sort(key=lambda m: m.gens)
        payload = {"count": len(members), "members": [ideal_to_json(m) for m in members]}
        _emit(args, payload, "\n".join(str(m) for m in members) or "(empty family)")
        return 0

    if args.command == "probe-rigidity":
        spec = _family_spec(args, ring)
        report = probe_rigidity(spec, _window(args), jobs=args.jobs)
        lines = [f"members: {len(report.members)}  ({report.note})"]
        for m in report.members:
            flags = "".join("=" if f else "!" for f in m.equal_rows)
            lines.append(f"{'CANDIDATE ' if m.candidate else '          '}{flags}  {m.ideal}")
        lines.append("candidates: " +
                     (", ".join(str(m.ideal) for m in report.candidates) or "none found"))
        _emit(args, report.to_json(), "\n".join(lines))
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except ParseError as exc:
        print(f"lexlab: parse error: {exc}", file=sys.stderr)
        return 2
    except LexlabError as exc:
        print(f"lexlab: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"lexlab: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
