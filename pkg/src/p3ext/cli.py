"""Command line entry point.

JSON goes to stdout, a one-line summary to stderr. Exit codes: 0 success or
pass, 1 a computed negative result (failed check, criterion false, ...),
2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .arith import Group, MapContext
from .config import load_settings
from .construct import ConstructionError, ConstructionResult, build_construction
from .cyclo import ConductorMismatch, NotInSubfield
from .expr import ExprSyntaxError, UndefinedSymbol, element_from_text
from .fixtures import FIXTURES, reproduce
from .ideals import ideal_criterion
from .minpoly import irr_alpha_matrix, irr_shortcut_p3, numeric_crosscheck
from .poly import RationalPoly
from .ramify import ram_set
from .search import SearchSpec, search
from .stats import galois_stats
from .tower import TowerError, build_tower

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_json(arg: str):
    """Inline JSON, a file path, or ``-`` for stdin."""
    if arg == "-":
        text = sys.stdin.read()
    elif arg.lstrip().startswith(("{", "[")):
        text = arg
    else:
        path = Path(arg)
        if not path.exists():
            raise UsageError(f"{arg!r} is neither JSON nor an existing file")
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from None


def _read_poly(arg: str) -> RationalPoly:
    data = _read_json(arg)
    if isinstance(data, dict) and "coeffs" in data:
        return RationalPoly.from_json(data)
    if isinstance(data, dict) and "poly" in data:
        return RationalPoly.from_json(data["poly"])
    if isinstance(data, list):
        # plain ascending coefficient list, entries like 3, "-7/2"
        return RationalPoly([Fraction(str(c)) for c in data])
    raise UsageError("expected {'coeffs': [[num, den], ...]} or a list of coefficients")


def _add_tower_args(ap: argparse.ArgumentParser) -> None:
    ap.add_argument("--p", type=int, required=True)
    src = ap.add_mutually_exclusive_group(required=True)
    src.add_argument("--r", type=int, help="prime r = 1 mod p for the Gaussian period tower")
    src.add_argument("--zeta-p2", action="store_true", help="use L = Q(zeta_{p^2})")
    ap.add_argument("--mr", type=int, help="primitive root mod r")
    ap.add_argument("--e", type=int, help="signed exponent e (default: smallest primitive root mod p)")
    ap.add_argument("--sigma", type=int, help="exponent defining the generator of Gal(L/K)")


def _tower(args):
    return build_tower(args.p, r=args.r, m_r=args.mr, zeta_p2=args.zeta_p2, e=args.e, sigma=args.sigma)


def cmd_tower(args, settings):
    t = _tower(args)
    _emit(t.summary(), f"tower m={t.m} [L:Q]={t.degree('L')} e={t.e}")
    return OK


def cmd_criterion(args, settings):
    t = _tower(args)
    maps = MapContext(t)
    x = element_from_text(args.x, t)
    rep = ideal_criterion(maps, x, settings=settings)
    _emit(rep.to_json(), f"criterion verdict: {rep.verdict}")
    return OK if rep.verdict else FAIL


def cmd_construct(args, settings):
    t = _tower(args)
    x = element_from_text(args.x, t)
    theta = element_from_text(args.theta, t) if args.theta else None
    res = build_construction(t, x, args.group, theta=theta, force=args.force, settings=settings)
    _emit(res.to_json(), f"construction {res.variant.value}: {res.provenance}")
    return OK


def cmd_minpoly(args, settings):
    res = ConstructionResult.from_json(_read_json(args.construction))
    f = irr_shortcut_p3(res) if args.method == "shortcut" else irr_alpha_matrix(res)
    out = f.to_json()
    ok = True
    if args.numeric:
        out["numeric_crosscheck"] = ok = numeric_crosscheck(res, f)
    _emit(out, f"Irr(alpha) degree {f.degree}")
    return OK if ok else FAIL


def cmd_ramify(args, settings):
    rep = ram_set(_read_poly(args.poly), settings=settings)
    if rep.inconclusive:
        summary = f"ramified {rep.ramified}, inconclusive {rep.inconclusive}"
    else:
        summary = f"Ram = {rep.final_set}"
    _emit(rep.to_json(), summary)
    return FAIL if rep.inconclusive else OK


def cmd_verify(args, settings):
    f = _read_poly(args.poly)
    bound = args.prime_bound if args.prime_bound is not None else settings.prime_bound
    rep = galois_stats(f, args.group, prime_bound=bound)
    _emit(rep.to_json(), f"{rep.primes_used} primes, fully split {rep.fully_split_frequency:.4f}, passed {rep.passed}")
    return OK if rep.passed else FAIL


def cmd_search(args, settings):
    t = _tower(args)
    support = [s.strip() for s in args.support.split(",")] if args.support else None
    spec = SearchSpec(
        t,
        height=args.height if args.height is not None else settings.height,
        support=support,
        max_candidates=args.max_candidates,
        max_results=args.max_results,
        minimal_ramification=args.minimal_ramification,
        settings=settings,
    )
    hits = search(spec)
    _emit([h.to_json() for h in hits], f"{len(hits)} hit(s): " + ", ".join(h.text for h in hits))
    return OK


def cmd_reproduce(args, settings):
    names = list(FIXTURES) if args.fixture == "all" else [args.fixture]
    reports = [reproduce(n) for n in names]
    for r in reports:
        bad = [c.name for c in r.checks if not c.passed]
        print(f"{r.name}: {'PASS' if r.passed else 'FAIL'} ({r.seconds:.1f}s)" + (f" failing: {bad}" if bad else ""), file=sys.stderr)
    data = reports[0].to_json() if len(reports) == 1 else [r.to_json() for r in reports]
    print(json.dumps(data, indent=2))
    return OK if all(r.passed for r in reports) else FAIL


def _emit(data, summary: str) -> None:
    print(json.dumps(data, indent=2))
    print(summary, file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="p3ext", description="Galois extensions with groups of order p^3.")
    ap.add_argument("--config", help="key = value file with bounds")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("tower", help="summarize the cyclotomic tower")
    _add_tower_args(sp)
    sp.set_defaults(func=cmd_tower)

    sp = sub.add_parser("criterion", help="run the ideal criterion on x")
    _add_tower_args(sp)
    sp.add_argument("--x", required=True, help='element of L, e.g. "d + z"')
    sp.set_defaults(func=cmd_criterion)

    sp = sub.add_parser("construct", help="build omega and alpha for x")
    _add_tower_args(sp)
    sp.add_argument("--x", required=True)
    sp.add_argument("--group", required=True, type=Group.parse, help="heisenberg or semidirect")
    sp.add_argument("--theta", help="resolvent for the semidirect variant")
    sp.add_argument("--force", action="store_true", help="build even if x is not certified")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("minpoly", help="minimal polynomial of alpha from a construction")
    sp.add_argument("--construction", required=True, help="JSON, file path, or -")
    sp.add_argument("--method", choices=["matrix", "shortcut"], default="matrix")
    sp.add_argument("--numeric", action="store_true", help="also run the 200-bit cross-check")
    sp.set_defaults(func=cmd_minpoly)

    sp = sub.add_parser("ramify", help="ramified primes of Q[X]/(f)")
    sp.add_argument("--poly", required=True, help="JSON, file path, or -")
    sp.set_defaults(func=cmd_ramify)

    sp = sub.add_parser("verify", help="factorization statistics against a group")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--group", required=True, type=Group.parse)
    sp.add_argument("--prime-bound", type=int)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("search", help="bounded-height search for criterion-passing x")
    _add_tower_args(sp)
    sp.add_argument("--height", type=int)
    sp.add_argument("--support", help='comma separated, e.g. "d,z,1"')
    sp.add_argument("--max-candidates", type=int, default=100_000)
    sp.add_argument("--max-results", type=int, default=10)
    sp.add_argument("--minimal-ramification", action="store_true")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("reproduce", help="rerun a worked example")
    sp.add_argument("fixture", choices=[*FIXTURES, "all"])
    sp.set_defaults(func=cmd_reproduce)
    return ap


_USAGE_ERRORS = (
    UsageError, TowerError, ExprSyntaxError, UndefinedSymbol, NotInSubfield, ConductorMismatch, KeyError,
)


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        settings = load_settings(args.config)
        return args.func(args, settings)
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
