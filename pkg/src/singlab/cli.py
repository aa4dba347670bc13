"""Command-line front end.

Exit codes: 0 ok, 1 usage or parse error, 2 not an isolated singularity,
3 non-convenient support without ``--stabilize``.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from fractions import Fraction

from . import __version__
from .family import DeformationFamily, analyze_family
from .invariants import DEFAULT_CAP, NotIsolated, analyze, min_section_milnor, section_milnor
from .newton import NonConvenientError, StabilizationError, newton_complex
from .poly import HyperplaneSpec, PolySyntaxError, parse_poly, to_text
from .serialize import (SCHEMA, family_to_dict, invariants_to_dict, newton_summary,
                        newton_to_dict, q)

EXIT_OK, EXIT_USAGE, EXIT_NOT_ISOLATED, EXIT_NON_CONVENIENT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _vars(text: str) -> list[str]:
    names = [v.strip() for v in text.split(",") if v.strip()]
    if not names:
        raise UsageError("--vars needs at least one variable")
    return names


def parse_hyperplane(text: str, vars) -> HyperplaneSpec:
    """``"z=0"`` or ``"z=a*x+b*y"`` (linear and homogeneous in the other variables)."""
    if text.count("=") != 1:
        raise UsageError(f"hyperplane must look like 'z=a*x+b*y', got {text!r}")
    lhs, rhs = (s.strip() for s in text.split("="))
    if lhs not in vars:
        raise UsageError(f"unknown hyperplane variable {lhs!r}")
    i = vars.index(lhs)
    rest = [v for v in vars if v != lhs]
    coeffs = {}
    if rhs != "0":
        form = parse_poly(rhs, rest)
        for e, c in form.items():
            if sum(e) != 1:
                raise UsageError("hyperplane must be linear and pass through the origin")
            j = vars.index(rest[e.index(1)])
            coeffs[j] = c
    return HyperplaneSpec(i, coeffs)


def _flatten(prefix, obj, out):
    if isinstance(obj, dict):
        for k in sorted(obj):
            _flatten(f"{prefix}.{k}" if prefix else k, obj[k], out)
    elif isinstance(obj, list) and obj and all(isinstance(x, dict) for x in obj):
        for i, x in enumerate(obj):
            _flatten(f"{prefix}[{i}]", x, out)
    else:
        out.append((prefix, obj))


def render_text(doc: dict) -> str:
    rows: list = []
    _flatten("", doc, rows)
    return "\n".join(f"{k} = {json.dumps(v)}" for k, v in rows)


def cmd_invariants(args) -> dict:
    f = parse_poly(args.poly, _vars(args.vars))
    report = analyze(f, verify=args.verify, cap=args.nmax)
    return {"input": {"poly": to_text(f), "vars": list(f.vars), "param": None},
            "result": invariants_to_dict(report)}


def cmd_family(args) -> dict:
    F = parse_poly(args.poly, _vars(args.vars), args.param)
    report = analyze_family(DeformationFamily(F), k=args.samples, seed=args.seed,
                            verify=args.verify, cap=args.nmax)
    return {"input": {"poly": to_text(F), "vars": list(F.vars), "param": F.param},
            "result": family_to_dict(report)}


def cmd_newton(args) -> dict:
    f = parse_poly(args.poly, _vars(args.vars))
    cx = newton_complex(f)
    if not cx.convenient and not args.stabilize:
        raise NonConvenientError("support misses a coordinate axis; pass --stabilize")
    return {"input": {"poly": to_text(f), "vars": list(f.vars), "param": None},
            "result": newton_to_dict(newton_summary(cx, stabilize=args.stabilize))}


def cmd_section(args) -> dict:
    names = _vars(args.vars)
    f = parse_poly(args.poly, names)
    h = parse_hyperplane(args.hyperplane, names)
    mu = section_milnor(f, h, cap=args.nmax)
    result = {"section_mu": mu, "hyperplane": args.hyperplane}
    if args.random:
        best, hbest = min_section_milnor(f, h.index, args.random, seed=args.seed, cap=args.nmax)
        result["random_min_mu"] = best
        result["random_min_hyperplane"] = {names[j]: q(c) for j, c in sorted(hbest.coeffs.items())}
        result["random_samples"] = args.random
    if args.reference is not None:
        result["reference_mu"] = args.reference
        result["matches_reference"] = mu == args.reference
    return {"input": {"poly": to_text(f), "vars": names, "param": None}, "result": result}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="singlab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"singlab {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, nmax=True):
        p.add_argument("--poly", required=True)
        p.add_argument("--vars", required=True, help="comma-separated variable names, in order")
        p.add_argument("--format", choices=["json", "text"], default="json")
        if nmax:
            p.add_argument("--nmax", type=int, default=DEFAULT_CAP,
                           help="largest Macaulay truncation degree")

    p = sub.add_parser("invariants", help="invariants of one germ")
    common(p)
    p.add_argument("--verify", action="store_true", help="run both Milnor routes")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("family", help="analyze a one-parameter deformation")
    common(p)
    p.add_argument("--param", required=True)
    p.add_argument("--samples", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("newton", help="Newton polyhedron summary and Newton number")
    common(p, nmax=False)
    p.add_argument("--stabilize", action="store_true",
                   help="add high powers on missing axes for non-convenient input")
    p.set_defaults(func=cmd_newton)

    p = sub.add_parser("section", help="Milnor number of a hyperplane section")
    common(p)
    p.add_argument("--hyperplane", required=True, help="e.g. 'z=0' or 'z=2*x-y'")
    p.add_argument("--random", type=int, default=0, metavar="K",
                   help="also report the minimum over K seeded random hyperplanes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reference", type=int, default=None,
                   help="expected value to echo and compare against")
    p.set_defaults(func=cmd_section)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"singlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    start = time.perf_counter()
    try:
        body = args.func(args)
    except (UsageError, PolySyntaxError) as exc:
        print(f"singlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotIsolated, StabilizationError) as exc:
        print(f"singlab: not an isolated singularity: {exc}", file=sys.stderr)
        return EXIT_NOT_ISOLATED
    except NonConvenientError as exc:
        print(f"singlab: {exc}", file=sys.stderr)
        return EXIT_NON_CONVENIENT
    except ValueError as exc:
        print(f"singlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc = {
        "schema": SCHEMA,
        "tool": {"name": "singlab", "version": __version__},
        "command": args.command,
        **body,
        "timing": {"seconds": round(time.perf_counter() - start, 6)},
    }
    if args.format == "json":
        text = json.dumps(doc, sort_keys=True, indent=2)
    else:
        text = render_text(doc)
    sys.stdout.write(text + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
