"""Command-line interface.

stdout carries JSON only; diagnostics go to stderr.  Exit codes: 0 success,
1 property-check failure, 2 usage or hypothesis error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .boolfn import BooleanFunction, degree, is_rotation_symmetric
from .catalog import CatalogError, CatalogRecord, append_records, make_record
from .constructions import (
    MmSpec,
    QuadraticSpec,
    Theorem2Params,
    construct_carlet_cubic,
    construct_mm,
    construct_quadratic_rs,
    construct_su_tang,
    construct_theorem1,
    construct_theorem2,
)
from .rotsym import parse_gamma
from .spectral import is_bent, nonlinearity, walsh_spectrum
from .verify import run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CONSTRUCT_FAMILIES = ("theorem1", "theorem2", "su_tang", "carlet", "quadratic", "mm")


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"{args.family} requires --{name.replace('_', '-')}")
    return value


def build(args):
    """Construct the function selected by ``args``; returns (params, f)."""
    family = args.family
    if family == "carlet":
        r = _need(args, "r")
        return {"r": r}, construct_carlet_cubic(r)
    m = _need(args, "m")
    if family == "theorem1":
        gamma = parse_gamma(args.gamma or "0", m)
        return {"m": m, "gamma_text": gamma.to_text()}, construct_theorem1(m, gamma)
    if family == "theorem2":
        t = _need(args, "t")
        gamma = parse_gamma(args.gamma or "0", m)
        f = construct_theorem2(Theorem2Params(m, t, gamma))
        return {"m": m, "t": t, "gamma_text": gamma.to_text()}, f
    if family == "su_tang":
        reps = [int(tok, 16) for tok in (args.reps or "").split(",") if tok]
        return {"m": m, "reps": [format(r, "x") for r in reps]}, construct_su_tang(m, reps)
    if family == "quadratic":
        spec = QuadraticSpec.from_bitstring(m, _need(args, "c"))
        return {"m": m, "c": "".join(map(str, spec.c))}, construct_quadratic_rs(spec)
    if family == "mm":
        rng = np.random.default_rng(args.seed)
        if args.pi:
            pi = [int(tok) for tok in args.pi.split(",")]
        else:
            pi = rng.permutation(1 << m).tolist()
        h = BooleanFunction.from_hex(args.h, m) if args.h else None
        f = construct_mm(MmSpec(m, tuple(pi), h))
        params = {"m": m, "pi": pi, "h": h.to_hex() if h else None, "seed": args.seed}
        return params, f
    raise UsageError(f"unknown family {family!r}")


def cmd_construct(args) -> int:
    params, f = build(args)
    _emit(make_record(args.family, params, f, args.spectral_cap).__dict__)
    return EXIT_OK


def cmd_check(args) -> int:
    f = BooleanFunction.from_hex(args.tt_hex, args.n)
    even = f.n % 2 == 0
    _emit(
        {
            "bent": is_bent(f, args.spectral_cap) if even else False,
            "rotsym": is_rotation_symmetric(f),
            "degree": degree(f),
            "nonlinearity": nonlinearity(f, args.spectral_cap),
        }
    )
    return EXIT_OK


def cmd_spectrum(args) -> int:
    f = BooleanFunction.from_hex(args.tt_hex, args.n)
    sys.stdout.write(walsh_spectrum(f, args.spectral_cap).to_json() + "\n")
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    results = run_suite(max_m=args.max_m, seed=args.seed, inject_fault=args.inject_fault)
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"{status}  {res.name:<32} {res.cases:>6} cases  {len(res.failures)} failed", file=sys.stderr)
        for case in res.failures:
            print(f"      failing tuple: {json.dumps(case)}", file=sys.stderr)
    passed = all(res.passed for res in results)
    _emit({"passed": passed, "checks": [res.as_dict() for res in results]})
    return EXIT_OK if passed else EXIT_FAIL


def cmd_catalog(args) -> int:
    stream = open(args.input, encoding="utf-8") if args.input else sys.stdin
    with stream:
        records = []
        for lineno, line in enumerate(stream, 1):
            if not line.strip():
                continue
            try:
                records.append(CatalogRecord.from_dict(json.loads(line)))
            except (ValueError, AttributeError) as exc:
                raise CatalogError(f"input line {lineno}: {exc}") from None
    _emit(append_records(args.path, records))
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spectral-cap", type=int, default=None, help="largest n for Walsh spectra")

    parser = argparse.ArgumentParser(prog="rsbent", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build one function and print its record")
    p.add_argument("family", choices=CONSTRUCT_FAMILIES)
    p.add_argument("--m", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--gamma", help='gamma in ANF text, e.g. "X0*X1+X1*X2+X0*X2"')
    p.add_argument("--reps", help="comma-separated hex orbit representatives")
    p.add_argument("--c", help="coefficient bits c_1..c_m, e.g. 01")
    p.add_argument("--r", type=int)
    p.add_argument("--pi", help="mm: comma-separated table of 2^m values")
    p.add_argument("--h", help="mm: hex truth table of h on m variables")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", parents=[common], help="report properties of a truth table")
    p.add_argument("tt_hex")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("spectrum", parents=[common], help="print the Walsh spectrum as JSON")
    p.add_argument("tt_hex")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify-paper", parents=[common], help="run the full verification sweep")
    p.add_argument("--max-m", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("catalog", parents=[common], help="append JSONL records, skipping rotations of known ones")
    p.add_argument("path")
    p.add_argument("--input", help="read records from this file instead of stdin")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"rsbent: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
