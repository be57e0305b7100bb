"""Command-line entry point: ``dvl check|search|eval|regress|threshold|chars``.

Exit codes: 0 nonvanishing (or success), 10 vanishes, 11 divergent,
2 bad input, 1 a regression check failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import modarith
from .characters import all_characters
from .criterion import decide_vanishing, erdos_prime_threshold
from .numeric import L1_numeric, Ls_numeric
from .periodic import FunctionFormatError, dump_function, format_rational, load_function

EXIT_NONVANISHING = 0
EXIT_FAILURE = 1
EXIT_BAD_INPUT = 2
EXIT_VANISHES = 10
EXIT_DIVERGENT = 11

_VERDICT_EXIT = {"nonvanishing": EXIT_NONVANISHING, "vanishes": EXIT_VANISHES, "divergent": EXIT_DIVERGENT}


def _load(path):
    try:
        return load_function(path)
    except FunctionFormatError as exc:
        print(f"dvl: {exc}", file=sys.stderr)
        return None


def cmd_check(args) -> int:
    f = _load(args.path)
    if f is None:
        return EXIT_BAD_INPUT
    report = decide_vanishing(f, args.k)
    print(json.dumps(report.to_json(), indent=None if args.json else 2))
    return _VERDICT_EXIT[report.verdict]


def log_expansion(logs: dict) -> str:
    """Render {2: 1, 3: -1/2} as '1·log 2 - 1/2·log 3'."""
    out = ""
    for p, c in sorted(logs.items()):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        term = f"{format_rational(abs(c))}·log {p}"
        out = (f"{out} {sign} {term}" if out else (f"-{term}" if c < 0 else term))
    return out or "0"


def cmd_eval(args) -> int:
    f = _load(args.path)
    if f is None:
        return EXIT_BAD_INPUT
    s = args.s
    if s == 1:
        if f.sum_over_period() != 0:
            print("dvl: period sum is nonzero, L(1, f) diverges", file=sys.stderr)
            return EXIT_DIVERGENT
        report = decide_vanishing(f)
        value = L1_numeric(f)
        out = {"s": 1, "value": value, "log_coefficients": {str(p): format_rational(c) for p, c in report.log_coefficients.items()}}
        out["expansion"] = log_expansion(report.log_coefficients)
        if report.property_U:
            out["expansion"] += " + (terms outside the span of log d, d | N)"
    elif s > 1:
        out = {"s": s, "value": Ls_numeric(f, s)}
    else:
        print("dvl: --s must be 1 or greater than 1", file=sys.stderr)
        return EXIT_BAD_INPUT
    if args.json:
        print(json.dumps(out))
    else:
        print(f"L({s:g}, f) ~ {out['value']!r}")
        if "expansion" in out:
            print(f"exact log part: {out['expansion']}")
    return 0


def cmd_search(args) -> int:
    from .search import SearchSpec, SearchTooLarge, default_workers, run_search

    family = "pm1_full" if args.family == "pm1" else args.family
    try:
        spec = SearchSpec(
            args.period,
            family,
            require_zero_sum=args.zero_sum,
            worker_count=args.workers or default_workers(),
            k=args.k,
            strategy=args.strategy,
        )
        result = run_search(spec)
    except SearchTooLarge as exc:
        print(f"dvl: refusing search: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except ValueError as exc:
        print(f"dvl: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for m, f in zip(result.vanishing_masks, result.functions()):
            dump_function(f, outdir / f"N{spec.period}_{family}_{m}.json")
    if args.json:
        print(json.dumps(result.to_json()))
    else:
        print(
            f"period {spec.period} {family}: {result.candidates} candidates "
            f"({result.strategy}, {result.backend}); divergent {result.divergent}, "
            f"nonvanishing {result.nonvanishing}, vanishing {result.vanishing}, skipped {result.skipped}"
        )
        for m in result.vanishing_masks:
            print(f"  vanishing mask {m}")
    return 0


def cmd_regress(args) -> int:
    from .regress import run_all

    results = run_all()
    for r in results:
        line = f"{'PASS' if r.passed else 'FAIL'} {r.name}"
        print(f"{line}: {r.detail}" if r.detail else line)
    return 0 if all(r.passed for r in results) else EXIT_FAILURE


def cmd_threshold(args) -> int:
    moduli = args.moduli or [3, 7, 15]
    table = {}
    for n in moduli:
        if not modarith.is_squarefree(n):
            print(f"dvl: {n} is not squarefree", file=sys.stderr)
            return EXIT_BAD_INPUT
        table[n] = erdos_prime_threshold(n)
    if args.json:
        print(json.dumps({str(n): t for n, t in table.items()}))
    else:
        for n, t in table.items():
            print(f"{n}\t{t}")
    return 0


def cmd_chars(args) -> int:
    m = args.modulus
    if m < 1:
        print("dvl: modulus must be positive", file=sys.stderr)
        return EXIT_BAD_INPUT
    g = modarith.unit_group(m)
    rows = [
        {"exponents": list(chi.exponents), "conductor": chi.conductor, "primitive": chi.is_primitive}
        for chi in all_characters(m)
    ]
    if args.json:
        print(json.dumps({"modulus": m, "generators": [list(x) for x in g.factors], "characters": rows}))
    else:
        print(f"(Z/{m}Z)* generators (residue, order): {list(g.factors)}")
        for r in rows:
            print(f"  {tuple(r['exponents'])}\tconductor {r['conductor']}{'  primitive' if r['primitive'] else ''}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dvl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether L(k, f) vanishes")
    p.add_argument("path")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--json", action="store_true", help="compact single-line JSON")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("eval", help="numeric L(s, f)")
    p.add_argument("path")
    p.add_argument("--s", type=float, default=1.0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("search", help="exhaustive search over +-1 functions")
    p.add_argument("period", type=int)
    p.add_argument("--family", choices=["erdos", "pm1", "pm1_full"], default="erdos")
    p.add_argument("--zero-sum", action="store_true", help="only evaluate candidates with zero period sum")
    p.add_argument("--workers", type=int, default=None, help="default: $DVL_WORKERS or 1")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--strategy", choices=["auto", "brute", "kernel"], default="auto")
    p.add_argument("--out", help="directory for vanishing candidates as function files")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("regress", help="run the bundled regression checks")
    p.set_defaults(func=cmd_regress)

    p = sub.add_parser("threshold", help="prime threshold 2^w(N) prod (q^2 + 2q + 2)")
    p.add_argument("moduli", type=int, nargs="*")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("chars", help="list Dirichlet characters mod M")
    p.add_argument("modulus", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_chars)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "k", 1) < 1:
        print("dvl: --k must be >= 1", file=sys.stderr)
        return EXIT_BAD_INPUT
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
