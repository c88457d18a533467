"""Command-line frontend.

Verbs:
  poincare     Poincare polynomial of one model, by series, enumeration or both
  fvector      f-vector of one nestohedron family member, by series, tubings or both
  euler        Euler characteristic of one compact real model, with cross-check
  series-dump  one named generating series as canonical JSON
  selftest     run every acceptance check, one line each

Exit codes: 0 success/match, 2 mismatch between methods, 3 guard violation,
4 bad arguments.  All output is deterministic: terms, rows and keys are
sorted, so identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cohomology import poincare_bruteforce
from .formulas import (
    D3_DEGENERATE_NOTE,
    big_gamma,
    cal_k,
    euler_from_bd,
    euler_from_x,
    f_cy,
    f_typeA,
    fvector_from_fcy,
    fvector_typeA,
    gamma_series,
    k_series,
    phi_full_monomial,
    phi_rr,
    poincare_from_phi,
    poincare_from_psi,
    psi_series,
    tilde_big_gamma,
    x_typeA,
)
from .lattice import GroupId, GuardExceeded
from .polytopes import EULER_CW_RANGE, dynkin_graph, euler_cw, fvector_tubings
from .series import QPolynomial, dump_json

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_GUARD = 3
EXIT_BADARGS = 4

DUMP_TRUNC_GUARD = 12

# r-independent series take and ignore r so the dispatch below stays uniform
SERIES_REGISTRY = {
    "psi": lambda r, trunc: psi_series(trunc),
    "K": k_series,
    "gamma": gamma_series,
    "Gamma": big_gamma,
    "calK": cal_k,
    "phiFull": phi_full_monomial,
    "phiRR": phi_rr,
    "F": lambda r, trunc: f_typeA(trunc),
    "X": lambda r, trunc: x_typeA(trunc),
    "tildeGamma": lambda r, trunc: tilde_big_gamma(trunc),
    "FcyB": lambda r, trunc: f_cy("B", trunc),
    "FcyD": lambda r, trunc: f_cy("D", trunc),
}


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; the contract here says 4."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_BADARGS, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wondermodels", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("poincare", help="Poincare polynomial of Y_G(r,p,n)")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("series", "bruteforce", "both"),
                   default="both")
    p.add_argument("--trunc", type=int, default=None,
                   help="series depth, default n+2")
    _common_flags(p)

    f = sub.add_parser("fvector", help="f-vector of one nestohedron")
    f.add_argument("--type", dest="family", choices=("A", "B", "D"), required=True)
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--method", choices=("series", "tubings", "both"),
                   default="both")
    _common_flags(f)

    e = sub.add_parser("euler", help="Euler characteristic of one compact real model")
    e.add_argument("--type", dest="family", choices=("A", "B", "D"), required=True)
    e.add_argument("--n", type=int, required=True)
    _common_flags(e)

    d = sub.add_parser("series-dump", help="one generating series as canonical JSON")
    d.add_argument("name", choices=sorted(SERIES_REGISTRY))
    d.add_argument("--r", type=int, default=2,
                   help="group parameter for the series that need one")
    d.add_argument("--trunc", type=int, required=True,
                   help=f"series depth, at most {DUMP_TRUNC_GUARD}")

    s = sub.add_parser("selftest", help="run every acceptance check")
    s.add_argument("--format", choices=("json", "csv", "text"), default="text")
    return parser


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--seed-guard", type=int, default=5000,
                   help="building set size limit for enumeration")


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc, separators=(",", ":"), sort_keys=True))


def _poincare_series(g: GroupId, trunc: int) -> QPolynomial:
    if g.r == 1:
        return poincare_from_psi(g.n)
    if g.p == g.r:
        return poincare_from_phi(phi_rr(g.r, trunc), g.n)
    return poincare_from_phi(phi_full_monomial(g.r, trunc), g.n)


def run_poincare(args) -> int:
    g = GroupId(args.r, args.p, args.n)
    trunc = args.trunc if args.trunc is not None else g.n + 2
    if trunc < g.n:
        raise ValueError(f"--trunc {trunc} cannot reach t^{g.n}")
    note = None
    if 1 < g.p < g.r:
        note = f"Y_{{G({g.r},{g.p},{g.n})}} = Y_{{G({g.r},1,{g.n})}}"
    values = {}
    if args.method in ("series", "both"):
        values["series"] = _poincare_series(g, trunc)
    if args.method in ("bruteforce", "both"):
        values["bruteforce"] = poincare_bruteforce(g, max_building=args.seed_guard)
    verdict = None
    if args.method == "both":
        verdict = "match" if values["series"] == values["bruteforce"] else "mismatch"
    poly = values.get("series", values.get("bruteforce"))

    if args.format == "json":
        doc = {"group": {"r": g.r, "p": g.p, "n": g.n},
               "method": args.method,
               "poincare": [list(kv) for kv in poly.as_pairs()]}
        if verdict:
            doc["verdict"] = verdict
        if note:
            doc["note"] = note
        _emit_json(doc)
    elif args.format == "csv":
        print("degree,coefficient")
        for k, c in poly.as_pairs():
            print(f"{k},{c}")
    else:
        print(f"{g} [{args.method}]: {poly}")
        if verdict:
            print(f"verdict: {verdict}")
        if note:
            print(f"note: {note}")
    return EXIT_OK if verdict != "mismatch" else EXIT_MISMATCH


def _fvector_series(family: str, n: int) -> list[int]:
    if family == "A":
        return fvector_typeA(n)
    return fvector_from_fcy(family, n)


def _fvector_tubings(family: str, n: int) -> list[int]:
    if family == "D" and n == 3:
        # reducible case: same polytope as the 4-point type A model
        return fvector_tubings(dynkin_graph("A", 4))
    return fvector_tubings(dynkin_graph(family, n))


def run_fvector(args) -> int:
    family, n = args.family, args.n
    note = D3_DEGENERATE_NOTE if family == "D" and n == 3 else None
    values = {}
    if args.method in ("series", "both"):
        values["series"] = _fvector_series(family, n)
    if args.method in ("tubings", "both"):
        values["tubings"] = _fvector_tubings(family, n)
    verdict = None
    if args.method == "both":
        verdict = "match" if values["series"] == values["tubings"] else "mismatch"
    fvec = values.get("series", values.get("tubings"))

    if args.format == "json":
        doc = {"type": family, "n": n, "fvector": fvec, "method": args.method}
        if verdict:
            doc["verdict"] = verdict
        if note:
            doc["note"] = note
        _emit_json(doc)
    elif args.format == "csv":
        print("codimension,count")
        for k, c in enumerate(fvec):
            print(f"{k},{c}")
    else:
        print(f"{family} n={n} [{args.method}]: {fvec}")
        if verdict:
            print(f"verdict: {verdict}")
        if note:
            print(f"note: {note}")
    return EXIT_OK if verdict != "mismatch" else EXIT_MISMATCH


def run_euler(args) -> int:
    family, n = args.family, args.n
    note = None
    if family == "A":
        value = euler_from_x(n)
    else:
        value = euler_from_bd(family, n)
    oracle = None
    if family == "D" and n == 3:
        oracle = euler_cw("A", 4)
        note = D3_DEGENERATE_NOTE
    else:
        lo, hi = EULER_CW_RANGE[family]
        if lo <= n <= hi:
            oracle = euler_cw(family, n)
    verdict = None if oracle is None else \
        ("match" if value == oracle else "mismatch")

    if args.format == "json":
        doc = {"type": family, "n": n, "euler": value}
        if verdict:
            doc["verdict"] = verdict
            doc["oracle"] = oracle
        if note:
            doc["note"] = note
        _emit_json(doc)
    elif args.format == "csv":
        print("type,n,euler,verdict")
        print(f"{family},{n},{value},{verdict or ''}")
    else:
        line = f"{family} n={n}: euler characteristic {value}"
        if verdict:
            line += f" ({verdict} vs cell count {oracle})"
        print(line)
        if note:
            print(f"note: {note}")
    return EXIT_OK if verdict != "mismatch" else EXIT_MISMATCH


def run_series_dump(args) -> int:
    if not 1 <= args.trunc <= DUMP_TRUNC_GUARD:
        raise GuardExceeded(
            f"--trunc must be between 1 and {DUMP_TRUNC_GUARD}, got {args.trunc}")
    series = SERIES_REGISTRY[args.name](args.r, args.trunc)
    print(dump_json(series, args.name))
    return EXIT_OK


def run_selftest(args) -> int:
    from .selftest import run_checks
    results = run_checks()
    if args.format == "json":
        _emit_json({"checks": [{"name": r.name, "ok": r.ok,
                                "seconds": round(r.seconds, 3),
                                "detail": r.detail} for r in results],
                    "ok": all(r.ok for r in results)})
    else:
        for r in results:
            print(r.line())
        n_bad = sum(1 for r in results if not r.ok)
        print(f"{len(results) - n_bad}/{len(results)} checks passed")
    return EXIT_OK if all(r.ok for r in results) else EXIT_MISMATCH


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"poincare": run_poincare, "fvector": run_fvector,
               "euler": run_euler, "series-dump": run_series_dump,
               "selftest": run_selftest}[args.verb]
    try:
        return handler(args)
    except GuardExceeded as err:
        print(f"guard violation: {err}", file=sys.stderr)
        return EXIT_GUARD
    except ArithmeticError as err:
        # a non-integer count is an internal inconsistency, not a usage error
        print(f"inconsistency: {err}", file=sys.stderr)
        return EXIT_MISMATCH
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_BADARGS


if __name__ == "__main__":
    sys.exit(main())
