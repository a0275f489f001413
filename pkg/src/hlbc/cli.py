"""Command-line front end: ``hlbc {compute,verify,kn,dump-chain,fibers}``.

Exit codes: 0 success, 1 a check or method comparison failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable

from .alcove import PairCapExceeded, enumerate_admissible, level_identity_violations, schwer_evaluate
from .chains import dump_chain, lambda_chain, mu_from_coefficients, validate_chain
from .characters import dimension, orbit_sum, weyl_character
from .exactpoly import HLPoly, tpoly_str
from .fillings import (content, enumerate_fillings, filling_map, hhl_reduction, hhl_stats,
                       kn_fillings, in_reduction_class, stat_des, stat_N)
from .formula import identity_suite, tableau_evaluate, verify_compression

CHECKS = ("chain", "fibers", "weight", "character", "hhl", "identities", "levels")
DEFAULT_CHECKS = ("chain", "fibers", "weight", "character", "hhl")
DEFAULT_MAX_PAIRS = 10 ** 7


class UsageError(Exception):
    pass


def _parse_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(f"cannot parse integer list {text!r}") from None


def _default_threads() -> int:
    env = os.environ.get("HLBC_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"HLBC_THREADS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


def _config(args) -> tuple[str, int, tuple[int, ...]]:
    if args.lam is None and args.coeffs is None:
        raise UsageError("give -l/--lambda (or --coeffs for type B)")
    if args.coeffs is not None:
        if args.type != "B":
            raise UsageError("--coeffs is only meaningful for type B")
        alpha = _parse_list(args.coeffs)
        if len(alpha) != args.n:
            raise UsageError(f"--coeffs needs {args.n} entries")
        parts = mu_from_coefficients(alpha)
    else:
        parts = _parse_list(args.lam)
    chain = lambda_chain(args.type, args.n, parts)  # validates regularity
    return args.type, args.n, chain.parts


def _emit(path: str | None, lines) -> None:
    if not path:
        return
    if path == "-":
        for line in lines:
            print(line)
        return
    with open(path, "w") as fh:
        for line in lines:
            fh.write(line + "\n")


def _threads(args) -> int:
    return args.threads if args.threads is not None else _default_threads()


# -- subcommands -------------------------------------------------------------

def cmd_compute(args) -> int:
    type_, n, parts = _config(args)
    chain = lambda_chain(type_, n, parts)
    results: dict[str, HLPoly] = {}
    fillings = None
    if args.method in ("tableau", "both") or args.emit_fillings:
        fillings = enumerate_fillings(type_, n, parts)
    if args.method in ("tableau", "both"):
        results["tableau"] = tableau_evaluate(type_, n, parts, fillings)
    if args.method in ("alcove", "both"):
        results["alcove"] = schwer_evaluate(chain, _threads(args), args.max_pairs)
    if args.emit_pairs:
        _emit(args.emit_pairs, (json.dumps(p.to_json(), separators=(",", ":"))
                                for p in enumerate_admissible(chain, max_pairs=args.max_pairs)))
    if args.emit_fillings:
        _emit(args.emit_fillings, [json.dumps(
            [{"columns": f.to_json(), "N": stat_N(f), "des": stat_des(f),
              "content": list(content(f))} for f in fillings], separators=(",", ":"))])

    poly = next(iter(results.values()))
    agree = len({p for p in results.values()}) == 1
    if args.format == "json":
        out = {"type": type_, "n": n, "lambda": list(parts), "weight_doubled": list(chain.lam),
               "method": args.method, "terms": poly.to_json()}
        if args.method == "both":
            out["agree"] = agree
        print(json.dumps(out, separators=(",", ":")))
    else:
        print(poly)
        if args.method == "both":
            print("methods agree" if agree else "METHODS DISAGREE")
            if not agree:
                print(f"alcove - tableau = {results['alcove'] - results['tableau']}")
    return 0 if agree else 1


def _check_chain(type_, n, parts, args) -> tuple[bool, str | None, dict]:
    chain = lambda_chain(type_, n, parts)
    rep = validate_chain(type_, n, chain.roots, chain.lam)
    return rep.ok, None if rep.ok else f"{rep.rule}: {rep.witness}", {"length": chain.m}


def _check_fibers(type_, n, parts, args):
    rep = verify_compression(type_, n, parts, max_pairs=args.max_pairs)
    return rep.ok, rep.first_failure(), rep.to_json()


def _check_weight(type_, n, parts, args):
    chain = lambda_chain(type_, n, parts)
    count = 0
    for pair in enumerate_admissible(chain, max_pairs=args.max_pairs):
        count += 1
        ct = content(filling_map(chain, pair.w, pair.J))
        if ct != pair.weight:
            return False, f"w={pair.w} J={pair.J}: content {ct} != weight {pair.weight} (doubled)", {}
    return True, None, {"pairs": count}


def _check_character(type_, n, parts, args):
    chain = lambda_chain(type_, n, parts)
    P = tableau_evaluate(type_, n, parts)
    chi = weyl_character(type_, n, chain.lam)
    if P.specialize_t(0) != chi.specialize_t(0):
        return False, f"t=0 specialization differs from the Weyl character {chi}", {}
    orb = orbit_sum(type_, n, chain.lam)
    if P.specialize_t(1) != orb.specialize_t(1):
        return False, "t=1 specialization differs from the orbit sum", {}
    kn = len(kn_fillings(type_, n, parts))
    dim = dimension(type_, n, chain.lam)
    if kn != dim:
        return False, f"{kn} fillings with N=0 but dimension {dim}", {}
    return True, None, {"dimension": dim}


def _check_hhl(type_, n, parts, args):
    if type_ != "C":
        return True, None, {"skipped": "type C only"}
    count = 0
    for s in enumerate_fillings(type_, n, parts):
        if not in_reduction_class(s):
            continue
        count += 1
        h = hhl_stats(hhl_reduction(s), n)
        if not (stat_N(s) == h.cinv == h.cinv_triples and stat_des(s) == h.des):
            return False, f"filling {s.to_json()}: N={stat_N(s)} des={stat_des(s)} vs {h}", {}
    return True, None, {"fillings": count}


def _check_identities(type_, n, parts, args):
    rep = identity_suite(min(n, 3), trials=1000, types=type_)
    return rep.ok, rep.failures[0] if rep.failures else None, {"checked": rep.checked}


def _check_levels(type_, n, parts, args):
    chain = lambda_chain(type_, n, parts)
    for pair in enumerate_admissible(chain, max_pairs=args.max_pairs):
        bad = level_identity_violations(chain, pair)
        if bad:
            return False, f"w={pair.w} J={pair.J}: {bad[0]}", {}
    return True, None, {}


_CHECK_FUNCS: dict[str, Callable] = {
    "chain": _check_chain, "fibers": _check_fibers, "weight": _check_weight,
    "character": _check_character, "hhl": _check_hhl, "identities": _check_identities,
    "levels": _check_levels,
}


def cmd_verify(args) -> int:
    type_, n, parts = _config(args)
    names = DEFAULT_CHECKS if args.checks is None else tuple(
        c for c in args.checks.replace(" ", "").split(",") if c)
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise UsageError(f"unknown checks {unknown}; choose from {', '.join(CHECKS)}")
    report: dict = {"type": type_, "n": n, "lambda": list(parts), "checks": {}}
    ok = True
    for name in names:
        passed, witness, extra = _CHECK_FUNCS[name](type_, n, parts, args)
        report["checks"][name] = {"ok": passed, "witness": witness}
        if name == "fibers":
            report.update({k: extra[k] for k in ("fillings", "pairs", "factor", "fibers")})
        else:
            report["checks"][name].update(extra)
        ok &= passed
    report["ok"] = ok
    if args.format == "json":
        print(json.dumps(report, separators=(",", ":")))
    else:
        for name in names:
            entry = report["checks"][name]
            line = f"{name:<11} {'ok' if entry['ok'] else 'FAIL'}"
            if name == "fibers":
                line += (f"  {report['fillings']} fillings, {report['pairs']} pairs, "
                         f"factor {report['pairs']}/{report['fillings']} = {report['factor']:.3f}")
            print(line)
            if entry["witness"]:
                print(f"  {entry['witness']}")
    return 0 if ok else 1


def cmd_kn(args) -> int:
    type_, n, parts = _config(args)
    chain = lambda_chain(type_, n, parts)
    kn = kn_fillings(type_, n, parts)
    dim = dimension(type_, n, chain.lam)
    if args.emit_fillings:
        _emit(args.emit_fillings, [json.dumps(
            [{"columns": f.to_json(), "N": 0, "des": stat_des(f), "content": list(content(f))}
             for f in kn], separators=(",", ":"))])
    if args.format == "json":
        print(json.dumps({"count": len(kn), "dimension": dim, "ok": len(kn) == dim}))
    else:
        print(f"{len(kn)} fillings with N=0; dimension {dim}: "
              f"{'match' if len(kn) == dim else 'MISMATCH'}")
    return 0 if len(kn) == dim else 1


def cmd_dump_chain(args) -> int:
    type_, n, parts = _config(args)
    chain = lambda_chain(type_, n, parts)
    if args.format == "json":
        print(json.dumps({
            "roots": [[r.i, r.j] for r in chain.roots], "levels": list(chain.levels),
            "segments": [{"group": s.group, "kind": s.kind, "index": s.index,
                          "height": s.height, "start": s.start, "stop": s.stop,
                          "recorded": s.recorded} for s in chain.segments]},
            separators=(",", ":")))
    else:
        sys.stdout.write(dump_chain(chain))
    return 0


def cmd_fibers(args) -> int:
    type_, n, parts = _config(args)
    rep = verify_compression(type_, n, parts, max_pairs=args.max_pairs)
    if args.format == "json":
        print(json.dumps(rep.to_json(), separators=(",", ":")))
    else:
        for f in rep.fibers:
            cols = " ".join("(" + ",".join(map(str, c)) + ")" for c in f.filling.columns)
            mark = "" if f.match else "  MISMATCH"
            print(f"{cols:<40} size {f.size:>3}  sum {tpoly_str(f.total)}{mark}")
        print(f"{rep.fillings} fillings, {rep.pairs} pairs, factor {rep.factor} "
              f"= {float(rep.factor):.3f}")
    return 0 if rep.ok else 1


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-t", "--type", choices=("B", "C"), required=True)
    common.add_argument("-n", type=int, required=True, help="rank")
    common.add_argument("-l", "--lambda", dest="lam",
                        help="comma list: strict partition (C) or mu with parts in 1..n (B)")
    common.add_argument("--coeffs", help="type B: coefficients of lambda on the fundamental weights")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: $HLBC_THREADS or cpu count)")
    common.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS,
                        help="abort if more admissible pairs than this")

    parser = argparse.ArgumentParser(prog="hlbc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="print P_lambda")
    p.add_argument("--method", choices=("tableau", "alcove", "both"), default="tableau")
    p.add_argument("--emit-pairs", metavar="FILE", help="JSON lines of admissible pairs ('-' = stdout)")
    p.add_argument("--emit-fillings", metavar="FILE", help="JSON array of fillings ('-' = stdout)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", parents=[common], help="run consistency checks")
    p.add_argument("--checks", help=f"comma list from {','.join(CHECKS)} "
                                    f"(default {','.join(DEFAULT_CHECKS)})")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kn", parents=[common], help="count fillings with N=0")
    p.add_argument("--emit-fillings", metavar="FILE")
    p.set_defaults(func=cmd_kn)

    p = sub.add_parser("dump-chain", parents=[common], help="print the lambda-chain")
    p.set_defaults(func=cmd_dump_chain)

    p = sub.add_parser("fibers", parents=[common], help="fiber sizes and sums of the filling map")
    p.set_defaults(func=cmd_fibers)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.threads is not None and args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except PairCapExceeded as e:
        print(f"error: {e}; raise --max-pairs to continue", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
