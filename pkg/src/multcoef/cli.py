"""``multcoef`` command line.

Exit codes: 0 success, 2 unreadable input, 3 no algorithm fits the budget,
4 sizes that do not match, 5 two algorithm paths (or a self-test oracle)
disagree.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
import time
from pathlib import Path
from typing import Callable, Optional, Sequence

from . import __version__
from .bench import FAMILIES, loglog_slope, run_bench
from .errors import Infeasible, PartitionParseError, PreconditionViolated, SizeMismatch
from .growth import POLY_AFT_THRESHOLD, classify_growth
from .kronecker import DEFAULT_AFT_THRESHOLD, DEFAULT_ORACLE_MAX_N, kronecker_character, kronecker_dispatch
from .lr import lr_count, lr_small_skew, lr_via_polytope, lr_via_tableaux, multi_lr, skew_kostka_as_lr
from .partitions import contains, dimension, parse_partition, partitions_list
from .plethysm import GENERAL_BUDGET, plethysm_dispatch, plethysm_hh, plethysm_hh_reduced
from .selftest import SelfTestFailure, run_selftest
from .tableaux import SkewShape, enumerate_ssyt, kostka

log = logging.getLogger("multcoef")

EXIT_OK, EXIT_PARSE, EXIT_BUDGET, EXIT_SIZE, EXIT_MISMATCH = 0, 2, 3, 4, 5

# paranoid mode only runs the exponential cross-checks below these sizes
PARANOID_BRUTE_N = 12


class PathMismatch(Exception):
    def __init__(self, values: dict):
        super().__init__("algorithm paths disagree: " + ", ".join(f"{k}={v}" for k, v in values.items()))
        self.values = values


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _partition(text: str):
    return parse_partition(text)


def _weight(text: str) -> tuple[int, ...]:
    """A weak composition: nonnegative integers in any order."""
    body = text.strip().strip("[]()")
    tokens = [t for t in re.split(r"[,\s]+", body) if t]
    if not all(re.fullmatch(r"\d+", t) for t in tokens):
        raise PartitionParseError(f"not a weak composition: {text!r}")
    return tuple(int(t) for t in tokens)


def _skew(text: str) -> SkewShape:
    if "/" in text:
        return SkewShape.parse(text)
    return SkewShape(parse_partition(text))


def _agree(values: dict):
    distinct = set(values.values())
    if len(distinct) != 1:
        raise PathMismatch(values)
    return distinct.pop()


# ---------------------------------------------------------------- queries


def run_dim(args):
    lam = _partition(args.partition)
    value = dimension(lam)
    if args.paranoid:
        checks = {"hook-length": value}
        if sum(lam) <= PARANOID_BRUTE_N:
            checks["kostka-1^n"] = kostka(lam, (1,) * sum(lam))
        _agree(checks)
    return {"partition": list(lam)}, value, "hook-length"


def run_kostka(args):
    shape = _skew(args.shape)
    weight = _weight(args.weight)
    if sum(weight) != shape.size:
        raise SizeMismatch(f"weight sums to {sum(weight)} but the shape has {shape.size} boxes")
    value = kostka(shape, weight)
    if args.paranoid:
        # permuting the weight does not change a Kostka number
        nu = tuple(sorted((w for w in weight if w), reverse=True))
        theta, alpha, rho = skew_kostka_as_lr(shape, nu)
        checks = {"gelfand-tsetlin": value, "lr-reduction": lr_count(theta, alpha, rho)}
        if shape.size <= PARANOID_BRUTE_N:
            checks["brute-force"] = sum(1 for _ in enumerate_ssyt(shape, weight))
        _agree(checks)
    query = {"outer": list(shape.outer), "inner": list(shape.inner), "weight": list(weight)}
    return query, value, "gelfand-tsetlin"


_LR_ALGOS = {"poly": lr_via_polytope, "tab": lr_via_tableaux, "small": lr_small_skew}


def run_lr(args):
    lam, mu, nu = (_partition(t) for t in (args.lam, args.mu, args.nu))
    if sum(lam) != sum(mu) + sum(nu):
        raise SizeMismatch(f"|λ|={sum(lam)} but |μ|+|ν|={sum(mu) + sum(nu)}")
    value = _LR_ALGOS[args.algo](lam, mu, nu)
    if args.paranoid:
        checks = {"poly": lr_via_polytope(lam, mu, nu)}
        if sum(nu) <= PARANOID_BRUTE_N:
            checks["tab"] = lr_via_tableaux(lam, mu, nu)
            checks["small"] = lr_small_skew(lam, mu, nu)
        checks[args.algo] = value
        _agree(checks)
    return {"lambda": list(lam), "mu": list(mu), "nu": list(nu)}, value, args.algo


def _multi_lr_by_folding(lam, factors) -> int:
    """Multiply the factors left to right, keeping only shapes inside λ."""
    layer = {(): 1}
    for f in factors:
        nxt: dict = {}
        size = sum(next(iter(layer))) + sum(f)
        for beta in partitions_list(size):
            if not contains(lam, beta):
                continue
            total = sum(c * lr_via_tableaux(beta, prev, f) for prev, c in layer.items())
            if total:
                nxt[beta] = total
        if not nxt:
            return 0
        layer = nxt
    return layer.get(tuple(lam), 0)


def run_multilr(args):
    lam = _partition(args.lam)
    factors = [_partition(t) for t in args.factors]
    if sum(map(sum, factors)) != sum(lam):
        raise SizeMismatch(f"|λ|={sum(lam)} but the factors have {sum(map(sum, factors))} boxes")
    value = multi_lr(lam, factors)
    if args.paranoid and sum(lam) <= PARANOID_BRUTE_N:
        _agree({"recursive": value, "folded": _multi_lr_by_folding(lam, factors)})
    return {"lambda": list(lam), "factors": [list(f) for f in factors]}, value, "recursive"


def run_kron(args):
    lam, mu, nu = (_partition(t) for t in (args.lam, args.mu, args.nu))
    strategy = {"char": "character"}.get(args.strategy, args.strategy)
    value, path = kronecker_dispatch(
        lam,
        mu,
        nu,
        strategy=strategy,
        aft_threshold=args.aft_threshold,
        oracle_max_n=args.oracle_budget,
        cache_dir=args.cache_dir,
        workers=args.threads,
    )
    if args.paranoid:
        checks = {path: value}
        if path != "jt":
            checks["jt"] = kronecker_dispatch(lam, mu, nu, strategy="jt", workers=args.threads)[0]
        if path != "character" and sum(lam) <= args.oracle_budget:
            checks["character"] = kronecker_character(lam, mu, nu, args.cache_dir)
        _agree(checks)
    return {"lambda": list(lam), "mu": list(mu), "nu": list(nu)}, value, path


def run_pleth(args):
    lam = _partition(args.lam)
    d, m = args.d, args.m
    value, path = plethysm_dispatch(lam, d, m, path=args.path, oracle_max_n=args.oracle_budget)
    if args.paranoid:
        checks = {path: value}
        if path != "general" and d * len(lam) <= GENERAL_BUDGET:
            checks["general"] = plethysm_hh(lam, d, m)
        if path != "reduced":
            try:
                checks["reduced"] = plethysm_hh_reduced(lam, d, m)
            except PreconditionViolated:
                pass
        if path != "oracle" and sum(lam) <= args.oracle_budget:
            checks["oracle"] = plethysm_dispatch(lam, d, m, path="oracle")[0]
        _agree(checks)
    return {"lambda": list(lam), "d": d, "m": m}, value, path


QUERIES: dict[str, Callable] = {
    "dim": run_dim,
    "kostka": run_kostka,
    "lr": run_lr,
    "multilr": run_multilr,
    "kron": run_kron,
    "pleth": run_pleth,
}


def _emit_query(args, runner) -> int:
    start = time.perf_counter()
    query, value, path = runner(args)
    elapsed = (time.perf_counter() - start) * 1000
    if args.json:
        rec = {"query": {"command": args.command, **query}, "value": str(value), "path": path, "time_ms": round(elapsed, 3)}
        print(json.dumps(rec, sort_keys=True))
    else:
        print(value)
    return EXIT_OK


# ---------------------------------------------------------------- other commands


def run_classify(args) -> int:
    report = classify_growth(_partition(args.partition), poly_aft=args.poly_aft)
    if args.json:
        print(json.dumps(report.to_dict(), sort_keys=True))
    else:
        print(report.label)
        if args.verbose:
            print(f"n={report.n} aft={report.aft} durfee={report.durfee} f={report.f}")
            for name, ok in report.bounds_checked:
                print(f"  {name}: {'ok' if ok else 'VIOLATED'}")
    return EXIT_OK


def run_selftest_cmd(args) -> int:
    def report(res):
        if args.json:
            print(json.dumps({"suite": res.name, "checked": res.checked, "seconds": round(res.seconds, 3)}), flush=True)
        else:
            print(f"{res.name:12s} {res.checked:8d} instances  {res.seconds:8.2f}s", flush=True)

    try:
        run_selftest(args.level, only=args.only, report=report)
    except SelfTestFailure as exc:
        print(f"selftest FAILED: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _grid(text: str) -> list[int]:
    try:
        grid = [int(t) for t in re.split(r"[,\s]+", text.strip()) if t]
    except ValueError:
        raise PartitionParseError(f"not a list of integers: {text!r}") from None
    if not grid or any(n <= 0 for n in grid):
        raise PartitionParseError(f"grid must list positive integers: {text!r}")
    return grid


def run_bench_cmd(args) -> int:
    records = []
    status = EXIT_OK
    for rec in run_bench(
        args.family,
        _grid(args.n_grid),
        oracle_max_n=args.bench_oracle_n,
        time_budget_s=args.time_budget,
        cache_dir=args.cache_dir,
        workers=args.threads,
    ):
        records.append(rec)
        if args.json:
            print(rec.to_json(), flush=True)
        else:
            check = "" if rec.agrees is None else ("  oracle ok" if rec.agrees else f"  ORACLE {rec.oracle}")
            print(f"n={rec.n:<5d} {rec.path:10s} {rec.time_ms:12.3f} ms  value={rec.value}{check}", flush=True)
        if rec.agrees is False:
            status = EXIT_MISMATCH
    slope = loglog_slope(records)
    summary = {"family": args.family, "points": len(records), "loglog_slope": None if slope is None else round(slope, 4)}
    if args.json:
        print(json.dumps(summary, sort_keys=True))
    else:
        print("log-log slope: " + ("n/a" if slope is None else f"{slope:.3f}"))
    return status


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="one JSON object per line")
    common.add_argument("--threads", type=_positive, default=1, help="worker processes for the Jacobi-Trudi sum")
    common.add_argument("--cache-dir", type=Path, default=None, help="directory for cached character tables")
    common.add_argument("--paranoid", action="store_true", help="run every applicable algorithm and compare")
    common.add_argument("--aft-threshold", type=_positive, default=DEFAULT_AFT_THRESHOLD)
    common.add_argument("--oracle-budget", type=_positive, default=DEFAULT_ORACLE_MAX_N, help="largest n for the character and power-sum oracles")
    common.add_argument("--seed", type=int, default=0, help="accepted for reproducibility; the sweeps are exhaustive")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="multcoef", description="Exact Kostka, LR, Kronecker and plethysm coefficients.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", parents=[common], help="number of SYT of shape λ")
    p.add_argument("partition")

    p = sub.add_parser("classify", parents=[common], help="growth class of f^λ")
    p.add_argument("partition")
    p.add_argument("--poly-aft", type=int, default=POLY_AFT_THRESHOLD)

    p = sub.add_parser("kostka", parents=[common], help="K_{λ/μ,ν}")
    p.add_argument("shape", help="λ or λ/μ")
    p.add_argument("weight", help="weak composition, e.g. 2,0,3")

    p = sub.add_parser("lr", parents=[common], help="c^λ_{μν}")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("--algo", choices=sorted(_LR_ALGOS), default="poly")

    p = sub.add_parser("multilr", parents=[common], help="coefficient of s_λ in s_α1 s_α2 ...")
    p.add_argument("lam")
    p.add_argument("factors", nargs="+")

    p = sub.add_parser("kron", parents=[common], help="g(λ,μ,ν)")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("--strategy", choices=["auto", "jt", "char"], default="auto")

    p = sub.add_parser("pleth", parents=[common], help="coefficient of s_λ in h_d[h_m]")
    p.add_argument("lam")
    p.add_argument("d", type=_positive)
    p.add_argument("m", type=_positive)
    p.add_argument("--path", choices=["auto", "general", "reduced", "oracle"], default="auto")

    p = sub.add_parser("selftest", parents=[common], help="exhaustive oracle sweeps")
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    p.add_argument("--only", nargs="+", metavar="SUITE")

    p = sub.add_parser("bench", parents=[common], help="timing over a family of queries")
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("--n-grid", required=True, help="comma-separated sizes, e.g. 20,30,40,60")
    p.add_argument("--time-budget", type=float, default=60.0, help="seconds per query before the grid is cut short")
    p.add_argument("--bench-oracle-n", type=int, default=12, help="run the oracle for n up to this")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.cache_dir is not None:
        args.cache_dir.mkdir(parents=True, exist_ok=True)
    if args.command == "selftest" and args.only:
        from .selftest import SUITES

        unknown = [s for s in args.only if s not in SUITES]
        if unknown:
            print(f"multcoef: unknown suite(s) {unknown}; choose from {list(SUITES)}", file=sys.stderr)
            return EXIT_PARSE
    try:
        if args.command in QUERIES:
            return _emit_query(args, QUERIES[args.command])
        if args.command == "classify":
            return run_classify(args)
        if args.command == "selftest":
            return run_selftest_cmd(args)
        return run_bench_cmd(args)
    except PartitionParseError as exc:
        print(f"multcoef: cannot parse input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeMismatch as exc:
        print(f"multcoef: size mismatch: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (Infeasible, PreconditionViolated) as exc:
        print(f"multcoef: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except PathMismatch as exc:
        print(f"multcoef: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
