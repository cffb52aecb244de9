"""Scaling benchmarks over named families of queries.

Each family turns a size ``n`` into one query, runs it through the dispatcher,
and records the value, the path taken and the wall time.  Where an oracle is
cheap enough it is run as well and the two values are compared.
"""

from __future__ import annotations

import json
import logging
import math
import statistics
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from .partitions import aft, dimension, durfee

log = logging.getLogger(__name__)

__all__ = ["BenchRecord", "FAMILIES", "plancherel_greedy", "run_bench", "loglog_slope"]


@dataclass
class BenchRecord:
    id: int
    family: str
    n: int
    query: dict
    path: str
    value: str
    time_ms: float
    aft: list
    durfee: list
    oracle: Optional[str] = None
    agrees: Optional[bool] = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def plancherel_greedy(n: int) -> tuple[int, ...]:
    """Grow a shape one box at a time, always taking the box that maximises f.

    A cheap deterministic stand-in for a typical (Plancherel-like) shape.
    """
    lam: tuple[int, ...] = ()
    for _ in range(n):
        best = None
        for i in range(len(lam) + 1):
            row = lam[i] if i < len(lam) else 0
            if i and row + 1 > lam[i - 1]:
                continue
            cand = list(lam) + [0]
            cand[i] += 1
            cand = tuple(x for x in cand if x)
            f = dimension(cand)
            if best is None or f > best[0]:
                best = (f, cand)
        lam = best[1]
    return lam


def _kron_aft2(n: int, cache_dir=None, workers: int = 1):
    from .kronecker import kronecker_character, kronecker_dispatch

    lam = plancherel_greedy(n)
    nu = (n - 2, 1, 1)
    return (
        {"lambda": lam, "mu": lam, "nu": nu},
        (lam, lam, nu),
        lambda: kronecker_dispatch(lam, lam, nu, cache_dir=cache_dir, workers=workers),
        lambda: kronecker_character(lam, lam, nu, cache_dir),
    )


def _pleth_aft1(n: int, cache_dir=None, workers: int = 1):
    from .plethysm import plethysm_dispatch
    from .symfunc import plethysm_coefficient_oracle

    m = 2
    d = max(1, n // m)
    lam = (d * m - 1, 1)
    return (
        {"lambda": lam, "d": d, "m": m},
        (lam,),
        lambda: plethysm_dispatch(lam, d, m),
        lambda: plethysm_coefficient_oracle(lam, d, m),
    )


def _lr_poly(n: int, cache_dir=None, workers: int = 1):
    from .lr import lr_via_polytope, lr_via_tableaux

    t = max(1, n // 6)
    lam, mu = (3 * t, 2 * t, t), (2 * t, t)
    return (
        {"lambda": lam, "mu": mu, "nu": mu},
        (lam, mu, mu),
        lambda: (lr_via_polytope(lam, mu, mu), "polytope"),
        lambda: lr_via_tableaux(lam, mu, mu),
    )


FAMILIES: dict[str, Callable] = {
    "kron-aft2": _kron_aft2,
    "pleth-aft1": _pleth_aft1,
    "lr-poly": _lr_poly,
}


def run_bench(
    family: str,
    n_grid: Iterable[int],
    oracle_max_n: int = 12,
    time_budget_s: float = 60.0,
    cache_dir=None,
    workers: int = 1,
) -> Iterator[BenchRecord]:
    """Yield one record per grid point; stop early once a query blows the budget."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    runner = FAMILIES[family]
    for idx, n in enumerate(n_grid):
        query, parts, compute, oracle_fn = runner(n, cache_dir, workers)
        start = time.perf_counter()
        value, path = compute()
        elapsed = time.perf_counter() - start
        oracle = oracle_fn() if sum(parts[0]) <= oracle_max_n else None
        rec = BenchRecord(
            id=idx,
            family=family,
            n=n,
            query={k: list(v) if isinstance(v, tuple) else v for k, v in query.items()},
            path=path,
            value=str(value),
            time_ms=round(elapsed * 1000, 3),
            aft=[aft(p) for p in parts],
            durfee=[durfee(p) for p in parts],
            oracle=None if oracle is None else str(oracle),
            agrees=None if oracle is None else oracle == value,
        )
        yield rec
        if elapsed > time_budget_s:
            log.warning("query at n=%d took %.1fs (> %.0fs); dropping the rest of the grid", n, elapsed, time_budget_s)
            return


def loglog_slope(records: Iterable[BenchRecord]) -> Optional[float]:
    """Least-squares slope of log(time) against log(n), or None with < 2 usable points."""
    pts = [(math.log(r.n), math.log(r.time_ms)) for r in records if r.n > 0 and r.time_ms > 0]
    if len(pts) < 2 or len({x for x, _ in pts}) < 2:
        return None
    xs, ys = zip(*pts)
    return statistics.linear_regression(xs, ys).slope
