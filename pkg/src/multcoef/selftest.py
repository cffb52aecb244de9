"""Oracle-equivalence and invariant sweeps behind ``multcoef selftest``.

Each suite walks its instances from small to large and raises
:class:`SelfTestFailure` at the first disagreement, so the reported instance
is a smallest one.  ``quick`` shrinks the bounds of ``full`` by about two.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Iterator

from .characters import character_table
from .errors import MultCoefError
from .growth import check_aft_bounds, check_lr_ratio_bound, check_regev_bound
from .kronecker import kronecker, kronecker_character, kronecker_jt
from .lr import lr_small_skew, lr_via_polytope, lr_via_tableaux
from .partitions import aft, compositions_of, conjugate, contains, dimension, partitions_list
from .plethysm import plethysm_hh, plethysm_hh_reduced
from .symfunc import gen_s, multiply, plethysm_coefficient_oracle, schur_expand
from .tableaux import SkewShape, enumerate_ssyt, kostka

__all__ = ["SelfTestFailure", "SuiteResult", "SUITES", "run_selftest", "kostka_weights", "aft_small_partitions"]


class SelfTestFailure(MultCoefError):
    def __init__(self, suite: str, instance, detail: str):
        super().__init__(f"[{suite}] {instance}: {detail}")
        self.suite = suite
        self.instance = instance
        self.detail = detail


@dataclass
class SuiteResult:
    name: str
    checked: int
    seconds: float


def _expect(suite: str, instance, got, want) -> None:
    if got != want:
        raise SelfTestFailure(suite, instance, f"got {got}, expected {want}")


def kostka_weights(n: int, weak_len: int = 4) -> Iterator[tuple[int, ...]]:
    """Every strong composition of n, then the weak ones of length <= ``weak_len`` with a zero.

    Zeros in a weight do not change a Kostka number, so this covers every
    distinct value of the weak case.
    """
    if n == 0:
        yield ()
    for r in range(1, n + 1):
        yield from compositions_of(n, r, strong=True)
    for r in range(1, weak_len + 1):
        for c in compositions_of(n, r):
            if 0 in c:
                yield c


def aft_small_partitions(n: int, max_aft: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n with aft <= ``max_aft``, each exactly once."""
    seen = set()
    for j in range(0, min(max_aft, n) + 1):
        first = n - j
        for rest in partitions_list(j, first if first else None):
            lam = ((first,) if first else ()) + rest
            if lam and lam[0] < len(lam):
                continue
            for cand in (lam, tuple(conjugate(lam))):
                if aft(cand) <= max_aft and cand not in seen:
                    seen.add(cand)
                    yield cand


def suite_kronecker(level: str) -> int:
    full_n, aft_ns = (6, (7, 8, 9)) if level == "full" else (4, (5, 6, 7))
    count = 0
    for n in range(2, full_n + 1):
        ps = partitions_list(n)
        for triple in itertools.product(ps, repeat=3):
            _expect("kronecker", triple, kronecker_jt(*triple), kronecker_character(*triple))
            count += 1
    for n in aft_ns:
        ps = partitions_list(n)
        for nu in ps:
            if aft(nu) > 3:
                continue
            for lam, mu in itertools.product(ps, repeat=2):
                _expect("kronecker", (lam, mu, nu), kronecker_jt(lam, mu, nu), kronecker_character(lam, mu, nu))
                count += 1
    return count


def suite_lr(level: str) -> int:
    top = 8 if level == "full" else 6
    count = 0
    for n in range(0, top + 1):
        k = max(n, 1)
        for m in range(0, n + 1):
            for mu in partitions_list(m):
                for nu in partitions_list(n - m):
                    product = schur_expand(multiply(gen_s(mu, k), gen_s(nu, k)))
                    for lam in partitions_list(n):
                        inst = (lam, mu, nu)
                        tab = lr_via_tableaux(lam, mu, nu)
                        _expect("lr", inst + ("polytope",), lr_via_polytope(lam, mu, nu), tab)
                        _expect("lr", inst + ("oracle",), product.get(lam, 0), tab)
                        if sum(nu) <= 6:
                            _expect("lr", inst + ("small",), lr_small_skew(lam, mu, nu), tab)
                        count += 1
    return count


def suite_kostka(level: str) -> int:
    top, dim_top = (7, 10) if level == "full" else (5, 8)
    count = 0
    for n in range(0, top + 1):
        for lam in partitions_list(n):
            for j in range(0, n + 1):
                for mu in partitions_list(j):
                    if not contains(lam, mu):
                        continue
                    shape = SkewShape(lam, mu)
                    for w in kostka_weights(n - j):
                        brute = sum(1 for _ in enumerate_ssyt(shape, w))
                        _expect("kostka", (lam, mu, w), kostka(shape, w), brute)
                        count += 1
    for n in range(0, dim_top + 1):
        for lam in partitions_list(n):
            _expect("kostka", (lam, "1^n"), kostka(lam, (1,) * n), dimension(lam))
            count += 1
    return count


def suite_plethysm(level: str) -> int:
    top, overlap = (12, 16) if level == "full" else (10, 14)
    count = 0
    for dm in range(1, top + 1):
        for d in (x for x in range(1, dm + 1) if dm % x == 0):
            m = dm // d
            for lam in partitions_list(dm):
                _expect("plethysm", (lam, d, m), plethysm_hh(lam, d, m), plethysm_coefficient_oracle(lam, d, m))
                count += 1
    for dm in range(1, overlap + 1):
        for d in (x for x in range(5, dm + 1) if dm % x == 0):
            m = dm // d
            for lam in partitions_list(dm):
                if aft(lam) <= 1 and lam[0] >= len(lam):
                    _expect("plethysm-reduced", (lam, d, m), plethysm_hh_reduced(lam, d, m), plethysm_hh(lam, d, m))
                    count += 1
    return count


def suite_identities(level: str) -> int:
    sq, lrn, conj, kr = (25, 8, 20, 6) if level == "full" else (23, 6, 18, 4)
    count = 0
    for n in range(0, sq + 1):
        _expect("sum-f-squared", n, sum(dimension(l) ** 2 for l in partitions_list(n)), factorial(n))
        count += 1
    for n in range(0, lrn + 1):
        for m in range(0, n + 1):
            for mu in partitions_list(m):
                for nu in partitions_list(n - m):
                    lhs = sum(lr_via_polytope(lam, mu, nu) * dimension(lam) for lam in partitions_list(n))
                    _expect("lr-weighted", (mu, nu), lhs, comb(n, m) * dimension(mu) * dimension(nu))
                    count += 1
    for n in range(0, conj + 1):
        for lam in partitions_list(n):
            _expect("f-conjugate", lam, dimension(conjugate(lam)), dimension(lam))
            count += 1
    for n in range(1, kr + 1):
        ps = partitions_list(n)
        for a, b, c in itertools.product(ps, repeat=3):
            g = kronecker(a, b, c)
            for p in itertools.permutations((a, b, c)):
                _expect("kron-s3", (a, b, c, p), kronecker(*p), g)
            _expect("kron-transpose", (a, b, c), kronecker(a, conjugate(b), conjugate(c)), g)
            _expect("kron-transpose", (a, b, c), kronecker(conjugate(a), b, conjugate(c)), g)
            count += 1
    return count


def suite_bounds(level: str) -> int:
    an, rn, ln = (40, 20, 8) if level == "full" else (30, 16, 6)
    count = 0
    for n in range(0, an + 1):
        for lam in aft_small_partitions(n, 6):
            _expect("aft-bounds", lam, check_aft_bounds(lam), (True, True))
            count += 1
    for n in range(0, rn + 1):
        for lam in partitions_list(n):
            _expect("regev", lam, check_regev_bound(lam), True)
            count += 1
    for n in range(0, ln + 1):
        for m in range(0, n + 1):
            for mu in partitions_list(m):
                for nu in partitions_list(n - m):
                    for lam in partitions_list(n):
                        c = lr_via_polytope(lam, mu, nu)
                        if c:
                            _expect("lr-ratio", (lam, mu, nu), check_lr_ratio_bound(lam, mu, nu, c), True)
                            count += 1
    return count


def suite_scaling(level: str) -> int:
    from .bench import run_bench

    grid = [4, 6, 8, 10, 12, 20, 30, 40, 60] if level == "full" else [4, 8, 12, 20]
    count = 0
    for rec in run_bench("kron-aft2", grid, oracle_max_n=12):
        if rec.time_ms > 60_000:
            raise SelfTestFailure("scaling", rec.query, f"took {rec.time_ms} ms")
        if rec.agrees is False:
            raise SelfTestFailure("scaling", rec.query, f"jt {rec.value} vs character {rec.oracle}")
        count += 1
    if count != len(grid):
        raise SelfTestFailure("scaling", grid, "grid truncated")
    return count


def suite_characters(level: str) -> int:
    top = 12 if level == "full" else 10
    count = 0
    for n in range(0, top + 1):
        t = character_table(n)
        ps = t.partitions
        for j in range(len(ps)):
            col_j = [row[j] for row in t.values]
            for i in range(j, len(ps)):
                col_i = [row[i] for row in t.values]
                got = sum(x * y for x, y in zip(col_i, col_j))
                _expect("characters", (n, ps[i], ps[j]), got, t.z[j] if i == j else 0)
                count += 1
        identity = ps.index((1,) * n) if n else 0
        for lam, row in zip(ps, t.values):
            _expect("characters", (lam, "identity"), row[identity], dimension(lam))
            count += 1
    return count


SUITES: dict[str, Callable[[str], int]] = {
    "kronecker": suite_kronecker,
    "lr": suite_lr,
    "kostka": suite_kostka,
    "plethysm": suite_plethysm,
    "identities": suite_identities,
    "bounds": suite_bounds,
    "scaling": suite_scaling,
    "characters": suite_characters,
}


def run_selftest(level: str = "quick", only=None, report=None) -> list[SuiteResult]:
    if level not in ("quick", "full"):
        raise ValueError("level must be 'quick' or 'full'")
    results = []
    for name, fn in SUITES.items():
        if only and name not in only:
            continue
        start = time.perf_counter()
        checked = fn(level)
        res = SuiteResult(name, checked, time.perf_counter() - start)
        results.append(res)
        if report:
            report(res)
    return results
