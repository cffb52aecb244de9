"""Plethysm coefficients a^λ_{d,m} = <h_d[h_m], s_λ>.

Write the monomials of h_m in k variables as weak compositions ``b`` of m,
ordered lexicographically.  A monomial of ``h_d[h_m]`` is a strictly
increasing chain ``b^1 < ... < b^r`` with multiplicities ``c_i >= 1`` summing to
d, contributing ``x^(c_1 b^1 + ... + c_r b^r)``.  Extracting the Schur
coefficient with the alternant gives

    a^λ_{d,m} = Σ_σ sgn σ · #{chains with Σ c_i b^i = λ + δ(k) - σ(δ(k))}

The chains are split by ``j̄``, the positions where consecutive blocks first
differ; each piece is the polytope counted by :func:`count_Q_points`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Optional, Sequence

from .errors import Infeasible, PreconditionViolated, SizeMismatch
from .partitions import aft, as_partition, compositions_of, signed_permutations

__all__ = [
    "staircase",
    "QSpec",
    "count_Q_points",
    "plethysm_hh",
    "plethysm_hh_reduced",
    "plethysm_dispatch",
    "sigma_targets",
    "GENERAL_BUDGET",
    "DEFAULT_ORACLE_MAX_N",
]

GENERAL_BUDGET = 24  # d * ℓ(λ) ceiling for the general signed formula
REDUCED_MAX_AFT = 3
DEFAULT_ORACLE_MAX_N = 20


def staircase(k: int) -> tuple[int, ...]:
    if k < 1:
        raise ValueError("k must be positive")
    return tuple(range(k - 1, -1, -1))


def sigma_targets(lam: Sequence[int], k: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Pairs ``(λ + δ(k) - σ(δ(k)), sgn σ)`` with no negative entry.

    Entry j (1-based) is ``λ_j - j + σ(j)``, so σ(j) >= j - λ_j is enforced
    while the permutation is built.
    """
    lam = tuple(lam) + (0,) * (k - len(lam))
    lower = [j + 1 - lam[j] for j in range(k)]
    for perm, sign in signed_permutations(k, lower):
        yield tuple(lam[j] - (j + 1) + perm[j] for j in range(k)), sign


@dataclass(frozen=True)
class QSpec:
    """Chains ``b^1 < ... < b^r`` of weak compositions of m in k parts.

    Consecutive blocks agree before position ``jbar[i]`` (1-based) and increase
    strictly there; ``Σ c_i b^i`` must equal ``target``.  When ``below`` is set
    every block must also be lexicographically smaller than it.
    """

    k: int
    c: tuple[int, ...]
    jbar: tuple[int, ...]
    target: tuple[int, ...]
    m: int
    below: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if len(self.c) and len(self.jbar) != len(self.c) - 1:
            raise ValueError("jbar must have one entry fewer than c")
        if len(self.target) != self.k:
            raise ValueError("target must have k entries")


def _blocks_after(prev: tuple[int, ...], j: int, m: int, k: int) -> Iterator[tuple[int, ...]]:
    """Compositions agreeing with ``prev`` before index j (0-based) and larger at j."""
    head = prev[:j]
    room = m - sum(head)
    for v in range(prev[j] + 1, room + 1):
        if j == k - 1:
            if v == room:
                yield head + (v,)
            continue
        for tail in compositions_of(room - v, k - j - 1):
            yield head + (v,) + tail


def count_Q_points(spec: QSpec) -> int:
    """Integer points of Q(j̄, c, target), by assigning blocks in order.

    After each block the residual ``target - Σ_{s<=i} c_s b^s`` must lie in
    ``[0, (c_{i+1} + ... + c_r) m]`` coordinatewise.
    """
    k, c, m, target = spec.k, spec.c, spec.m, spec.target
    if any(t < 0 for t in target):
        return 0
    r = len(c)
    if r == 0:
        return 1 if not any(target) else 0
    if sum(target) != sum(c) * m:
        return 0
    tails = [sum(c[i:]) for i in range(r + 1)]

    def ok(block: tuple[int, ...], i: int, residual: tuple[int, ...]) -> Optional[tuple[int, ...]]:
        if spec.below is not None and block >= spec.below:
            return None
        new = tuple(x - c[i] * b for x, b in zip(residual, block))
        cap = tails[i + 1] * m
        if all(0 <= x <= cap for x in new):
            return new
        return None

    @lru_cache(maxsize=None)
    def go(i: int, prev: tuple[int, ...], residual: tuple[int, ...]) -> int:
        if i == r:
            return 1 if not any(residual) else 0
        candidates = compositions_of(m, k) if i == 0 else _blocks_after(prev, spec.jbar[i - 1] - 1, m, k)
        total = 0
        for block in candidates:
            new = ok(block, i, residual)
            if new is not None:
                total += go(i + 1, block, new)
        return total

    return go(0, (), tuple(target))


def _check(lam, d: int, m: int) -> tuple[int, ...]:
    lam = tuple(as_partition(lam))
    if d < 1 or m < 1:
        raise ValueError("d and m must be positive")
    if d * m != sum(lam):
        raise SizeMismatch(f"d*m = {d * m} but |λ| = {sum(lam)}")
    return lam


def _blocks_between(prev: Optional[tuple[int, ...]], cap: tuple[int, ...], m: int,
                    below: Optional[tuple[int, ...]]) -> Iterator[tuple[int, ...]]:
    """Compositions b of m with b <= cap coordinatewise and prev < b (< below) in lex order.

    Generated coordinate by coordinate, tracking whether the prefix still
    equals ``prev`` (resp. ``below``), so out-of-range blocks are never built.
    """
    k = len(cap)
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] + cap[i]
    b = [0] * k

    def rec(i: int, left: int, tight_lo: bool, tight_hi: bool) -> Iterator[tuple[int, ...]]:
        if i == k:
            if left == 0 and not tight_lo and not tight_hi:
                yield tuple(b)
            return
        lo = max(left - suffix[i + 1], prev[i] if tight_lo else 0)
        hi = min(cap[i], left, below[i] if tight_hi else left)
        for v in range(lo, hi + 1):
            b[i] = v
            yield from rec(i + 1, left - v,
                           tight_lo and v == prev[i],
                           tight_hi and v == below[i])

    yield from rec(0, m, prev is not None, below is not None)


@lru_cache(maxsize=256)
def _chain_counter(k: int, m: int, max_mult: Optional[int] = None, max_len: Optional[int] = None,
                   below: Optional[tuple[int, ...]] = None):
    """Memoised count of lex-increasing chains with multiplicities hitting a residual.

    Summing the Q counts over every r, c and j̄ is the same as counting all
    pairs (increasing chain, positive multiplicities) with the right weighted
    sum; this routine does that directly.  Call ``go(None, target, budget)``.
    """

    @lru_cache(maxsize=None)
    def go(prev: Optional[tuple[int, ...]], residual: tuple[int, ...], budget: int) -> int:
        if not any(residual):
            return 1
        if budget == 0:
            return 0
        left = sum(residual) // m  # multiplicity still to be placed
        top = left if max_mult is None else min(left, max_mult)
        nxt = budget - 1 if budget > 0 else budget
        total = 0
        for b in _blocks_between(prev, residual, m, below):
            for cm in range(1, top + 1):
                new = tuple(x - cm * y for x, y in zip(residual, b))
                if min(new) < 0:
                    break
                total += go(b, new, nxt)
        return total

    return go, (max_len if max_len is not None else -1)


@lru_cache(maxsize=1 << 16)
def _monomial_count(m: int, key: tuple[int, ...]) -> int:
    """Chains with weighted sum ``key`` (a partition), in ``len(key)`` variables."""
    if not key:
        return 1
    return _chain_counter(len(key), m)[0](None, key, -1)


def plethysm_hh(lam, d: int, m: int, fused: bool = True) -> int:
    """a^λ_{d,m} from the signed formula with k = ℓ(λ) variables.

    ``fused=False`` runs the literal quadruple sum over σ, r, c and j̄ with one
    :func:`count_Q_points` call per polytope.  The default merges the inner
    three sums into one memoised chain count, which gives the same number.
    """
    lam = _check(lam, d, m)
    k = len(lam)
    total = 0
    if fused:
        # Σ_{r,c,j̄} |Q(j̄, c, α)| is the coefficient of x^α in h_d[h_m], which is
        # symmetric in α; a zero entry just removes a variable.  So each count
        # is taken on the sorted nonzero entries of α and shared across σ.
        for target, sign in sigma_targets(lam, k):
            total += sign * _monomial_count(m, tuple(sorted((t for t in target if t), reverse=True)))
    else:
        for target, sign in sigma_targets(lam, k):
            for r in range(1, d + 1):
                for c in compositions_of(d, r, strong=True):
                    for jbar in product(range(1, k + 1), repeat=r - 1):
                        total += sign * count_Q_points(QSpec(k, c, jbar, target, m))
    if total < 0:
        raise AssertionError(f"signed plethysm sum negative for {lam}, d={d}, m={m}")
    return total


def plethysm_hh_reduced(lam, d: int, m: int, fused: bool = True) -> int:
    """a^λ_{d,m} for small K = aft(λ) and d > 4K³, with only K+1 variables.

    The largest block is forced to be ``(m, 0, ..., 0)`` with multiplicity
    ``c_r = d - (c_1 + ... + c_{r-1})``; it is subtracted from the target and
    the remaining chain has at most 4K³ blocks, each lexicographically
    below ``(m, 0, ..., 0)`` and each with multiplicity in [1, 2K].
    """
    lam = _check(lam, d, m)
    K = aft(lam)
    if lam and lam[0] < len(lam):
        raise PreconditionViolated("needs λ_1 >= ℓ(λ); transpose first")
    if d <= 4 * K**3 and K > 0:
        raise PreconditionViolated(f"needs d > 4K³ = {4 * K**3}, got d = {d}")
    k = K + 1
    top = (m,) + (0,) * (k - 1)
    max_len = 4 * K**3
    total = 0
    if fused:
        go, _ = _chain_counter(k, m, max_mult=2 * K, below=top)
        for target, sign in sigma_targets(lam, k):
            for rest in range(0, min(d - 1, 2 * K * max_len) + 1):
                cr = d - rest
                hat = (target[0] - cr * m,) + target[1:]
                if hat[0] < 0:
                    continue
                total += sign * go(None, hat, max_len)
    else:
        for target, sign in sigma_targets(lam, k):
            for r in range(1, max_len + 2):
                for cs in product(range(1, 2 * K + 1), repeat=r - 1):
                    cr = d - sum(cs)
                    if cr < 1:
                        continue
                    hat = (target[0] - cr * m,) + target[1:]
                    if hat[0] < 0:
                        continue
                    for jbar in product(range(1, k + 1), repeat=max(r - 2, 0)):
                        total += sign * count_Q_points(QSpec(k, tuple(cs), jbar, hat, m, below=top))
    if total < 0:
        raise AssertionError(f"signed plethysm sum negative for {lam}, d={d}, m={m}")
    return total


def choose_plethysm_path(lam, d: int, m: int, oracle_max_n: int = DEFAULT_ORACLE_MAX_N,
                         general_budget: int = GENERAL_BUDGET, reduced_max_aft: int = REDUCED_MAX_AFT) -> str:
    lam = _check(lam, d, m)
    K = aft(lam)
    ell = len(lam)
    reduced_ok = (not lam or lam[0] >= ell) and d > 4 * K**3
    if reduced_ok and 1 <= K <= reduced_max_aft:
        return "reduced"
    if d * ell <= general_budget:
        return "general"
    if reduced_ok and K == 0:
        return "reduced"
    if sum(lam) <= oracle_max_n:
        return "oracle"
    raise Infeasible(f"no plethysm path within budget for λ={lam}, d={d}, m={m}")


def plethysm_dispatch(lam, d: int, m: int, path: str = "auto", oracle_max_n: int = DEFAULT_ORACLE_MAX_N,
                      general_budget: int = GENERAL_BUDGET) -> tuple[int, str]:
    """Return ``(a^λ_{d,m}, path)``.  λ is never transposed."""
    lam = _check(lam, d, m)
    if path == "auto":
        path = choose_plethysm_path(lam, d, m, oracle_max_n, general_budget)
    if path == "general":
        return plethysm_hh(lam, d, m), path
    if path == "reduced":
        return plethysm_hh_reduced(lam, d, m), path
    if path == "oracle":
        from .symfunc import plethysm_coefficient_oracle

        return plethysm_coefficient_oracle(lam, d, m), path
    raise ValueError(f"unknown plethysm path {path!r}")
