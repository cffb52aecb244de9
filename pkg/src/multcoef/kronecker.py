"""Kronecker coefficients g(λ, μ, ν).

Two independent routes:

* :func:`kronecker_character` sums ``χ^λ χ^μ χ^ν / z_α`` over the character table;
* :func:`kronecker_jt` expands ``s_ν[xy]`` by Jacobi-Trudi into signed products of
  ``h_t[xy] = Σ_{α ⊢ t} s_α(x) s_α(y)`` and reads off
  ``g = Σ_σ sgn σ Σ_{α^i ⊢ t_i} c^λ_{α^1..α^ℓ} c^μ_{α^1..α^ℓ}``
  with ``t_i = ν_i + σ(i) - i``.  The work is polynomial in n when
  ``n - ν_1`` is bounded.

:func:`kronecker_dispatch` uses the S_3 symmetry and ``g(λ,μ,ν) = g(λ,μ',ν')`` to
move the argument with the smallest ``n - (first part)`` into the ν slot.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import combinations, product
from math import factorial
from typing import Iterator, Optional, Sequence

from .characters import character_table
from .errors import Infeasible, SizeMismatch
from .lr import multi_lr_raw
from .partitions import as_partition, compositions_of, conjugate, contains, partitions_list, signed_permutations

__all__ = [
    "kronecker_character",
    "kronecker_jt",
    "kronecker_dispatch",
    "kronecker",
    "DEFAULT_AFT_THRESHOLD",
    "DEFAULT_ORACLE_MAX_N",
]

DEFAULT_AFT_THRESHOLD = 6
DEFAULT_ORACLE_MAX_N = 18


def _triple(lam, mu, nu) -> tuple[tuple, tuple, tuple]:
    lam, mu, nu = (tuple(as_partition(p)) for p in (lam, mu, nu))
    if not sum(lam) == sum(mu) == sum(nu):
        raise SizeMismatch(f"sizes differ: |{lam}|={sum(lam)}, |{mu}|={sum(mu)}, |{nu}|={sum(nu)}")
    return lam, mu, nu


def kronecker_character(lam, mu, nu, cache_dir: Optional[os.PathLike] = None) -> int:
    lam, mu, nu = _triple(lam, mu, nu)
    n = sum(lam)
    table = character_table(n, cache_dir)
    a, b, c = table.row(lam), table.row(mu), table.row(nu)
    nfact = factorial(n)
    total = 0
    for j, z in enumerate(table.z):
        if a[j] and b[j] and c[j]:
            total += a[j] * b[j] * c[j] * (nfact // z)
    g, rem = divmod(total, nfact)
    if rem:
        raise AssertionError(f"character sum for {lam},{mu},{nu} is not integral")
    if g < 0:
        raise AssertionError(f"character sum for {lam},{mu},{nu} is negative")
    return g


@lru_cache(maxsize=1 << 16)
def _first_factor_list(base: tuple, other: tuple, remove: int) -> tuple:
    return tuple(_first_factors(base, other, remove))


def _first_factors(base: tuple, other: tuple, remove: int) -> Iterator[tuple]:
    """Partitions obtained from ``base`` by deleting ``remove`` boxes, kept if inside ``other``.

    Rows to shorten are chosen as a set of r positions together with a strong
    composition of ``remove`` into r parts; each result that is a partition
    is produced once.
    """
    if remove == 0:
        if contains(other, base):
            yield base
        return
    L = len(base)
    for r in range(1, min(remove, L) + 1):
        for rows in combinations(range(L), r):
            for cuts in compositions_of(remove, r, strong=True):
                cand = list(base)
                ok = True
                for i, c in zip(rows, cuts):
                    cand[i] -= c
                    if cand[i] < 0:
                        ok = False
                        break
                if not ok:
                    continue
                if any(cand[i] < cand[i + 1] for i in range(L - 1)):
                    continue
                while cand and cand[-1] == 0:
                    cand.pop()
                cand = tuple(cand)
                if contains(other, cand):
                    yield cand


@lru_cache(maxsize=1 << 16)
def _sigma_term(lam: tuple, mu: tuple, targets: tuple) -> int:
    """Σ over α^i ⊢ t_i of c^λ_{α^1..α^ℓ} c^μ_{α^1..α^ℓ}.

    The sum does not depend on the order of the t_i, so callers pass them
    sorted with the largest first; α^1 (the big factor) is then found by
    deleting ``n - t_1`` boxes from the shorter of λ and μ.
    """
    n = sum(lam)
    short, long_ = (lam, mu) if len(lam) <= len(mu) else (mu, lam)
    meet = tuple(x for x in (min(a, b) for a, b in zip(lam, mu)) if x)
    firsts = _first_factor_list(short, long_, n - targets[0])
    if not firsts:
        return 0
    others = []
    for t in targets[1:]:
        if t == 0:
            continue
        opts = [a for a in partitions_list(t, meet[0] if meet else 0, len(meet)) if contains(meet, a)]
        if not opts:
            return 0
        others.append(opts)
    total = 0
    for a1 in firsts:
        for rest in product(*others):
            factors = (a1,) + rest
            x = multi_lr_raw(lam, factors)
            if x:
                y = multi_lr_raw(mu, factors)
                if y:
                    total += x * y
    return total


def _targets(nu: tuple, perm: Sequence[int]) -> list[int]:
    return [nu[i] + perm[i] - (i + 1) for i in range(len(nu))]


def _chunk_sum(args) -> int:
    lam, mu, nu, perms = args
    return sum(
        sign * _sigma_term(lam, mu, tuple(sorted(_targets(nu, perm), reverse=True))) for perm, sign in perms
    )


def kronecker_jt(lam, mu, nu, workers: int = 1) -> int:
    """g(λ, μ, ν) by the signed Jacobi-Trudi sum over σ ∈ S_ℓ(ν).

    Permutations with a negative ``t_i`` are never generated.  With
    ``workers > 1`` the permutations are split across processes.
    """
    lam, mu, nu = _triple(lam, mu, nu)
    if not nu:
        return 1
    ell = len(nu)
    # t_i >= 0  <=>  σ(i) >= i - ν_i
    lower = [i + 1 - nu[i] for i in range(ell)]
    perms = list(signed_permutations(ell, lower))
    if workers > 1 and len(perms) > 1:
        chunks = [perms[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            total = sum(pool.map(_chunk_sum, [(lam, mu, nu, c) for c in chunks if c]))
    else:
        total = _chunk_sum((lam, mu, nu, perms))
    if total < 0:
        raise AssertionError(f"signed sum for {lam},{mu},{nu} came out negative: {total}")
    return total


def _best_arrangement(lam: tuple, mu: tuple, nu: tuple) -> tuple[tuple, tuple, tuple, int]:
    """Equivalent triple whose last entry has the smallest ``n - first part``.

    Candidates are the six orderings, each optionally with the last entry and
    one of the other two transposed.  Ties go to the shortest last entry and
    then to the smallest ``min(ℓ(λ), ℓ(μ))``.
    """
    n = sum(lam)
    best = None
    args = [lam, mu, nu]
    orders = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 0, 1), (1, 2, 0), (2, 1, 0)]
    for a, b, c in orders:
        x, y, z = args[a], args[b], args[c]
        for cand in ((x, y, z), (tuple(conjugate(x)), y, tuple(conjugate(z))), (x, tuple(conjugate(y)), tuple(conjugate(z)))):
            p, q, r = cand
            key = (n - (r[0] if r else 0), len(r), min(len(p), len(q)), cand)
            if best is None or key < best[0]:
                best = (key, cand)
    p, q, r = best[1]
    return p, q, r, best[0][0]


def kronecker_dispatch(
    lam,
    mu,
    nu,
    strategy: str = "auto",
    aft_threshold: int = DEFAULT_AFT_THRESHOLD,
    oracle_max_n: int = DEFAULT_ORACLE_MAX_N,
    cache_dir: Optional[os.PathLike] = None,
    workers: int = 1,
) -> tuple[int, str]:
    """Return ``(g, path)`` where path is ``"jt"`` or ``"character"``."""
    lam, mu, nu = _triple(lam, mu, nu)
    n = sum(lam)
    if strategy == "character":
        return kronecker_character(lam, mu, nu, cache_dir), "character"
    p, q, r, cost = _best_arrangement(lam, mu, nu)
    if strategy == "jt":
        return kronecker_jt(p, q, r, workers=workers), "jt"
    if strategy != "auto":
        raise ValueError(f"unknown strategy {strategy!r}")
    if cost <= aft_threshold:
        return kronecker_jt(p, q, r, workers=workers), "jt"
    if n <= oracle_max_n:
        return kronecker_character(lam, mu, nu, cache_dir), "character"
    raise Infeasible(
        f"smallest aft among the arguments is {cost} > {aft_threshold} and n={n} exceeds the character budget {oracle_max_n}"
    )


def kronecker(lam, mu, nu, strategy: str = "auto", **kwargs) -> int:
    return kronecker_dispatch(lam, mu, nu, strategy=strategy, **kwargs)[0]
