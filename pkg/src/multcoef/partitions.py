"""Integer partitions: parsing, enumeration, hook lengths and shape statistics.

Partitions are tuples of positive integers in weakly decreasing order.  The
:class:`Partition` subclass validates on construction; every function here also
accepts plain tuples, which is what the inner loops of the other modules pass.
"""

from __future__ import annotations

import re
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from .errors import NotDecreasing, PartitionParseError

__all__ = [
    "Partition",
    "FrobeniusCoords",
    "parse_partition",
    "as_partition",
    "conjugate",
    "frobenius",
    "aft",
    "durfee",
    "hook_lengths",
    "dimension",
    "partitions_of",
    "partitions_list",
    "compositions_of",
    "contains",
    "signed_permutations",
    "permutation_sign",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped, so ``Partition((3, 1, 0)) == (3, 1)``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = list(parts)
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if not isinstance(p, int) or isinstance(p, bool):
                raise PartitionParseError(f"part {p!r} is not an integer")
            if p <= 0:
                raise PartitionParseError(f"part {p} at position {i + 1} is not positive")
            if i and p > parts[i - 1]:
                raise NotDecreasing(f"parts {parts} are not weakly decreasing")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def first(self) -> int:
        return self[0] if self else 0

    def conjugate(self) -> "Partition":
        return Partition(conjugate(self))

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "()"


class FrobeniusCoords(NamedTuple):
    arms: tuple[int, ...]
    legs: tuple[int, ...]


_TOKEN = re.compile(r"[,\s]+")


def parse_partition(text: str) -> Partition:
    """Read ``"5,4,2"``, ``"[3,3]"`` or ``"5 4 2"`` as a partition.

    ``""``, ``"()"`` and ``"0"`` all give the empty partition.
    """
    body = text.strip()
    if body[:1] in "[(" and body[-1:] in "])":
        body = body[1:-1]
    tokens = [t for t in _TOKEN.split(body.strip()) if t]
    parts = []
    for tok in tokens:
        if not re.fullmatch(r"[+-]?\d+", tok):
            raise PartitionParseError(f"not an integer: {tok!r}")
        parts.append(int(tok))
    # zeros are only allowed as trailing padding
    while parts and parts[-1] == 0:
        parts.pop()
    return Partition(parts)


def as_partition(obj) -> Partition:
    if isinstance(obj, Partition):
        return obj
    if isinstance(obj, str):
        return parse_partition(obj)
    return Partition(obj)


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def frobenius(lam: Sequence[int]) -> FrobeniusCoords:
    conj = conjugate(lam)
    d = durfee(lam)
    return FrobeniusCoords(
        tuple(lam[i] - i - 1 for i in range(d)),
        tuple(conj[i] - i - 1 for i in range(d)),
    )


def aft(lam: Sequence[int]) -> int:
    """|λ| minus the longer of the first row and the first column."""
    if not lam:
        return 0
    return sum(lam) - max(lam[0], len(lam))


def durfee(lam: Sequence[int]) -> int:
    d = 0
    while d < len(lam) and lam[d] >= d + 1:
        d += 1
    return d


def hook_lengths(lam: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    conj = conjugate(lam)
    return tuple(
        tuple(lam[i] - j + conj[j] - i - 1 for j in range(lam[i]))
        for i in range(len(lam))
    )


@lru_cache(maxsize=None)
def _dimension(lam: tuple[int, ...]) -> int:
    denom = 1
    for row in hook_lengths(lam):
        for h in row:
            denom *= h
    num = factorial(sum(lam))
    f, rem = divmod(num, denom)
    assert rem == 0, f"hook-length quotient not integral for {lam}"
    return f


def dimension(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape λ (hook-length formula)."""
    return _dimension(tuple(lam))


def _gen_partitions(n: int, max_part: int, max_len: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        if first * max_len < n:
            break
        for rest in _gen_partitions(n - first, first, max_len - 1):
            yield (first,) + rest


@lru_cache(maxsize=4096)
def partitions_list(
    n: int, max_part: Optional[int] = None, max_length: Optional[int] = None
) -> tuple[tuple[int, ...], ...]:
    """Cached tuple of the partitions of n in reverse-lexicographic order."""
    if n < 0:
        return ()
    mp = n if max_part is None else min(max_part, n)
    ml = n if max_length is None else min(max_length, n)
    return tuple(_gen_partitions(n, mp, ml))


def partitions_of(
    n: int, max_part: Optional[int] = None, max_length: Optional[int] = None
) -> Iterator[Partition]:
    """Yield each partition of n (under the optional bounds) in reverse-lex order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for p in partitions_list(n, max_part, max_length):
        yield tuple.__new__(Partition, p)


def compositions_of(n: int, r: int, strong: bool = False) -> Iterator[tuple[int, ...]]:
    """Length-r compositions of n in lexicographic order.

    With ``strong`` every part is at least 1; there are ``comb(n-1, r-1)`` of
    those and ``comb(n+r-1, r-1)`` weak ones.
    """
    if r < 1:
        raise ValueError("r must be positive")
    low = 1 if strong else 0
    if n < low * r:
        return

    def rec(remaining: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            yield (remaining,)
            return
        for first in range(low, remaining - low * (slots - 1) + 1):
            for rest in rec(remaining - first, slots - 1):
                yield (first,) + rest

    yield from rec(n, r)


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True when the diagram of ``inner`` fits inside ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def permutation_sign(perm: Sequence[int]) -> int:
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def signed_permutations(
    n: int, lower: Optional[Sequence[int]] = None, upper: Optional[Sequence[int]] = None
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Permutations σ of {1..n} as tuples ``(σ(1), ..., σ(n))`` with their signs.

    Only permutations with ``lower[i] <= σ(i+1) <= upper[i]`` are produced.
    Positions are filled in decreasing order of their lower bound; with lower
    bounds alone this never reaches a dead end, because any value that fits
    the current position also fits every later one.
    """
    lo = [1] * n if lower is None else [max(1, x) for x in lower]
    hi = [n] * n if upper is None else [min(n, x) for x in upper]
    # Hall's condition for lower bounds: the t-th largest bound must be <= n - t + 1
    for t, bound in enumerate(sorted(lo, reverse=True)):
        if bound > n - t:
            return
    order = sorted(range(n), key=lambda i: -lo[i])
    used = [False] * (n + 1)
    perm = [0] * n

    def rec(step: int) -> Iterator[tuple[tuple[int, ...], int]]:
        if step == n:
            result = tuple(perm)
            yield result, permutation_sign(result)
            return
        i = order[step]
        for v in range(lo[i], hi[i] + 1):
            if used[v]:
                continue
            used[v] = True
            perm[i] = v
            yield from rec(step + 1)
            used[v] = False

    yield from rec(0)


def binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
