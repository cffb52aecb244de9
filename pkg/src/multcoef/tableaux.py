"""Young tableaux and Kostka numbers.

SYT come from recursive corner removal.  Kostka numbers are counted as
Gelfand-Tsetlin patterns: chains of shapes ``inner = k0 ⊆ k1 ⊆ ... ⊆ kc = outer``
in which every step ``k_i / k_{i-1}`` is a horizontal strip of size ``ν_i``.
``enumerate_ssyt`` is a deliberately naive cell-by-cell filler kept as an
independent oracle for the pattern count.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .errors import SizeMismatch
from .partitions import Partition, as_partition, contains

__all__ = [
    "SkewShape",
    "Tableau",
    "GTSpec",
    "enumerate_syt",
    "standardize_to_type",
    "reading_word",
    "is_ballot",
    "enumerate_ssyt",
    "count_gt_points",
    "kostka",
]


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", as_partition(self.outer))
        object.__setattr__(self, "inner", as_partition(self.inner))
        if not contains(self.outer, self.inner):
            raise SizeMismatch(f"{self.inner} is not contained in {self.outer}")

    @classmethod
    def parse(cls, text: str) -> "SkewShape":
        outer, _, inner = text.partition("/")
        return cls(as_partition(outer), as_partition(inner))

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def row_bounds(self) -> list[tuple[int, int]]:
        """Half-open column range ``[start, stop)`` of each row, 0-based."""
        inner = tuple(self.inner) + (0,) * (len(self.outer) - len(self.inner))
        return [(inner[i], self.outer[i]) for i in range(len(self.outer))]

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i, (a, b) in enumerate(self.row_bounds()) for j in range(a, b)]

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}" if self.inner else str(self.outer)


@dataclass(frozen=True)
class Tableau:
    """A filling stored row by row; row i covers columns ``inner_i .. outer_i - 1``."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        bounds = self.shape.row_bounds()
        if len(self.rows) != len(bounds) or any(
            len(row) != b - a for row, (a, b) in zip(self.rows, bounds)
        ):
            raise SizeMismatch("row lengths do not match the shape")

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]], inner: Sequence[int] = ()) -> "Tableau":
        inner = tuple(inner) + (0,) * (len(rows) - len(inner))
        outer = tuple(inner[i] + len(r) for i, r in enumerate(rows))
        return cls(SkewShape(as_partition(outer), as_partition(inner)), tuple(map(tuple, rows)))

    @property
    def weight(self) -> tuple[int, ...]:
        top = max((v for row in self.rows for v in row), default=0)
        counts = [0] * top
        for row in self.rows:
            for v in row:
                counts[v - 1] += 1
        return tuple(counts)

    def entry(self, i: int, j: int) -> Optional[int]:
        a, b = self.shape.row_bounds()[i] if i < len(self.rows) else (0, 0)
        return self.rows[i][j - a] if a <= j < b else None

    def is_semistandard(self) -> bool:
        bounds = self.shape.row_bounds()
        for i, row in enumerate(self.rows):
            if any(x > y for x, y in zip(row, row[1:])):
                return False
            if i == 0:
                continue
            a, _ = bounds[i]
            pa, pb = bounds[i - 1]
            for off, v in enumerate(row):
                col = a + off
                if pa <= col < pb and self.rows[i - 1][col - pa] >= v:
                    return False
        return True

    def is_standard(self) -> bool:
        values = sorted(v for row in self.rows for v in row)
        return values == list(range(1, len(values) + 1)) and self.is_semistandard()


def enumerate_syt(shape: SkewShape) -> Iterator[Tableau]:
    """Every standard filling, built by choosing which corner holds the largest entry."""
    outer = list(shape.outer)
    inner = list(shape.inner) + [0] * (len(outer) - len(shape.inner))
    n = shape.size
    grid: list[list[int]] = [[0] * (outer[i] - inner[i]) for i in range(len(outer))]

    def rec(current: list[int], k: int) -> Iterator[Tableau]:
        if k == 0:
            yield Tableau(shape, tuple(tuple(r) for r in grid))
            return
        for i in range(len(current)):
            below = current[i + 1] if i + 1 < len(current) else 0
            if current[i] > inner[i] and current[i] > below:
                current[i] -= 1
                grid[i][current[i] - inner[i]] = k
                yield from rec(current, k - 1)
                current[i] += 1

    yield from rec(outer[:], n)


def standardize_to_type(t: Tableau, mu: Sequence[int]) -> Optional[Tableau]:
    """Collapse consecutive blocks of an SYT into letters 1, 2, ... of type ``mu``.

    Block ``i`` holds the values ``mu_1+...+mu_{i-1}+1 .. mu_1+...+mu_i``.  The
    collapse gives an SSYT exactly when each block's cells sit in strictly
    increasing columns as the values increase; otherwise ``None`` is returned.
    """
    bounds = t.shape.row_bounds()
    col_of: dict[int, int] = {}
    for i, row in enumerate(t.rows):
        for off, v in enumerate(row):
            col_of[v] = bounds[i][0] + off
    if sum(mu) != len(col_of):
        return None
    letter = {}
    start = 1
    for block, size in enumerate(mu, 1):
        for v in range(start, start + size):
            letter[v] = block
            if v > start and col_of[v] <= col_of[v - 1]:
                return None
        start += size
    return Tableau(t.shape, tuple(tuple(letter[v] for v in row) for row in t.rows))


def reading_word(t: Tableau) -> tuple[int, ...]:
    """Entries read right to left along each row, top row first."""
    return tuple(v for row in t.rows for v in reversed(row))


def is_ballot(word: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for v in word:
        c = counts.get(v, 0) + 1
        if v > 1 and c > counts.get(v - 1, 0):
            return False
        counts[v] = c
    return True


def enumerate_ssyt(shape: SkewShape, weight: Sequence[int]) -> Iterator[Tableau]:
    """All SSYT of the shape with the given weight, by filling cells in reading order.

    Exponential and unoptimised on purpose: it is the reference the pattern
    counter is tested against.
    """
    weight = tuple(weight)
    if sum(weight) != shape.size:
        return
    bounds = shape.row_bounds()
    grid = [[0] * (b - a) for a, b in bounds]
    cells = shape.cells()
    remaining = list(weight)

    def rec(idx: int) -> Iterator[Tableau]:
        if idx == len(cells):
            yield Tableau(shape, tuple(tuple(r) for r in grid))
            return
        i, j = cells[idx]
        a = bounds[i][0]
        lo = 1
        if j > a:
            lo = max(lo, grid[i][j - a - 1])
        if i > 0:
            pa, pb = bounds[i - 1]
            if pa <= j < pb:
                lo = max(lo, grid[i - 1][j - pa] + 1)
        for v in range(lo, len(weight) + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            grid[i][j - a] = v
            yield from rec(idx + 1)
            remaining[v - 1] += 1
        grid[i][j - a] = 0

    yield from rec(0)


@dataclass(frozen=True)
class GTSpec:
    """Pattern-counting problem: chains from ``inner`` to ``outer`` with strip sizes ``weight``."""

    outer: tuple[int, ...]
    inner: tuple[int, ...]
    weight: tuple[int, ...]

    @classmethod
    def of(cls, shape: SkewShape, weight: Sequence[int]) -> "GTSpec":
        return cls(tuple(shape.outer), tuple(shape.inner), tuple(weight))


def count_gt_points(spec: GTSpec) -> int:
    """Number of interlacing chains described by ``spec``.

    Rows of each intermediate shape are assigned top to bottom inside the
    window ``max(prev_j, outer_{j+r}) <= q_j <= min(outer_j, prev_{j-1})`` where
    ``r`` is the number of strips still to be added after this one.  The lower
    term ``outer_{j+r}`` keeps only shapes from which ``outer`` is still
    reachable.  A running sum window prunes rows that cannot hit the target size.
    """
    outer, inner, weight = spec.outer, spec.inner, spec.weight
    if any(w < 0 for w in weight):
        return 0
    if sum(outer) - sum(inner) != sum(weight) or not contains(outer, inner):
        return 0
    L = len(outer)
    out = outer + (0,) * (L + len(weight) + 1)
    start = tuple(inner) + (0,) * (L - len(inner))
    c = len(weight)
    if c == 0:
        return 1
    # an SSYT with c letters has at most c cells per column of the skew shape
    for j in range(L):
        if out[j + c] > start[j]:
            return 0

    @lru_cache(maxsize=None)
    def step(i: int, prev: tuple[int, ...]) -> int:
        if i == c:
            return 1 if prev == tuple(outer) else 0
        r = c - i - 1
        target = sum(prev) + weight[i]
        lo = [max(prev[j], out[j + r]) for j in range(L)]
        hi = [min(outer[j], prev[j - 1] if j else outer[0]) for j in range(L)]
        if any(a > b for a, b in zip(lo, hi)):
            return 0
        suffix_lo = [0] * (L + 1)
        suffix_hi = [0] * (L + 1)
        for j in range(L - 1, -1, -1):
            suffix_lo[j] = suffix_lo[j + 1] + lo[j]
            suffix_hi[j] = suffix_hi[j + 1] + hi[j]
        if not suffix_lo[0] <= target <= suffix_hi[0]:
            return 0
        total = 0
        row = [0] * L

        def fill(j: int, need: int) -> None:
            nonlocal total
            if j == L:
                if need == 0:
                    total += step(i + 1, tuple(row))
                return
            a = max(lo[j], need - suffix_hi[j + 1])
            b = min(hi[j], need - suffix_lo[j + 1])
            for q in range(a, b + 1):
                row[j] = q
                fill(j + 1, need - q)

        fill(0, target)
        return total

    return step(0, start)


def kostka(shape, weight: Sequence[int]) -> int:
    """K_{λ/μ, ν}: SSYT of the (skew) shape with ``weight[i]`` entries equal to i+1.

    ``shape`` may be a :class:`SkewShape`, a partition, or text like ``"5,4/2"``.
    The weight may be any weak composition.
    """
    if isinstance(shape, str):
        shape = SkewShape.parse(shape)
    elif not isinstance(shape, SkewShape):
        shape = SkewShape(as_partition(shape))
    return count_gt_points(GTSpec.of(shape, weight))
