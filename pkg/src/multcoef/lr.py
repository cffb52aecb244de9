"""Littlewood-Richardson and multi-LR coefficients.

Three independent ways to get c^λ_{μν}:

* :func:`lr_via_tableaux` walks the SYT of λ/μ, standardizes them to type ν
  and keeps those with a ballot reading word;
* :func:`lr_via_polytope` counts the integer points of the LR polytope with a
  row-by-row dynamic program;
* :func:`lr_small_skew` lists every array with the right row sums and filters
  it, which is only sensible when the skew shape is small.

Polytope coordinates: ``a[i][j]`` is the number of letters ``j+1`` in the
``i``-th nonempty row of the skew shape (0-based, ``j <= i``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .errors import SizeMismatch
from .partitions import as_partition, compositions_of, contains, partitions_list
from .tableaux import SkewShape, enumerate_syt, is_ballot, reading_word, standardize_to_type

__all__ = [
    "LRSpec",
    "count_lr_points",
    "lr_count",
    "lr_via_polytope",
    "lr_via_tableaux",
    "lr_small_skew",
    "lr_coefficient",
    "multi_lr",
    "multi_lr_raw",
    "skew_kostka_as_lr",
]


@dataclass(frozen=True)
class LRSpec:
    """LR polytope of the skew shape ``outer/inner`` with letter content ``content``.

    ``rows`` and ``offsets`` list, for each nonempty row of the skew shape, its
    length and the length of the inner row beside it.  Empty rows are dropped:
    the column-strict constraints across them always hold.
    """

    rows: tuple[int, ...]
    offsets: tuple[int, ...]
    content: tuple[int, ...]

    @classmethod
    def of(cls, outer: Sequence[int], inner: Sequence[int], content: Sequence[int]) -> "LRSpec":
        inner = tuple(inner) + (0,) * (len(outer) - len(inner))
        rows, offsets = [], []
        for o, i in zip(outer, inner):
            if o > i:
                rows.append(o - i)
                offsets.append(i)
        return cls(tuple(rows), tuple(offsets), tuple(content))

    def feasible_sizes(self) -> bool:
        return sum(self.rows) == sum(self.content) and len(self.content) <= len(self.rows)

    def satisfies(self, a: Sequence[Sequence[int]]) -> bool:
        """Check every polytope constraint on a full array ``a`` (row i has i+1 entries)."""
        k = len(self.rows)
        rows, offs, content = self.rows, self.offsets, self.content
        mu = content + (0,) * (k - len(content))
        for i in range(k):
            if sum(a[i]) != rows[i]:
                return False
        for j in range(k):
            if sum(a[i][j] for i in range(j, k)) != mu[j]:
                return False
        # letters up to r in row i stay right of letters up to r-1 in the row above
        for i in range(1, k):
            for r in range(1, i + 2):
                left = offs[i] + sum(a[i][:r])
                right = offs[i - 1] + sum(a[i - 1][: r - 1])
                if left > right:
                    return False
        # ballot: letters j through row r never outnumber letters j-1 through row r-1
        for j in range(1, k):
            for r in range(j, k):
                if sum(a[i][j] for i in range(j, r + 1)) > sum(a[i][j - 1] for i in range(j - 1, r)):
                    return False
        return True


def count_lr_points(spec: LRSpec) -> int:
    """Exact number of integer points of the LR polytope."""
    if not spec.feasible_sizes():
        return 0
    rows, offs = spec.rows, spec.offsets
    k = len(rows)
    if k == 0:
        return 1
    mu = spec.content + (0,) * (k - len(spec.content))

    @lru_cache(maxsize=None)
    def go(i: int, used: tuple[int, ...], prev: tuple[int, ...]) -> int:
        if i == k:
            return 1 if used == mu else 0
        width = i + 1
        total = 0
        row = [0] * width
        # prefix sums of the row above, for the column-strict window
        above = [0]
        for x in prev:
            above.append(above[-1] + x)

        def fill(j: int, filled: int) -> None:
            nonlocal total
            if j == width:
                if filled == rows[i]:
                    new_used = tuple(used[t] + (row[t] if t < width else 0) for t in range(k))
                    total += go(i + 1, new_used, tuple(row))
                return
            cap = rows[i] - filled
            cap = min(cap, mu[j] - used[j])
            if j > 0:
                # ballot against the letter one smaller, counted through the row above
                cap = min(cap, used[j - 1] - used[j])
            if i > 0:
                cap = min(cap, offs[i - 1] + above[min(j, len(prev))] - offs[i] - filled)
            if j == width - 1:
                if 0 <= rows[i] - filled <= cap:
                    row[j] = rows[i] - filled
                    fill(j + 1, rows[i])
                row[j] = 0
                return
            for v in range(0, cap + 1):
                row[j] = v
                fill(j + 1, filled + v)
            row[j] = 0

        fill(0, 0)
        return total

    return go(0, (0,) * k, ())


@lru_cache(maxsize=1 << 18)
def lr_count(outer: tuple, inner: tuple, content: tuple) -> int:
    """LR tableaux of shape ``outer/inner`` and content ``content``."""
    if not contains(outer, inner):
        return 0
    return count_lr_points(LRSpec.of(outer, inner, content))


def _norm(*parts) -> tuple:
    return tuple(tuple(as_partition(p)) for p in parts)


def lr_via_polytope(lam, mu, nu) -> int:
    """c^λ_{μν} as lattice points: skew shape λ/ν, column sums from μ."""
    lam, mu, nu = _norm(lam, mu, nu)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    return lr_count(lam, nu, mu)


def lr_via_tableaux(lam, mu, nu) -> int:
    """c^λ_{μν} as SSYT of shape λ/μ and type ν whose reading word is ballot.

    The SSYT are produced by standardizing each SYT of λ/μ, so the cost is
    proportional to the number of standard fillings of the skew shape.
    """
    lam, mu, nu = _norm(lam, mu, nu)
    if sum(lam) != sum(mu) + sum(nu) or not contains(lam, mu):
        return 0
    count = 0
    for t in enumerate_syt(SkewShape(lam, mu)):
        s = standardize_to_type(t, nu)
        if s is not None and is_ballot(reading_word(s)):
            count += 1
    return count


def lr_small_skew(lam, mu, nu) -> int:
    """c^λ_{μν} by listing every array with the right row sums on λ/μ and filtering.

    Row i of the (compressed) skew shape can only hold letters 1..i, so row i
    has ``comb(θ_i + i - 1, i - 1)`` candidate fillings.  Meant for |ν| up to
    about a dozen.
    """
    lam, mu, nu = _norm(lam, mu, nu)
    if sum(lam) != sum(mu) + sum(nu) or not contains(lam, mu):
        return 0
    spec = LRSpec.of(lam, mu, nu)
    if not spec.feasible_sizes():
        return 0
    choices = [list(compositions_of(t, i + 1)) for i, t in enumerate(spec.rows)]
    return sum(1 for arr in product(*choices) if spec.satisfies(arr))


def lr_coefficient(lam, mu, nu, algo: str = "poly") -> int:
    if algo in ("poly", "polytope"):
        return lr_via_polytope(lam, mu, nu)
    if algo in ("tab", "tableaux"):
        return lr_via_tableaux(lam, mu, nu)
    if algo == "small":
        return lr_small_skew(lam, mu, nu)
    raise ValueError(f"unknown LR algorithm {algo!r}")


@lru_cache(maxsize=1 << 18)
def _multi_lr(lam: tuple, factors: tuple) -> int:
    # factors are nonempty and sorted largest first
    if len(factors) == 1:
        return 1 if lam == factors[0] else 0
    first, rest = factors[0], factors[1:]
    if not contains(lam, first):
        return 0
    k = sum(sum(f) for f in rest)
    limit = len(lam)
    total = 0
    for beta in partitions_list(k, lam[0] if lam else 0, limit):
        if not contains(lam, beta):
            continue
        c = lr_count(lam, first, beta)
        if c:
            total += c * _multi_lr(beta, rest)
    return total


def multi_lr_raw(lam: tuple, factors: Iterable[tuple]) -> int:
    """:func:`multi_lr` for plain tuples that are already valid partitions."""
    fs = sorted((f for f in factors if f), key=lambda f: (sum(f), f), reverse=True)
    if not fs:
        return 1 if not lam else 0
    return _multi_lr(lam, tuple(fs))


def multi_lr(lam, factors: Iterable) -> int:
    """Coefficient of s_λ in the product of s_α over ``factors``.

    Empty factors are dropped.  The factors are reordered largest first, so
    the first one peels off most of λ and the remaining recursion runs over
    partitions of a small number.
    """
    lam = tuple(as_partition(lam))
    fs = [tuple(as_partition(f)) for f in factors]
    fs = [f for f in fs if f]
    if sum(map(sum, fs)) != sum(lam):
        return 0
    if not fs:
        return 1 if not lam else 0
    fs.sort(key=lambda f: (sum(f), f), reverse=True)
    return _multi_lr(lam, tuple(fs))


def skew_kostka_as_lr(shape, nu) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Triple ``(Θ, α, ρ)`` with ``K_{λ/μ, ν} = c^Θ_{α ρ}``.

    Above λ (shifted right by λ_1) sit ℓ rows of lengths ``τ_i = ν_{i+1}+...+ν_ℓ``
    over a block of ℓ full rows of length λ_1.  Letter i can fill only the
    strip that ν_i opens up, which forces the filling of the top part and
    leaves the ballot condition free on λ/μ.
    """
    if not isinstance(shape, SkewShape):
        shape = SkewShape.parse(shape) if isinstance(shape, str) else SkewShape(as_partition(shape))
    lam, mu = tuple(shape.outer), tuple(shape.inner)
    nu = tuple(as_partition(nu))
    ell = len(nu)
    l1 = lam[0] if lam else 0
    tail = [sum(nu[i + 1:]) for i in range(ell)]
    theta = tuple(l1 + t for t in tail) + lam
    alpha = (l1,) * ell + mu
    rho = tuple(sum(nu[i:]) for i in range(ell))
    strip = lambda p: tuple(x for x in p if x)
    return strip(theta), strip(alpha), strip(rho)


def check_sizes(lam, mu, nu) -> None:
    if sum(lam) != sum(mu) + sum(nu):
        raise SizeMismatch(f"|{lam}| != |{mu}| + |{nu}|")
