"""Growth class of f^λ and exact checks of the dimension bounds.

Every comparison is done in integers or :class:`fractions.Fraction`; square
roots are removed by squaring both sides.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, isqrt
from typing import NamedTuple

from .errors import SizeMismatch
from .partitions import Partition, aft, as_partition, dimension, durfee

__all__ = [
    "GrowthReport",
    "DimRatio",
    "classify_growth",
    "check_aft_bounds",
    "check_regev_bound",
    "dim_ratio_kron",
    "check_lr_ratio_bound",
    "POLY_AFT_THRESHOLD",
    "DURFEE_CONSTANT",
]

POLY_AFT_THRESHOLD = 8
DURFEE_CONSTANT = Fraction(1, 2)

POLYNOMIAL = "PolynomialWitness"
EXPONENTIAL = "ExponentialBand"
SUPEREXPONENTIAL = "SuperexponentialBand"


@dataclass
class GrowthReport:
    partition: Partition
    n: int
    aft: int
    durfee: int
    f: int
    growth_class: str
    witness: dict = field(default_factory=dict)
    bounds_checked: list = field(default_factory=list)

    @property
    def label(self) -> str:
        if self.growth_class == POLYNOMIAL:
            return f"{POLYNOMIAL}({self.aft})"
        return self.growth_class

    def to_dict(self) -> dict:
        return {
            "partition": list(self.partition),
            "n": self.n,
            "aft": self.aft,
            "durfee": self.durfee,
            "f": str(self.f),
            "growth_class": self.label,
            "witness": {k: str(v) for k, v in self.witness.items()},
            "bounds_checked": [[name, ok] for name, ok in self.bounds_checked],
        }


def check_aft_bounds(lam) -> tuple[bool, bool]:
    """``(comb(n-k, k) <= f, f <= n^k / sqrt(k!))`` with k = aft(λ)."""
    lam = as_partition(lam)
    n, k, f = sum(lam), aft(lam), dimension(lam)
    lower = comb(n - k, k) <= f if n >= k else True
    upper = f * f * factorial(k) <= n ** (2 * k)
    return lower, upper


def check_regev_bound(lam) -> bool:
    """``f <= (2 d)^n`` with d the Durfee size."""
    lam = as_partition(lam)
    return dimension(lam) <= (2 * durfee(lam)) ** sum(lam)


def classify_growth(lam, poly_aft: int = POLY_AFT_THRESHOLD, durfee_c: Fraction = DURFEE_CONSTANT) -> GrowthReport:
    """Place f^λ in one of three growth regimes and attach the checked bounds.

    Order of tests: aft <= ``poly_aft`` gives a polynomial witness ``f <= n^aft``;
    otherwise a Durfee square with ``d >= c·sqrt(n)`` means superexponential
    growth; anything else is the exponential band ``f <= (2d)^n``.
    """
    lam = as_partition(lam)
    n, k, d, f = sum(lam), aft(lam), durfee(lam), dimension(lam)
    durfee_c = Fraction(durfee_c)
    lower, upper = check_aft_bounds(lam)
    regev = check_regev_bound(lam)
    witness: dict = {"aft": k, "durfee": d}
    if k <= poly_aft:
        cls = POLYNOMIAL
        witness["n^aft"] = n**k
        witness["f<=n^aft"] = f <= n**k
    elif d * d >= durfee_c * durfee_c * n:
        cls = SUPEREXPONENTIAL
        witness["c"] = durfee_c
        witness["floor(c*sqrt(n))"] = isqrt(int(durfee_c * durfee_c * n))
    else:
        cls = EXPONENTIAL
        witness["(2d)^n"] = (2 * d) ** n
    return GrowthReport(
        partition=lam,
        n=n,
        aft=k,
        durfee=d,
        f=f,
        growth_class=cls,
        witness=witness,
        bounds_checked=[("aft_lower", lower), ("aft_upper", upper), ("regev", regev)],
    )


class DimRatio(NamedTuple):
    ratio: Fraction
    in_band: bool
    order: tuple  # the triple reordered so the first entry has the largest f


def dim_ratio_kron(lam, mu, nu, k: int = 2) -> DimRatio:
    """``f^μ f^ν / f^λ`` after reordering so that f^λ is the largest of the three."""
    parts = [as_partition(p) for p in (lam, mu, nu)]
    n = sum(parts[0])
    if any(sum(p) != n for p in parts):
        raise SizeMismatch("all three partitions must have the same size")
    parts.sort(key=dimension, reverse=True)
    a, b, c = parts
    ratio = Fraction(dimension(b) * dimension(c), dimension(a))
    return DimRatio(ratio, 1 <= ratio <= n**k, tuple(map(tuple, parts)))


def check_lr_ratio_bound(lam, mu, nu, lr_value: int | None = None) -> bool:
    """When c^λ_{μν} > 0, check ``f^λ <= comb(n, |μ|) f^μ f^ν``."""
    lam, mu, nu = (as_partition(p) for p in (lam, mu, nu))
    n, m = sum(lam), sum(mu)
    if n != m + sum(nu):
        raise SizeMismatch(f"|{lam}| != |{mu}| + |{nu}|")
    if lr_value is None:
        from .lr import lr_via_tableaux

        lr_value = lr_via_tableaux(lam, mu, nu)
    if lr_value == 0:
        return True
    return dimension(lam) <= comb(n, m) * dimension(mu) * dimension(nu)
