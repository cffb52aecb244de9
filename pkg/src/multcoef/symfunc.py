"""Exact symmetric polynomials in k variables, used as ground truth.

A :class:`SymPoly` stores coefficients in the monomial symmetric basis:
``{μ: c}`` means ``Σ c · m_μ(x_1..x_k)``.  Everything here is exponential time
and guarded by explicit size limits.  Schur polynomials are built from a
brute-force SSYT count rather than the pattern counter in
:mod:`multcoef.tableaux`, so the two can be compared.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Iterator, Mapping, Optional, Sequence

from .characters import character, z_alpha
from .errors import Infeasible, NegativeCoefficient, SizeMismatch, VariableCountMismatch
from .partitions import as_partition, partitions_list, signed_permutations
from .tableaux import SkewShape, enumerate_ssyt

__all__ = [
    "SymPoly",
    "gen_h",
    "gen_e",
    "gen_p",
    "gen_s",
    "gen_s_jacobi_trudi",
    "multiply",
    "schur_expand",
    "plethysm_substitute",
    "plethysm_hh_expansion",
    "plethysm_coefficient_oracle",
    "kron_oracle",
    "MAX_SUBSTITUTION_TERMS",
]

MAX_SUBSTITUTION_TERMS = 2_000_000


def _sorted_key(v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted((x for x in v if x), reverse=True))


class SymPoly:
    """Symmetric polynomial in ``k`` variables in the monomial basis."""

    __slots__ = ("k", "coeffs")

    def __init__(self, k: int, coeffs: Optional[Mapping] = None):
        if k < 1:
            raise ValueError("need at least one variable")
        self.k = k
        clean = {}
        for key, c in (coeffs or {}).items():
            key = tuple(as_partition(key))
            if len(key) > k:
                raise ValueError(f"key {key} needs more than {k} variables")
            if c:
                clean[key] = clean.get(key, 0) + c
        self.coeffs = {key: c for key, c in clean.items() if c}

    @classmethod
    def one(cls, k: int) -> "SymPoly":
        return cls(k, {(): 1})

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}·m{key}" for key, c in sorted(self.coeffs.items(), reverse=True))
        return f"SymPoly(k={self.k}: {terms or '0'})"

    def __eq__(self, other) -> bool:
        return isinstance(other, SymPoly) and self.k == other.k and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.k, frozenset(self.coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _same_k(self, other: "SymPoly") -> None:
        if self.k != other.k:
            raise VariableCountMismatch(f"{self.k} vs {other.k} variables")

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._same_k(other)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, 0) + c
        return SymPoly(self.k, out)

    def __neg__(self) -> "SymPoly":
        return SymPoly(self.k, {key: -c for key, c in self.coeffs.items()})

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def scale(self, c) -> "SymPoly":
        return SymPoly(self.k, {key: c * v for key, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            return multiply(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def degrees(self) -> set[int]:
        return {sum(key) for key in self.coeffs}

    def coefficient(self, mu: Sequence[int]) -> int:
        return self.coeffs.get(tuple(mu), 0)

    def evaluate_ones(self) -> int:
        """Value at x_1 = ... = x_k = 1."""
        total = 0
        for key, c in self.coeffs.items():
            counts = Counter(key)
            zeros = self.k - len(key)
            arrangements = factorial(self.k) // factorial(zeros)
            for mult in counts.values():
                arrangements //= factorial(mult)
            total += c * arrangements
        return total


def gen_h(r: int, k: int) -> SymPoly:
    return SymPoly(k, {mu: 1 for mu in partitions_list(r, None, k)})


def gen_e(r: int, k: int) -> SymPoly:
    return SymPoly(k, {(1,) * r: 1} if r <= k else {})


def gen_p(r: int, k: int) -> SymPoly:
    """Power sum x_1^r + ... + x_k^r; for r = 0 this is the constant k."""
    return SymPoly(k, {(r,) if r else (): k if r == 0 else 1})


@lru_cache(maxsize=None)
def _ssyt_weights(lam: tuple[int, ...]) -> dict:
    """Number of SSYT of shape λ for each partition weight (brute force)."""
    shape = SkewShape(as_partition(lam))
    return {mu: sum(1 for _ in enumerate_ssyt(shape, mu)) for mu in partitions_list(sum(lam))}


def gen_s(lam, k: int) -> SymPoly:
    lam = tuple(as_partition(lam))
    if len(lam) > k:
        return SymPoly(k)
    return SymPoly(k, {mu: c for mu, c in _ssyt_weights(lam).items() if len(mu) <= k})


def gen_s_jacobi_trudi(lam, k: int) -> SymPoly:
    """s_λ as det[h_{λ_i - i + j}], expanded term by term (Leibniz)."""
    lam = tuple(as_partition(lam))
    ell = len(lam)
    total = SymPoly(k)
    if ell == 0:
        return SymPoly.one(k)
    # entry (i, σ(i)) has subscript λ_i - i + σ(i), which must be >= 0
    lower = [i + 1 - lam[i] for i in range(ell)]
    for perm, sign in signed_permutations(ell, lower):
        term = SymPoly.one(k)
        for i in range(ell):
            term = multiply(term, gen_h(lam[i] - (i + 1) + perm[i], k))
            if not term:
                break
        total = total + term.scale(sign)
    return total


def _bounded_vectors(bound: Sequence[int], total: int) -> Iterator[tuple[int, ...]]:
    """Vectors a with 0 <= a_i <= bound_i and Σ a_i = total."""
    n = len(bound)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + bound[i]
    a = [0] * n

    def rec(i: int, left: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            if left == 0:
                yield tuple(a)
            return
        for v in range(max(0, left - suffix[i + 1]), min(bound[i], left) + 1):
            a[i] = v
            yield from rec(i + 1, left - v)

    yield from rec(0, total)


def multiply(f: SymPoly, g: SymPoly) -> SymPoly:
    """Exact product, computed one dominant monomial x^ν at a time.

    ``[x^ν] f g = Σ_{a+b=ν} [x^a] f · [x^b] g`` and ``[x^a] f`` is the
    coefficient of ``m_{sort(a)}``.
    """
    if f.k != g.k:
        raise VariableCountMismatch(f"{f.k} vs {g.k} variables")
    k = f.k
    fdeg: dict[int, dict] = defaultdict(dict)
    gdeg: dict[int, dict] = defaultdict(dict)
    for key, c in f.coeffs.items():
        fdeg[sum(key)][key] = c
    for key, c in g.coeffs.items():
        gdeg[sum(key)][key] = c
    out: dict = defaultdict(int)
    for df, fpart in fdeg.items():
        for dg, gpart in gdeg.items():
            for nu in partitions_list(df + dg, None, k):
                padded = nu + (0,) * (k - len(nu))
                s = 0
                for a in _bounded_vectors(padded, df):
                    fa = fpart.get(_sorted_key(a))
                    if fa:
                        gb = gpart.get(_sorted_key(tuple(x - y for x, y in zip(padded, a))))
                        if gb:
                            s += fa * gb
                if s:
                    out[nu] += s
    return SymPoly(k, out)


def schur_expand(f: SymPoly) -> dict:
    """Coefficients of f in the Schur basis s_λ(x_1..x_k).

    The lexicographically largest monomial key is always maximal in dominance
    among the keys present, so its coefficient is the Schur coefficient.
    """
    rest = dict(f.coeffs)
    out = {}
    guard = 10 * (len(rest) + 1) + sum(len(partitions_list(d, None, f.k)) for d in f.degrees())
    while rest:
        guard -= 1
        if guard < 0:
            raise RuntimeError("Schur expansion did not terminate; this is a bug")
        top = max(rest)
        c = rest[top]
        out[top] = c
        for key, v in gen_s(top, f.k).coeffs.items():
            nv = rest.get(key, 0) - c * v
            if nv:
                rest[key] = nv
            else:
                rest.pop(key, None)
    return out


def _arrangements(mu: tuple[int, ...], slots: int) -> Iterator[dict]:
    """Distinct placements of the parts of μ into ``slots`` positions, as {position: part}."""
    groups = sorted(Counter(mu).items(), reverse=True)

    def rec(g: int, free: tuple[int, ...]) -> Iterator[dict]:
        if g == len(groups):
            yield {}
            return
        value, mult = groups[g]
        for chosen in combinations(free, mult):
            remaining = tuple(p for p in free if p not in chosen)
            for tail in rec(g + 1, remaining):
                d = dict(tail)
                for p in chosen:
                    d[p] = value
                yield d

    yield from rec(0, tuple(range(slots)))


def _arrangement_count(mu: tuple[int, ...], slots: int) -> int:
    if len(mu) > slots:
        return 0
    count = factorial(slots) // factorial(slots - len(mu))
    for mult in Counter(mu).values():
        count //= factorial(mult)
    return count


def _monomial_multiset(g: SymPoly) -> list[tuple[int, ...]]:
    """Exponent vectors of g's monomials, each repeated by its coefficient."""
    out = []
    for key, c in sorted(g.coeffs.items()):
        if c < 0:
            raise NegativeCoefficient(f"coefficient {c} at m{key}")
        for place in _arrangements(key, g.k):
            vec = tuple(place.get(i, 0) for i in range(g.k))
            out.extend([vec] * c)
    return out


def plethysm_substitute(f: SymPoly, g: SymPoly) -> SymPoly:
    """f[g]: substitute the monomials of g (with repetition) for the variables of f.

    ``f`` must be given in at least as many variables as g has monomials;
    variables of f beyond that are set to 0.
    """
    monos = _monomial_multiset(g)
    N = len(monos)
    if f.k < N:
        raise SizeMismatch(f"f has {f.k} variables but g has {N} monomials; regenerate f in {N} variables")
    work = sum(_arrangement_count(key, N) for key in f.coeffs)
    if work > MAX_SUBSTITUTION_TERMS:
        raise Infeasible(f"substitution would expand {work} terms")
    k = g.k
    out: dict = defaultdict(int)
    for key, c in f.coeffs.items():
        if len(key) > N:
            continue
        for place in _arrangements(key, N):
            vec = [0] * k
            for pos, power in place.items():
                for i, e in enumerate(monos[pos]):
                    vec[i] += power * e
            if all(vec[i] >= vec[i + 1] for i in range(k - 1)):
                out[_sorted_key(vec)] += c
    return SymPoly(k, out)


def plethysm_hh_expansion(d: int, m: int, k: int) -> dict:
    """Schur expansion of h_d[h_m] in k variables, by literal substitution."""
    inner = gen_h(m, k)
    N = sum(c * _arrangement_count(key, k) for key, c in inner.coeffs.items())
    return schur_expand(plethysm_substitute(gen_h(d, N), inner))


@lru_cache(maxsize=None)
def _hm_of_power(a: int, m: int) -> tuple:
    """p_a[h_m] = Σ_{β ⊢ m} p_{aβ} / z_β as ((ρ, coeff), ...)."""
    return tuple((tuple(a * b for b in beta), Fraction(1, z_alpha(beta))) for beta in partitions_list(m))


@lru_cache(maxsize=None)
def _pleth_power_sums(d: int, m: int) -> dict:
    """h_d[h_m] in the power-sum basis: Σ_{α ⊢ d} z_α⁻¹ Π_i p_{α_i}[h_m]."""
    out: dict = defaultdict(Fraction)
    for alpha in partitions_list(d):
        terms = {(): Fraction(1, z_alpha(alpha))}
        for a in alpha:
            nxt: dict = defaultdict(Fraction)
            for rho, c in terms.items():
                for sigma, w in _hm_of_power(a, m):
                    nxt[tuple(sorted(rho + sigma, reverse=True))] += c * w
            terms = nxt
        for rho, c in terms.items():
            out[rho] += c
    return {rho: c for rho, c in out.items() if c}


def plethysm_coefficient_oracle(lam, d: int, m: int) -> int:
    """a^λ_{d,m} as Σ_ρ [p_ρ] h_d[h_m] · χ^λ(ρ)."""
    lam = tuple(as_partition(lam))
    if sum(lam) != d * m:
        raise SizeMismatch(f"|λ| = {sum(lam)} but d*m = {d * m}")
    total = Fraction(0)
    for rho, c in _pleth_power_sums(d, m).items():
        total += c * character(lam, rho)
    if total.denominator != 1:
        raise AssertionError(f"non-integral plethysm coefficient {total}")
    return int(total)


def _contingency(rows: Sequence[int], cols: Sequence[int]) -> Iterator[list[int]]:
    """Nonnegative integer matrices with the given margins, flattened row by row."""
    kx = len(rows)

    def rec(i: int, colleft: tuple[int, ...]) -> Iterator[list[int]]:
        if i == kx:
            if not any(colleft):
                yield []
            return
        for row in _bounded_vectors(colleft, rows[i]):
            for rest in rec(i + 1, tuple(c - x for c, x in zip(colleft, row))):
                yield list(row) + rest

    yield from rec(0, tuple(cols))


def kron_oracle(lam, mu, nu) -> int:
    """g(λ,μ,ν) as the coefficient of s_μ(x) s_ν(y) in s_λ(x_i y_j).

    ``[x^α y^β] s_λ[xy]`` is a sum of Kostka numbers over contingency tables
    with margins α and β.  The Schur coefficients are then peeled off one
    alphabet at a time.
    """
    lam, mu, nu = (tuple(as_partition(p)) for p in (lam, mu, nu))
    n = sum(lam)
    if not sum(mu) == sum(nu) == n:
        raise SizeMismatch("all three partitions must have the same size")
    if n == 0:
        return 1
    kx, ky = len(mu), len(nu)
    kost = _ssyt_weights(lam)
    xs = partitions_list(n, None, kx)
    ys = partitions_list(n, None, ky)
    table = {}
    for a in xs:
        for b in ys:
            table[a, b] = sum(kost.get(_sorted_key(M), 0) for M in _contingency(a + (0,) * (kx - len(a)), b + (0,) * (ky - len(b))))
    # peel the x alphabet for each y weight, then the y alphabet
    by_x: dict = defaultdict(dict)
    for b in ys:
        expanded = schur_expand(SymPoly(kx, {a: table[a, b] for a in xs}))
        for kappa, c in expanded.items():
            by_x[kappa][b] = c
    row = by_x.get(mu, {})
    if not row:
        return 0
    return schur_expand(SymPoly(ky, row)).get(nu, 0)
