"""Acceptance criteria at their full stated bounds, one test per criterion.

Every comparison is between exact integers.  The conftest prints one
PASS/FAIL line per criterion at the end of the run.
"""

import itertools
from math import comb, factorial

import pytest

from multcoef.bench import run_bench
from multcoef.characters import character_table
from multcoef.growth import check_aft_bounds, check_lr_ratio_bound, check_regev_bound
from multcoef.kronecker import kronecker_character, kronecker_jt
from multcoef.lr import lr_small_skew, lr_via_polytope, lr_via_tableaux
from multcoef.partitions import aft, compositions_of, conjugate, contains, dimension, partitions_list
from multcoef.plethysm import plethysm_hh, plethysm_hh_reduced
from multcoef.symfunc import gen_s, multiply, plethysm_coefficient_oracle, schur_expand
from multcoef.tableaux import SkewShape, enumerate_ssyt, kostka


def mismatches(pairs):
    """Collect (instance, got, want) for every disagreeing pair."""
    return [(inst, got, want) for inst, got, want in pairs if got != want]


@pytest.mark.criterion("1 Kronecker: jt = character, all n<=6 and aft(nu)<=3 at n=7..9")
def test_kronecker_oracle_equivalence():
    def pairs():
        for n in range(2, 7):
            for t in itertools.product(partitions_list(n), repeat=3):
                yield t, kronecker_jt(*t), kronecker_character(*t)
        for n in (7, 8, 9):
            ps = partitions_list(n)
            for nu in ps:
                if aft(nu) <= 3:
                    for lam, mu in itertools.product(ps, repeat=2):
                        yield (lam, mu, nu), kronecker_jt(lam, mu, nu), kronecker_character(lam, mu, nu)

    assert mismatches(pairs()) == []


@pytest.mark.criterion("2 LR: tableaux = polytope = product expansion (|mu|+|nu|<=8), small skew for |nu|<=6")
def test_lr_equivalence():
    bad = []
    for n in range(0, 9):
        k = max(n, 1)
        for m in range(0, n + 1):
            for mu in partitions_list(m):
                for nu in partitions_list(n - m):
                    prod = schur_expand(multiply(gen_s(mu, k), gen_s(nu, k)))
                    for lam in partitions_list(n):
                        tab = lr_via_tableaux(lam, mu, nu)
                        values = [lr_via_polytope(lam, mu, nu), prod.get(lam, 0)]
                        if sum(nu) <= 6:
                            values.append(lr_small_skew(lam, mu, nu))
                        if any(v != tab for v in values):
                            bad.append(((lam, mu, nu), tab, values))
    assert bad == []


def all_weights(size, skew_rows):
    """Strong compositions of ``size`` plus every placement of zeros up to one extra part per row."""
    seen = set()
    for r in range(1, size + 1):
        for c in compositions_of(size, r, strong=True):
            seen.add(c)
    top = max(skew_rows, 1) + 1
    for r in range(1, top + 1):
        for c in compositions_of(size, r):
            seen.add(c)
    if size == 0:
        seen.add(())
    return sorted(seen)


@pytest.mark.criterion("3 Kostka: GT count = brute-force SSYT for |lambda|<=7, K(lambda,1^n) = f for n<=10")
def test_kostka_equivalence():
    bad = []
    for n in range(0, 8):
        for lam in partitions_list(n):
            for j in range(0, n + 1):
                for mu in partitions_list(j):
                    if not contains(lam, mu):
                        continue
                    shape = SkewShape(lam, mu)
                    for w in all_weights(n - j, len(lam)):
                        got = kostka(shape, w)
                        want = sum(1 for _ in enumerate_ssyt(shape, w))
                        if got != want:
                            bad.append(((lam, mu, w), got, want))
    for n in range(0, 11):
        for lam in partitions_list(n):
            if kostka(lam, (1,) * n) != dimension(lam):
                bad.append(((lam, "1^n"), kostka(lam, (1,) * n), dimension(lam)))
    assert bad == []


@pytest.mark.criterion("4 Plethysm: general = oracle for dm<=12, reduced = general on dm<=16, aft<=1, d>4")
def test_plethysm_equivalence():
    def pairs():
        for dm in range(1, 13):
            for d in range(1, dm + 1):
                if dm % d:
                    continue
                m = dm // d
                for lam in partitions_list(dm):
                    yield (lam, d, m), plethysm_hh(lam, d, m), plethysm_coefficient_oracle(lam, d, m)
        for dm in range(1, 17):
            for d in range(5, dm + 1):
                if dm % d:
                    continue
                m = dm // d
                for lam in partitions_list(dm):
                    if aft(lam) <= 1 and lam[0] >= len(lam):
                        yield (lam, d, m, "reduced"), plethysm_hh_reduced(lam, d, m), plethysm_hh(lam, d, m)

    assert mismatches(pairs()) == []


@pytest.mark.criterion("5 Identities: sum f^2 = n!, LR-weighted dims, f = f', Kronecker S3 and transposes")
def test_identity_suite():
    bad = []
    for n in range(0, 26):
        total = sum(dimension(l) ** 2 for l in partitions_list(n))
        if total != factorial(n):
            bad.append(("sum f^2", n, total))
    for n in range(0, 9):
        for m in range(0, n + 1):
            for mu in partitions_list(m):
                for nu in partitions_list(n - m):
                    lhs = sum(lr_via_polytope(l, mu, nu) * dimension(l) for l in partitions_list(n))
                    if lhs != comb(n, m) * dimension(mu) * dimension(nu):
                        bad.append(("lr-weighted", mu, nu, lhs))
    for n in range(0, 21):
        for lam in partitions_list(n):
            if dimension(lam) != dimension(conjugate(lam)):
                bad.append(("conjugate", lam))
    for n in range(1, 7):
        for a, b, c in itertools.product(partitions_list(n), repeat=3):
            g = kronecker_jt(a, b, c)
            variants = [kronecker_jt(*p) for p in itertools.permutations((a, b, c))]
            variants.append(kronecker_jt(a, conjugate(b), conjugate(c)))
            variants.append(kronecker_jt(conjugate(a), b, conjugate(c)))
            variants.append(kronecker_jt(conjugate(a), conjugate(b), c))
            if any(v != g for v in variants):
                bad.append(("kronecker symmetry", (a, b, c), g, variants))
    assert bad == []


@pytest.mark.criterion("6 Proven bounds: aft bounds n<=40 aft<=6, Regev n<=20, LR ratio n<=8")
def test_proven_bounds():
    bad = []
    for n in range(0, 41):
        # every λ ⊢ n with aft(λ) <= 6: λ_1 >= n-6 or ℓ(λ) >= n-6
        for j in range(0, min(6, n) + 1):
            first = n - j
            for rest in partitions_list(j, first if first else None):
                lam = ((first,) if first else ()) + rest
                for cand in (lam, conjugate(lam)):
                    if aft(cand) <= 6 and check_aft_bounds(cand) != (True, True):
                        bad.append(("aft", cand))
    for n in range(0, 21):
        for lam in partitions_list(n):
            if not check_regev_bound(lam):
                bad.append(("regev", lam))
    for n in range(0, 9):
        for m in range(0, n + 1):
            for mu in partitions_list(m):
                for nu in partitions_list(n - m):
                    for lam in partitions_list(n):
                        c = lr_via_tableaux(lam, mu, nu)
                        if c and not check_lr_ratio_bound(lam, mu, nu, c):
                            bad.append(("lr-ratio", lam, mu, nu))
    assert bad == []


@pytest.mark.criterion("7 Scaling: kron-aft2 finishes every n<=60 under 60 s, agrees with oracle for n<=12")
def test_scaling_demonstration():
    grid = list(range(3, 61))
    records = list(run_bench("kron-aft2", grid, oracle_max_n=12, time_budget_s=60))
    assert [r.n for r in records] == grid
    slow = [(r.n, r.time_ms) for r in records if r.time_ms >= 60_000]
    wrong = [(r.n, r.value, r.oracle) for r in records if r.n <= 12 and r.agrees is not True]
    assert slow == [] and wrong == []
    print("kron-aft2 times (ms):", {r.n: r.time_ms for r in records})


@pytest.mark.criterion("8 Character tables: column orthogonality and chi(1^n) = f for n<=12")
def test_character_table_integrity():
    bad = []
    for n in range(0, 13):
        t = character_table(n)
        size = len(t.partitions)
        for i in range(size):
            for j in range(i, size):
                got = sum(row[i] * row[j] for row in t.values)
                if got != (t.z[i] if i == j else 0):
                    bad.append((n, t.partitions[i], t.partitions[j], got))
        ident = t.partitions.index((1,) * n) if n else 0
        for lam, row in zip(t.partitions, t.values):
            if row[ident] != dimension(lam):
                bad.append((lam, row[ident]))
    assert bad == []
