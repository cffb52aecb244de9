from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from multcoef.errors import Infeasible, PreconditionViolated, SizeMismatch
from multcoef.partitions import aft, compositions_of, partitions_list
from multcoef.plethysm import (
    QSpec,
    choose_plethysm_path,
    count_Q_points,
    plethysm_dispatch,
    plethysm_hh,
    plethysm_hh_reduced,
    sigma_targets,
    staircase,
)
from multcoef.symfunc import gen_h, plethysm_coefficient_oracle, plethysm_substitute


def q_brute(k, c, jbar, target, m, below=None):
    """Try every tuple of blocks."""
    blocks = list(compositions_of(m, k))
    count = 0
    for chain in product(blocks, repeat=len(c)):
        if below is not None and any(b >= below for b in chain):
            continue
        ok = True
        for i in range(len(chain) - 1):
            j = jbar[i] - 1
            a, b = chain[i], chain[i + 1]
            if a[:j] != b[:j] or not a[j] < b[j]:
                ok = False
                break
        if not ok:
            continue
        total = tuple(sum(ci * b[t] for ci, b in zip(c, chain)) for t in range(k))
        if total == tuple(target):
            count += 1
    return count


def monomial_coefficient(d, m, alpha):
    """Coefficient of x^α in h_d[h_m] by substitution in len(α) variables."""
    k = len(alpha)
    inner = gen_h(m, k)
    from multcoef.symfunc import _arrangement_count

    N = sum(c * _arrangement_count(key, k) for key, c in inner.coeffs.items())
    poly = plethysm_substitute(gen_h(d, N), inner)
    return poly.coefficient(tuple(sorted((a for a in alpha if a), reverse=True)))


class TestPolytopes:
    def test_staircase(self):
        assert staircase(1) == (0,)
        assert staircase(2) == (1, 0)
        assert staircase(3) == (2, 1, 0)

    def test_degenerate(self):
        assert count_Q_points(QSpec(2, (1, 1), (1,), (5, -1), 2)) == 0
        assert count_Q_points(QSpec(2, (3,), (), (3, 3), 2)) == 1
        assert count_Q_points(QSpec(2, (3,), (), (3, 2), 2)) == 0

    @pytest.mark.parametrize("d,m,k", [(2, 2, 2), (3, 2, 2), (2, 3, 3), (3, 2, 3), (4, 1, 3)])
    def test_against_unpruned_brute_force(self, d, m, k):
        for alpha in product(range(0, d * m + 1), repeat=k):
            if sum(alpha) != d * m:
                continue
            for r in range(1, d + 1):
                for c in compositions_of(d, r, strong=True):
                    for jbar in product(range(1, k + 1), repeat=r - 1):
                        assert count_Q_points(QSpec(k, c, jbar, alpha, m)) == q_brute(k, c, jbar, alpha, m)

    @pytest.mark.parametrize("d,m,k", [(2, 2, 2), (3, 2, 3), (3, 3, 2)])
    def test_lex_ceiling(self, d, m, k):
        top = (m,) + (0,) * (k - 1)
        for alpha in compositions_of(d * m, k):
            for r in range(1, d + 1):
                for c in compositions_of(d, r, strong=True):
                    for jbar in product(range(1, k + 1), repeat=r - 1):
                        spec = QSpec(k, c, jbar, alpha, m, below=top)
                        assert count_Q_points(spec) == q_brute(k, c, jbar, alpha, m, top)

    @pytest.mark.parametrize("d,m,k", [(2, 2, 2), (3, 2, 3), (2, 3, 3), (4, 2, 2)])
    def test_chains_count_monomials(self, d, m, k):
        """Σ over r, c, j̄ of |Q| is the coefficient of x^α in h_d[h_m]."""
        for alpha in compositions_of(d * m, k):
            total = 0
            for r in range(1, d + 1):
                for c in compositions_of(d, r, strong=True):
                    for jbar in product(range(1, k + 1), repeat=r - 1):
                        total += count_Q_points(QSpec(k, c, jbar, alpha, m))
            assert total == monomial_coefficient(d, m, alpha)

    def test_sigma_targets(self):
        got = dict(sigma_targets((2, 1), 2))
        assert got == {(2, 1): 1, (3, 0): -1}
        assert all(min(t) >= 0 for t, _ in sigma_targets((4, 1, 1), 3))


class TestGeneral:
    def test_examples(self):
        for d in range(1, 5):
            for m in range(1, 5):
                assert plethysm_hh((d * m,), d, m) == 1
        assert plethysm_hh((2, 2), 2, 2) == 1
        assert plethysm_hh((3, 1), 2, 2) == 0
        assert plethysm_hh((4,), 2, 2) == 1

    @pytest.mark.parametrize("dm", range(1, 10))
    def test_fused_literal_oracle(self, dm):
        for d in (x for x in range(1, dm + 1) if dm % x == 0):
            m = dm // d
            for lam in partitions_list(dm):
                want = plethysm_coefficient_oracle(lam, d, m)
                assert plethysm_hh(lam, d, m) == want
                if len(lam) * d <= 12:
                    assert plethysm_hh(lam, d, m, fused=False) == want

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            plethysm_hh((3, 1), 2, 3)
        with pytest.raises(SizeMismatch):
            plethysm_dispatch((3,), 2, 2)


class TestReduced:
    def test_single_row(self):
        for d in range(1, 8):
            for m in range(1, 5):
                assert plethysm_hh_reduced((d * m,), d, m) == 1

    def test_preconditions(self):
        with pytest.raises(PreconditionViolated):
            plethysm_hh_reduced((1, 1, 1, 1), 2, 2)
        with pytest.raises(PreconditionViolated):
            plethysm_hh_reduced((5, 1), 3, 2)

    @pytest.mark.parametrize("d,m", [(5, 2), (5, 3), (6, 2), (7, 2), (5, 4)])
    def test_aft_one_against_oracle(self, d, m):
        n = d * m
        for lam in ((n - 1, 1), (n,)):
            want = plethysm_coefficient_oracle(lam, d, m)
            assert plethysm_hh_reduced(lam, d, m) == want
            assert plethysm_hh_reduced(lam, d, m, fused=False) == want

    def test_even_partition_rule_small(self):
        """h_d[h_2] is the sum of s_λ over partitions of 2d with only even parts."""
        for d in range(1, 7):
            for lam in partitions_list(2 * d):
                assert plethysm_coefficient_oracle(lam, d, 2) == int(all(p % 2 == 0 for p in lam))

    @pytest.mark.parametrize(
        "lam,d",
        [((64, 2), 33), ((64, 1, 1), 33), ((65, 1), 33), ((216, 2), 109), ((216, 1, 1), 109), ((215, 3), 109), ((215, 2, 1), 109)],
    )
    def test_lex_ceiling_large_d(self, lam, d):
        # (64,2) at d=33 comes out as 5 if the lower blocks may exceed (m,0,...)
        assert plethysm_hh_reduced(lam, d, 2) == int(all(p % 2 == 0 for p in lam))

    @settings(max_examples=25, deadline=None)
    @given(st.integers(5, 9), st.integers(1, 3))
    def test_reduced_matches_general(self, d, m):
        n = d * m
        for lam in partitions_list(n):
            if aft(lam) <= 1 and lam[0] >= len(lam):
                assert plethysm_hh_reduced(lam, d, m) == plethysm_hh(lam, d, m)


class TestDispatch:
    def test_examples(self):
        assert plethysm_dispatch((4,), 2, 2) == (1, "general")
        value, path = plethysm_dispatch((19, 1), 5, 4)
        assert path == "reduced" and value == plethysm_coefficient_oracle((19, 1), 5, 4)

    def test_forced_paths_agree(self):
        lam, d, m = (6, 2, 2), 5, 2
        assert plethysm_dispatch(lam, d, m, path="general")[0] == plethysm_dispatch(lam, d, m, path="oracle")[0]
        with pytest.raises(ValueError):
            plethysm_dispatch(lam, d, m, path="sideways")

    def test_routing(self):
        assert choose_plethysm_path((8,), 4, 2) == "general"
        assert choose_plethysm_path((39, 1), 20, 2) == "reduced"
        assert choose_plethysm_path((4, 4, 4, 4, 4), 10, 2) == "oracle"
        with pytest.raises(Infeasible):
            choose_plethysm_path((5,) * 6, 10, 3)
        with pytest.raises(Infeasible):
            plethysm_dispatch((5,) * 6, 10, 3)
