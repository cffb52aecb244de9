import itertools

import pytest
from hypothesis import given, settings, strategies as st

from multcoef.errors import Infeasible, SizeMismatch
from multcoef.kronecker import kronecker, kronecker_character, kronecker_dispatch, kronecker_jt
from multcoef.partitions import aft, conjugate, partitions_list
from multcoef.symfunc import kron_oracle


class TestExamples:
    def test_small_values(self):
        assert kronecker_character((2, 1), (2, 1), (2, 1)) == 1
        assert kronecker_character((1, 1), (1, 1), (2,)) == 1
        assert kronecker_character((1, 1), (1, 1), (1, 1)) == 0
        assert kronecker_jt((2, 1), (2, 1), (2, 1)) == 1

    @pytest.mark.parametrize("n", range(1, 8))
    def test_trivial_factor(self, n):
        for lam in partitions_list(n):
            for mu in partitions_list(n):
                want = int(lam == mu)
                assert kronecker_character((n,), lam, mu) == want
                assert kronecker_jt(lam, mu, (n,)) == want

    @pytest.mark.parametrize("n", range(3, 8))
    def test_standard_representation(self, n):
        s = (n - 1, 1)
        assert kronecker_jt(s, s, s) == kronecker_character(s, s, s) == 1

    @pytest.mark.parametrize("n", range(1, 9))
    def test_g_lambda_lambda_trivial(self, n):
        for lam in partitions_list(n):
            assert kronecker(lam, lam, (n,)) == 1


class TestOracles:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_character_matches_schur_oracle(self, n):
        for triple in itertools.product(partitions_list(n), repeat=3):
            assert kronecker_character(*triple) == kron_oracle(*triple)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_jt_matches_character(self, n):
        for triple in itertools.product(partitions_list(n), repeat=3):
            assert kronecker_jt(*triple) == kronecker_character(*triple)

    @pytest.mark.parametrize("n", [7, 8])
    def test_jt_hooks_and_two_rows(self, n):
        ps = partitions_list(n)
        for nu in ps:
            if aft(nu) > 2:
                continue
            for lam, mu in itertools.product(ps, repeat=2):
                assert kronecker_jt(lam, mu, nu) == kronecker_character(lam, mu, nu)

    def test_workers_give_same_value(self):
        lam = (4, 3, 2, 1)
        nu = (4, 2, 2, 1, 1)
        assert kronecker_jt(lam, lam, nu, workers=3) == kronecker_jt(lam, lam, nu) == kronecker_character(lam, lam, nu)


class TestDispatch:
    def test_paths(self):
        assert kronecker_dispatch((2, 1), (2, 1), (2, 1)) == (1, "jt")
        assert kronecker_dispatch((2, 1), (2, 1), (2, 1), strategy="character") == (1, "character")
        big = (5, 5, 5, 5)
        value, path = kronecker_dispatch(big, big, big, aft_threshold=2, oracle_max_n=20)
        assert path == "character" and value == kronecker_character(big, big, big)

    def test_infeasible(self):
        big = (6, 6, 6, 6)
        with pytest.raises(Infeasible):
            kronecker_dispatch(big, big, big, aft_threshold=2, oracle_max_n=20)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            kronecker((2, 1), (2,), (2, 1))
        with pytest.raises(SizeMismatch):
            kronecker_character((2, 1), (3,), (1, 1))

    def test_unknown_strategy(self):
        with pytest.raises(ValueError):
            kronecker_dispatch((1,), (1,), (1,), strategy="magic")

    def test_transposed_small_argument_is_used(self):
        # (1^n) is a column, so aft = 0 after transposing two arguments
        n = 14
        lam = (5, 4, 3, 2)
        value, path = kronecker_dispatch(lam, conjugate(lam), (1,) * n)
        assert (value, path) == (1, "jt")

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_symmetries(self, data):
        n = data.draw(st.integers(2, 9))
        ps = partitions_list(n)
        a, b, c = (data.draw(st.sampled_from(ps)) for _ in range(3))
        g = kronecker(a, b, c)
        for p in itertools.permutations((a, b, c)):
            assert kronecker(*p) == g
        assert kronecker(a, conjugate(b), conjugate(c)) == g


def distinct_parts_minus_one(lam):
    return len(set(lam)) - 1


def test_standard_rep_closed_form_small():
    """g(λ, λ, (n-1,1)) is one less than the number of distinct parts of λ."""
    for n in range(2, 10):
        for lam in partitions_list(n):
            assert kronecker_character(lam, lam, (n - 1, 1)) == distinct_parts_minus_one(lam)


def test_large_n_is_exact_and_fast():
    lam = (10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 1, 1, 1, 1, 1)
    value, path = kronecker_dispatch(lam, lam, (59, 1))
    assert path == "jt" and value == distinct_parts_minus_one(lam) == 9
    value, path = kronecker_dispatch(lam, lam, (58, 1, 1))
    assert path == "jt" and value > 0
