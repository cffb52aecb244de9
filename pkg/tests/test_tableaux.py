from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from multcoef.errors import SizeMismatch
from multcoef.partitions import compositions_of, contains, dimension, partitions_list
from multcoef.tableaux import (
    GTSpec,
    SkewShape,
    Tableau,
    count_gt_points,
    enumerate_ssyt,
    enumerate_syt,
    is_ballot,
    kostka,
    reading_word,
    standardize_to_type,
)


def skew_shapes(max_n):
    for n in range(0, max_n + 1):
        for lam in partitions_list(n):
            for j in range(0, n + 1):
                for mu in partitions_list(j):
                    if contains(lam, mu):
                        yield SkewShape(lam, mu)


def ssyt_by_filling(shape, weight):
    """Every assignment of letters to cells, kept when it is semistandard."""
    cells = shape.cells()
    bounds = shape.row_bounds()
    count = 0
    for values in product(range(1, len(weight) + 1), repeat=len(cells)):
        if any(values.count(i + 1) != w for i, w in enumerate(weight)):
            continue
        rows = [[] for _ in bounds]
        for (i, _), v in zip(cells, values):
            rows[i].append(v)
        if Tableau(shape, tuple(map(tuple, rows))).is_semistandard():
            count += 1
    return count


class TestSkewShape:
    def test_parse_and_size(self):
        s = SkewShape.parse("5,4,2/2,1")
        assert s.outer == (5, 4, 2) and s.inner == (2, 1) and s.size == 8
        assert SkewShape.parse("3,1").size == 4

    def test_inner_must_fit(self):
        with pytest.raises(SizeMismatch):
            SkewShape((2, 1), (3,))


class TestSYT:
    def test_examples(self):
        assert len(list(enumerate_syt(SkewShape((2, 1))))) == 2
        assert len(list(enumerate_syt(SkewShape((6,))))) == 1
        assert len(list(enumerate_syt(SkewShape((2, 2), (1,))))) == 2

    @pytest.mark.parametrize("shape", list(skew_shapes(6)), ids=str)
    def test_all_standard_and_distinct(self, shape):
        tabs = list(enumerate_syt(shape))
        assert all(t.is_standard() for t in tabs)
        assert len({t.rows for t in tabs}) == len(tabs)
        if not shape.inner:
            assert len(tabs) == dimension(shape.outer)
        assert len(tabs) == ssyt_by_filling(shape, (1,) * shape.size)


class TestStandardize:
    def test_block_collapse_examples(self):
        t = Tableau.of([(1, 2, 3, 6), (4, 5, 9), (7, 8)])
        s = standardize_to_type(t, (3, 3, 3))
        assert s is not None and s.rows == ((1, 1, 1, 2), (2, 2, 3), (3, 3))
        bad = Tableau.of([(1, 2, 3, 4), (5, 6, 7), (8, 9)])
        assert standardize_to_type(bad, (3, 3, 3)) is None

    @pytest.mark.parametrize("lam", [(3, 2), (2, 2, 1), (4, 1, 1)])
    def test_identity_type(self, lam):
        for t in enumerate_syt(SkewShape(lam)):
            assert standardize_to_type(t, (1,) * sum(lam)) == t

    @pytest.mark.parametrize("lam", [(3, 2, 1), (4, 2), (3, 3)])
    def test_bijection_with_ssyt(self, lam):
        """Each SSYT of type μ comes from exactly one SYT."""
        shape = SkewShape(lam)
        for mu in partitions_list(sum(lam)):
            got = [s for t in enumerate_syt(shape) if (s := standardize_to_type(t, mu)) is not None]
            assert all(s.is_semistandard() and s.weight == mu for s in got)
            assert sorted(s.rows for s in got) == sorted(s.rows for s in enumerate_ssyt(shape, mu))


class TestWords:
    def test_reading_word_examples(self):
        t = Tableau.of([(1, 1, 1), (2, 2, 2), (1, 3, 3)], inner=(2, 1))
        assert t.shape.outer == (5, 4, 3) and t.is_semistandard()
        assert reading_word(t) == (1, 1, 1, 2, 2, 2, 3, 3, 1)
        assert reading_word(Tableau.of([(1, 1, 2)])) == (2, 1, 1)
        assert reading_word(Tableau.of([])) == ()

    def test_ballot_examples(self):
        assert is_ballot((1, 1, 1, 2, 2, 2, 3, 3, 1))
        assert not is_ballot((2, 1))
        assert is_ballot(())

    @given(st.lists(st.integers(1, 4), max_size=12))
    def test_ballot_definition(self, word):
        want = all(
            word[:p].count(i) >= word[:p].count(i + 1) for p in range(len(word) + 1) for i in range(1, 4)
        )
        assert is_ballot(word) == want


class TestKostka:
    def test_examples(self):
        for lam in partitions_list(6):
            assert kostka(lam, lam) == 1
        assert kostka((2, 1), (1, 1, 1)) == 2
        assert kostka((2, 2), (1, 1, 1, 1)) == 2
        witness = Tableau.of([(1, 1, 2, 2, 4), (2, 3, 4, 5), (4, 5)])
        assert witness.is_semistandard() and witness.weight == (2, 3, 1, 3, 2)
        value = kostka((5, 4, 2), (2, 3, 1, 3, 2))
        assert value == sum(1 for _ in enumerate_ssyt(SkewShape((5, 4, 2)), (2, 3, 1, 3, 2))) == 21

    def test_degenerate_specs(self):
        assert count_gt_points(GTSpec((3, 1), (3, 1), ())) == 1
        assert count_gt_points(GTSpec((3, 1), (), (2, 1, 2))) == 0
        assert kostka("3,1/1", (1, 1, 1)) == kostka(SkewShape((3, 1), (1,)), (1, 1, 1))

    @pytest.mark.parametrize("shape", list(skew_shapes(5)), ids=str)
    def test_against_filling_oracle(self, shape):
        n = shape.size
        for r in range(1, min(n, 3) + 1):
            for w in compositions_of(n, r):
                assert kostka(shape, w) == ssyt_by_filling(shape, w)

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_weight_symmetry(self, data):
        lam = data.draw(st.sampled_from(partitions_list(8)))
        w = data.draw(st.permutations([3, 2, 2, 1]))
        assert kostka(lam, w) == kostka(lam, (3, 2, 2, 1))

    def test_zeros_do_not_matter(self):
        for lam in partitions_list(6):
            for w in compositions_of(6, 3, strong=True):
                base = kostka(lam, w)
                for pos in range(4):
                    assert kostka(lam, w[:pos] + (0,) + w[pos:]) == base

    def test_large_value_is_exact(self):
        # K_{λ,1^n} = f^λ far beyond 64 bits
        lam = (9, 7, 5, 3)
        assert kostka(lam, (1,) * sum(lam)) == dimension(lam)
