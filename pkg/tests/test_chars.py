"""Weight multiplicity characters and the combinatorial character of the
fundamental simple modules."""

import pytest
from hypothesis import given, settings, strategies as st

from qloop.chars import Character, character, bkk_character
from qloop.reps import natural_finite


class TestCharacter:
    def test_ring_ops(self):
        a = Character({(1, 0): 1, (0, 1): 2})
        b = Character({(1, 0): 1})
        assert (a + b).mult == {(1, 0): 2, (0, 1): 2}
        assert (a - b).mult == {(0, 1): 2}
        assert (a * b).mult == {(2, 0): 1, (1, 1): 2}
        assert a.dim() == 3
        assert a.support() == {(1, 0), (0, 1)}

    def test_zero_mults_dropped(self):
        assert Character({(0,): 0}).mult == {}
        a = Character({(1,): 1})
        assert (a - a).mult == {}

    @given(st.integers(1, 3), st.integers(1, 3))
    @settings(max_examples=9, deadline=None)
    def test_mul_commutative(self, i, j):
        a = Character({(i, 0): 1, (0, j): 1})
        b = Character({(j, i): 2})
        assert a * b == b * a


class TestNaturalCharacter:
    def test_natural(self):
        ch = character(natural_finite(2, 1))
        assert ch.mult == {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1}


class TestCombinatorial:
    def test_r1_is_natural(self):
        for M, N in [(1, 1), (2, 1), (2, 2)]:
            assert bkk_character(M, N, 1) == character(natural_finite(M, N))

    @pytest.mark.parametrize("M,N,r,dim", [
        (1, 1, 1, 2), (2, 1, 2, 4), (2, 2, 2, 8), (3, 1, 2, 7),
        (3, 1, 3, 8), (3, 2, 2, 12), (3, 2, 3, 20), (4, 1, 2, 11),
        (4, 1, 3, 15), (4, 1, 4, 16)])
    def test_frozen_dimensions(self, M, N, r, dim):
        assert bkk_character(M, N, r).dim() == dim

    def test_pure_even_case_is_binomial(self):
        # with N small and r <= M the purely even part contributes C(M, r)
        ch = bkk_character(3, 1, 2)
        even = [w for w in ch.support() if w[3] == 0]
        assert len(even) == 3  # C(3,2)

    def test_multiplicity_free_top(self):
        ch = bkk_character(2, 2, 2)
        top = tuple([1, 1, 0, 0])
        assert ch.mult[top] == 1

    def test_r_range(self):
        with pytest.raises(AssertionError):
            bkk_character(2, 1, 0)
        with pytest.raises(AssertionError):
            bkk_character(2, 1, 3)
