from itertools import permutations as windows

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kohnert import perms


def brute_code(w):
    # independent of the library: direct inversion counting on the raw window
    return tuple(
        sum(1 for j in range(i + 1, len(w)) if w[j] < w[i]) for i in range(len(w))
    )


class TestCompositions:
    def test_canonical_trims_trailing_zeros(self):
        assert perms.composition((2, 0, 1, 0, 0)) == (2, 0, 1)
        assert perms.composition(()) == ()
        with pytest.raises(ValueError):
            perms.composition((1, -1))

    def test_parse_format_roundtrip(self):
        assert perms.parse_composition("1,3,0,2,2,1") == (1, 3, 0, 2, 2, 1)
        assert perms.parse_composition("0") == ()
        assert perms.format_composition(()) == "0"
        assert perms.parse_composition(perms.format_composition((1, 0, 2))) == (1, 0, 2)
        with pytest.raises(ValueError):
            perms.parse_composition("1,x")

    def test_strict_descents_include_last_support_index(self):
        assert perms.strict_descents((1, 3, 0, 2, 2, 1)) == {2, 5, 6}
        assert perms.strict_descents((3, 2, 1)) == {1, 2, 3}
        assert perms.strict_descents(()) == set()

    def test_weak_descents(self):
        assert perms.descents((1, 3, 0, 2, 2, 1)) == {2, 4, 5, 6}
        assert perms.descents(()) == set()

    def test_sort_decreasing(self):
        assert perms.sort_decreasing((1, 3, 0, 2, 2, 1)) == (3, 2, 2, 1, 1)


class TestPermutations:
    def test_canonicalization(self):
        assert perms.permutation((2, 1, 3, 4)) == (2, 1)
        assert perms.permutation((1, 2, 3)) == (1,)
        assert perms.permutation(()) == (1,)
        with pytest.raises(ValueError):
            perms.permutation((1, 3))

    def test_parse_format(self):
        assert perms.parse_permutation("3142") == (3, 1, 4, 2)
        assert perms.parse_permutation("3,1,4,2") == (3, 1, 4, 2)
        assert perms.format_permutation((3, 1, 4, 2)) == "3142"
        with pytest.raises(ValueError):
            perms.parse_permutation("3x42")

    def test_descents(self):
        assert perms.perm_descents((2, 5, 1, 6, 7, 4, 3)) == {2, 5, 6}
        assert perms.perm_descents((1,)) == set()
        assert perms.perm_descents((3, 1, 4, 2)) == {1, 3}

    def test_inverse_and_length(self):
        assert perms.perm_inverse((3, 1, 4, 2)) == (2, 4, 1, 3)
        assert perms.perm_length((3, 2, 1)) == 3
        assert perms.perm_length((1,)) == 0


class TestLehmerCode:
    def test_paper_window(self):
        assert perms.lehmer_code((2, 5, 1, 6, 7, 4, 3)) == (1, 3, 0, 2, 2, 1)
        assert perms.perm_from_code((1, 3, 0, 2, 2, 1)) == (2, 5, 1, 6, 7, 4, 3)

    def test_identity(self):
        assert perms.lehmer_code((1,)) == ()
        assert perms.perm_from_code(()) == (1,)

    def test_3142(self):
        assert perms.lehmer_code((3, 1, 4, 2)) == (2, 0, 1)
        # cross-check against brute-force inversion counting over all of S_4
        for w in windows(range(1, 5)):
            assert perms.lehmer_code(w) == perms.composition(brute_code(w))
        assert perms.perm_from_code((2, 0, 1)) == (3, 1, 4, 2)

    def test_roundtrip_s5(self):
        # covers every length up to 10
        for w in perms.all_permutations(5):
            assert perms.perm_from_code(perms.lehmer_code(w)) == w

    @given(
        st.lists(st.integers(min_value=0, max_value=5), min_size=0, max_size=5)
    )
    @settings(max_examples=200)
    def test_code_roundtrip_from_composition(self, parts):
        alpha = perms.composition(parts)
        assert perms.lehmer_code(perms.perm_from_code(alpha)) == alpha


class TestReducedWords:
    def test_small(self):
        assert perms.reduced_words((2, 1, 4, 3)) == frozenset({(1, 3), (3, 1)})
        assert perms.reduced_words((1,)) == frozenset({()})
        assert perms.reduced_words((3, 2, 1)) == frozenset({(1, 2, 1), (2, 1, 2)})

    def test_lengths_and_products(self):
        for w in perms.all_permutations(4):
            ell = perms.perm_length(w)
            words = perms.reduced_words(w)
            assert all(len(a) == ell for a in words)
            assert all(perms.word_to_perm(a) == w for a in words)

    def test_bound_refusal(self):
        with pytest.raises(perms.BoundExceededError, match="exceeds bound"):
            perms.reduced_words(perms.longest_element(4), max_length=2)

    def test_is_reduced(self):
        assert perms.is_reduced((1, 2, 1))
        assert not perms.is_reduced((1, 1))


class TestDescentLemma:
    def test_perm_descents_within_composition_descents(self):
        # descents of the coded permutation lie inside the strict descent
        # closure of the composition
        for alpha in [
            (1, 3, 0, 2, 2, 1),
            (2, 0, 1),
            (0, 1),
            (3, 1, 2),
            (0, 0, 2, 1),
            (1, 1, 1),
        ]:
            w = perms.perm_from_code(alpha)
            assert perms.perm_descents(w) <= (
                perms.strict_descents(alpha) | perms.descents(alpha)
            )
            assert perms.strict_descents(alpha) <= perms.descents(alpha)
