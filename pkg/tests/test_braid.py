from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import positive_words, word_pairs
from ttlink.braid import (BraidWord, Permutation, delta, delta_bar, full_twist, half_twist,
                          left_normal_form, parse_word, permutation_of, words_equal)
from ttlink.errors import InvalidArgument, Unsupported


def W(n, *letters):
    return BraidWord(n, letters)


class TestBraidWord:
    def test_letter_range_enforced(self):
        with pytest.raises(InvalidArgument):
            W(3, 3)
        with pytest.raises(InvalidArgument):
            W(3, 0)

    def test_negative_letters_are_representable(self):
        w = W(3, 1, -2)
        assert not w.is_positive
        assert w.inverse().letters == (2, -1)

    def test_text_form(self):
        assert str(W(5, 2, 1, 4, 3)) == "5: 2 1 4 3"
        assert parse_word("5: 2 1 4 3") == W(5, 2, 1, 4, 3)
        assert parse_word(str(W(4, 1, -3))) == W(4, 1, -3)

    def test_compact_form(self):
        assert parse_word("4321") == W(5, 4, 3, 2, 1)
        assert parse_word("132", strands=6) == W(6, 1, 3, 2)
        assert W(5, 1, 4, 3, 2).compact() == "1432"

    def test_product_and_power(self):
        assert (W(3, 1) * W(3, 2)).letters == (1, 2)
        assert (delta(4) ** 3).letters == (1, 2, 3) * 3


class TestPermutation:
    def test_delta_is_a_full_cycle(self):
        for n in range(2, 9):
            cycles = permutation_of(delta(n)).cycles()
            assert len(cycles) == 1 and len(cycles[0]) == n

    def test_square_of_generator_is_identity(self):
        assert permutation_of(W(2, 1, 1)).is_identity

    def test_hand_composed_example(self):
        perm = permutation_of(W(5, 2, 1, 4, 3))
        assert perm.images == (2, 4, 1, 5, 3)
        assert [perm(k) for k in range(1, 6)] == [2, 4, 1, 5, 3]

    def test_signs_ignored(self):
        assert permutation_of(W(4, 1, -2, 3)) == permutation_of(W(4, 1, 2, 3))

    def test_not_a_bijection(self):
        with pytest.raises(InvalidArgument):
            Permutation((1, 1, 2))

    @given(word_pairs())
    def test_homomorphism(self, pair):
        a, b = pair
        assert permutation_of(a * b) == permutation_of(a).then(permutation_of(b))


class TestTwists:
    def test_small_full_twists(self):
        assert full_twist(2).letters == (1, 1)
        assert full_twist(3).letters == (1, 2, 1, 2, 1, 2)
        assert len(full_twist(7)) == 42

    def test_full_twist_needs_two_strands(self):
        with pytest.raises(InvalidArgument):
            full_twist(1)

    @pytest.mark.parametrize("n", range(2, 10))
    def test_power_of_delta_is_full_twist(self, n):
        assert words_equal(delta(n) ** n, full_twist(n))
        assert words_equal(delta_bar(n) ** n, full_twist(n))
        assert words_equal(half_twist(n) * half_twist(n), full_twist(n))


class TestNormalForm:
    def test_generator_squared(self):
        nf = left_normal_form(W(2, 1, 1))
        assert nf.infimum == 2 and nf.factors == ()

    def test_half_twist(self):
        nf = left_normal_form(W(3, 1, 2, 1))
        assert nf.infimum == 1 and nf.factors == ()

    def test_single_permutation_braid(self):
        nf = left_normal_form(W(3, 2, 1))
        assert nf.infimum == 0 and len(nf.factors) == 1

    def test_rejects_negative_letters(self):
        with pytest.raises(Unsupported):
            left_normal_form(W(3, 1, -2))

    def test_relations(self):
        assert words_equal(W(3, 1, 2, 1), W(3, 2, 1, 2))
        assert words_equal(W(4, 1, 3), W(4, 3, 1))
        assert not words_equal(W(3, 1, 2), W(3, 2, 1))
        assert words_equal(delta(5) ** 5, full_twist(5))

    def test_mismatched_strands(self):
        with pytest.raises(InvalidArgument):
            words_equal(W(3, 1), W(4, 1))

    @given(positive_words(max_len=16))
    def test_idempotent(self, w):
        nf = left_normal_form(w)
        assert left_normal_form(nf.to_word()) == nf
        assert len(nf.to_word()) == len(w)


def _scramble(w: BraidWord, rng: random.Random, steps: int) -> BraidWord:
    """Apply random braid and far-commutation relations to a positive word."""
    letters = list(w.letters)
    for _ in range(steps):
        if len(letters) < 2:
            break
        k = rng.randrange(len(letters) - 1)
        a, b = letters[k], letters[k + 1]
        if abs(a - b) >= 2:
            letters[k], letters[k + 1] = b, a
        elif k + 2 < len(letters) and abs(a - b) == 1 and letters[k + 2] == a:
            letters[k:k + 3] = [b, a, b]
    return BraidWord(w.strands, tuple(letters))


@settings(max_examples=60)
@given(positive_words(max_len=14), st.integers(0, 2 ** 32), st.integers(0, 3))
def test_equality_is_an_equivalence_on_relation_orbits(w, seed, extra):
    rng = random.Random(seed)
    a = _scramble(w, rng, 30)
    b = _scramble(a, rng, 30)
    assert words_equal(w, w)
    assert words_equal(w, a) and words_equal(a, w)
    assert words_equal(a, b) and words_equal(w, b)
    # equal positive words always have the same length
    assert len(a) == len(b) == len(w)
    if w.strands > 1 and extra:
        longer = BraidWord(w.strands, w.letters + (1,) * extra)
        assert not words_equal(w, longer)
