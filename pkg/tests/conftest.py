from __future__ import annotations

from hypothesis import strategies as st

from ttlink.braid import BraidWord


@st.composite
def positive_words(draw, strands=None, max_len=12):
    n = strands if strands is not None else draw(st.integers(2, 8))
    letters = draw(st.lists(st.integers(1, n - 1), max_size=max_len))
    return BraidWord(n, tuple(letters))


@st.composite
def word_pairs(draw, max_len=10):
    n = draw(st.integers(2, 8))
    return draw(positive_words(n, max_len)), draw(positive_words(n, max_len))
