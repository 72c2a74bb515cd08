from __future__ import annotations

from hypothesis import settings
from hypothesis import strategies as st

from braidhoms.braid import BraidWord

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def braid_words(draw, n: int | None = None, min_n: int = 3, max_n: int = 7, max_len: int = 30):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    letters = draw(st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))),
                            max_size=max_len))
    return BraidWord(n, tuple(letters))


@st.composite
def word_triples(draw, max_len: int = 12):
    n = draw(st.integers(3, 7))
    return tuple(draw(braid_words(n=n, max_len=max_len)) for _ in range(3))
