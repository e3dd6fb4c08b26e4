from __future__ import annotations

import hypothesis.strategies as st


@st.composite
def citation_vectors(draw, max_len: int = 8, max_cite: int = 12):
    """Random valid citation vectors, possibly empty."""
    counts = draw(st.lists(st.integers(1, max_cite), max_size=max_len))
    return tuple(sorted(counts, reverse=True))


@st.composite
def nonempty_citation_vectors(draw, max_len: int = 8, max_cite: int = 12):
    counts = draw(st.lists(st.integers(1, max_cite), min_size=1, max_size=max_len))
    return tuple(sorted(counts, reverse=True))
