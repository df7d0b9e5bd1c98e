"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from recolor.graph import labeled_graph_from_mask


@st.composite
def graphs(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1)) if n > 1 else 0
    return labeled_graph_from_mask(n, mask)
