"""Hypothesis strategies shared by the test modules."""

from __future__ import annotations

from hypothesis import strategies as st

from brauer_osp import algebra as al
from brauer_osp import combinatorics as cb


def permutations(k: int):
    return st.permutations(list(range(1, k + 1))).map(tuple)


@st.composite
def partitions(draw, max_size: int = 8):
    k = draw(st.integers(min_value=1, max_value=max_size))
    return draw(st.sampled_from(list(cb.partitions(k))))


@st.composite
def diagrams(draw, k: int, l: int):
    return draw(st.sampled_from(al.diagram_space(k, l).diagrams))


@st.composite
def square_diagrams(draw, max_r: int = 4):
    r = draw(st.integers(min_value=0, max_value=max_r))
    return draw(diagrams(r, r))
