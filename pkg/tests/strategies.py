"""Shared hypothesis strategies."""

from __future__ import annotations

from hypothesis import strategies as st

from nilpoly.poly import IntPoly


def int_polys(max_degree: int = 4, bound: int = 9):
    return st.lists(st.integers(-bound, bound), max_size=max_degree + 1).map(IntPoly)


def nonzero(bound: int):
    return st.integers(-bound, bound).filter(bool)


def point_maps(min_size: int = 1, max_size: int = 6, bound: int = 50):
    return st.lists(st.tuples(st.integers(-bound, bound), st.integers(-bound, bound)),
                    min_size=min_size, max_size=max_size, unique_by=lambda p: p[0])
