"""Hypothesis strategies for exact rationals, vectors and matrices."""

from fractions import Fraction

import numpy as np
from hypothesis import strategies as st

from bicross.kernel import rational_array

small_ints = st.integers(-3, 3)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def vectors(n: int, elements=rationals):
    return st.lists(elements, min_size=n, max_size=n).map(lambda xs: rational_array(xs).reshape(n))


def matrices(rows: int, cols: int, elements=small_ints):
    return st.lists(elements, min_size=rows * cols, max_size=rows * cols).map(
        lambda xs: rational_array(xs).reshape(rows, cols)
    )


def tensors(shape, elements=small_ints):
    size = int(np.prod(shape))
    return st.lists(elements, min_size=size, max_size=size).map(
        lambda xs: rational_array(xs).reshape(shape)
    )


def as_fraction_matrix(m) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in m]
