import numpy as np
from hypothesis import given, strategies as st

from brauer import exact

matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices)
def test_rank_matches_numpy(a):
    assert exact.rank(a) == np.linalg.matrix_rank(np.array(a, dtype=float))


@given(matrices)
def test_nullspace(a):
    ncols = len(a[0])
    basis = exact.nullspace(a, ncols)
    assert len(basis) == ncols - exact.rank(a)
    for v in basis:
        assert all(sum(x * y for x, y in zip(row, v)) == 0 for row in a)


def test_matpow():
    a = [[1, 1], [1, 0]]
    assert exact.matpow(a, 10) == [[89, 55], [55, 34]]
    assert exact.matpow(a, 0) == exact.identity(2)
