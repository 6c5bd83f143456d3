from hypothesis import given, strategies as st

from oddnh import linalg as L

mats = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=m, max_size=m)))


def test_smith():
    assert L.smith_diagonal([[2, 4], [6, 8]]) == [2, 4]


@given(mats)
def test_rank_nullity(A):
    n = len(A[0])
    null = L.nullspace(A, n)
    assert L.rank(A) + len(null) == n
    for v in null:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in A)


@given(mats)
def test_smith_product_matches_rank(A):
    d = L.smith_diagonal(A)
    assert len([x for x in d if x]) == L.rank(A)


@given(mats)
def test_mod_p_rank_bounded(A):
    assert L.rank(A, 3) <= L.rank(A)
