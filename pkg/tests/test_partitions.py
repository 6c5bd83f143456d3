from hypothesis import given, strategies as st

from oddnh import partitions as Pt

parts = st.lists(st.integers(0, 6), max_size=5).map(lambda p: Pt.normalize(sorted(p, reverse=True)))


def test_counts():
    assert [len(Pt.partitions_of(k)) for k in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert len(Pt.box_partitions(2, 3)) == 10


def test_lima():
    assert Pt.lima_enumerate(8) == [(), (2, 2), (4, 4), (2, 2, 2, 2)]
    assert Pt.lima_enumerate(9, 3) == [(), (3, 3, 3)]
    assert Pt.is_lima((4, 4, 2, 2))
    assert not Pt.is_lima((2, 2, 2))


@given(parts)
def test_conjugate_involution(lam):
    assert Pt.conjugate(Pt.conjugate(lam)) == lam
    assert Pt.size(Pt.conjugate(lam)) == Pt.size(lam)


@given(parts)
def test_addable_boxes(lam):
    for i in Pt.addable_rows(lam):
        mu = Pt.add_box(lam, i)
        assert Pt.size(mu) == Pt.size(lam) + 1
        assert Pt.normalize(mu) == mu
        assert Pt.added_content(lam, i) in Pt.contents(mu)
