from hypothesis import given, strategies as st

from oddnh import perms as P


def test_longest_word_and_wab():
    assert P.w0_word(3) == (1, 2, 1)
    assert P.word_to_perm(P.w0_word(4), 4) == P.longest(4)
    assert P.length(P.longest(4)) == 6
    assert P.wab(2, 1) == (2, 3, 1)
    assert P.canonical_word(P.wab(2, 1)) == (1, 2)


def test_reduced_word_signs_consistent():
    assert P.check_path_independence(4, 6) > 0


@given(st.permutations(range(1, 5)))
def test_canonical_word_is_reduced(w):
    w = tuple(w)
    word = P.canonical_word(w)
    assert P.is_reduced(word, 4)
    assert P.word_to_perm(word, 4) == w
    assert len(word) == P.length(w)


@given(st.permutations(range(1, 5)), st.permutations(range(1, 5)))
def test_compose_inverse(u, v):
    u, v = tuple(u), tuple(v)
    assert P.compose(u, P.inverse(u)) == P.identity(4)
    assert P.inverse(P.compose(u, v)) == P.compose(P.inverse(v), P.inverse(u))
