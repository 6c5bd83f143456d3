import pytest
from hypothesis import given, settings, strategies as st

from oddnh import oddsym as S
from oddnh import partitions as Pt
from oddnh.textfmt import parse_poly


def test_frozen_schur_differentials():
    assert S.schur_differential((1,), 3) == {(2,): 1, (1, 1): 1}
    assert not any(S.schur_differential((2, 2), 5).values())


def test_frozen_twisted_schur():
    expected = parse_poly("x1^2*x2 - x1^2*x3 + x1*x2^2 + x1*x3^2 - x2^2*x3 - x2*x3^2", 3)
    assert S.schur((2, 1), 3, "t") == expected


def test_elementary_is_odd_symmetric():
    for n in range(1, 5):
        for k in range(n + 1):
            assert S.is_odd_symmetric(S.elementary(k, n))
    assert not S.is_odd_symmetric(parse_poly("x1", 2))


@pytest.mark.parametrize("n", range(1, 6))
def test_d_elementary(n):
    e1 = S.elementary(1, n)
    for k in range(n + 1):
        rhs = e1 * S.elementary(k, n)
        if k + 1 <= n and (k + 1) % 2:
            rhs = rhs - S.elementary(k + 1, n)
        assert S.elementary(k, n).d() == rhs


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 4).flatmap(lambda k: st.sampled_from(Pt.partitions_of(k))))
def test_schur_differential_matches_polynomials(lam):
    n = sum(lam) + 1
    assert S.schur_differential(lam, n) == S.expand_in_schur(S.schur(lam, n).d(), n)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 3).flatmap(lambda k: st.sampled_from(Pt.partitions_of(k, None, 3))))
def test_variants_related_by_theta(lam):
    s, t, h, ht = (S.schur(lam, 3, v) for v in S.VARIANTS)
    assert t == s.theta()
    assert h == ht.theta()


def test_pieri():
    assert S.pieri_e1((1,), 2) == {(2,): 1, (1, 1): 1}


def test_expand_round_trip():
    comb = {(2, 1): 3, (1,): -1}
    assert S.expand_in_schur(S.combine(comb, 3), 3) == comb


def test_expand_rejects_non_symmetric():
    with pytest.raises(ValueError):
        S.expand_in_schur(parse_poly("x1", 2), 2)
