from hypothesis import given, strategies as st

from oddnh import grothendieck as G
from oddnh.grothendieck import GaussianInt, LaurentInt

laurent = st.dictionaries(st.integers(-5, 5), st.integers(-4, 4), max_size=4).map(LaurentInt)


def test_quantum_values():
    assert G.qint(2).eval_i() == GaussianInt(0, 0)
    assert G.qint(3).eval_i() == GaussianInt(-1, 0)
    assert G.qbinom(4, 2).eval_i() == GaussianInt(2, 0)
    assert str(G.qbinom(4, 2)) == "q^4 + q^2 + 2 + q^-2 + q^-4"


def test_structure_constants():
    assert G.uplus_mul(G.UPlus.E(2), G.UPlus.E(2)) == G.UPlus({4: 2})
    assert G.uplus_mul(G.UPlus.E(1), G.UPlus.E(1)) == G.UPlus()


def test_pascal():
    assert all(G.pascal_holds(m, k) for m in range(1, 10) for k in range(m + 1))


def test_bialgebra():
    assert G.bialgebra_check(6).passed
    assert G.coassociativity_check(5).passed
    assert G.associativity_check(6).passed


def test_k0_symbols():
    rep = G.k0_symbols(4)
    assert rep["passed"]
    assert [r["at_i"] for r in rep["euler"]][2:] == ["0"] * 4


@given(laurent, laurent)
def test_eval_is_ring_map(f, g):
    assert (f * g).eval_i() == f.eval_i() * g.eval_i()
    assert (f + g).eval_i() == f.eval_i() + g.eval_i()


@given(laurent)
def test_bar_involution(f):
    assert f.bar().bar() == f


@given(st.integers(0, 9), st.integers(0, 9))
def test_binomial_symmetric(m, k):
    if k <= m:
        assert G.qbinom(m, k) == G.qbinom(m, m - k)
        assert G.qbinom(m, k) == G.qbinom(m, k).bar()
