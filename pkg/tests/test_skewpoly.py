from hypothesis import given, settings, strategies as st

from oddnh.skewpoly import (SkewPoly, brace, delta, mono_mul_sign, module_differential, directional,
                            staircase_exponents)

N = 3
exps = st.tuples(*[st.integers(0, 3)] * N)
polys = st.dictionaries(exps, st.integers(-3, 3), max_size=4).map(lambda t: SkewPoly(N, t))
monos = exps.map(SkewPoly.monomial)


def x(i, n=N):
    return SkewPoly.var(i, n)


def test_anticommuting_generators():
    assert x(2) * x(1) == (x(1) * x(2)).scale(-1)
    assert (x(1) * x(1)).terms == {(2, 0, 0): 1}


def test_braces():
    assert [brace(k) for k in range(-2, 4)] == [0, 1, 0, 1, 0, 1]


def test_frozen_differential():
    # d(x1 x2) = x1^2 x2 - x1 x2^2
    assert (x(1) * x(2)).d() == SkewPoly(N, {(2, 1, 0): 1, (1, 2, 0): -1})
    assert x(1).d() == x(1) * x(1)
    assert (x(1) * x(1)).d().is_zero()


def test_divided_difference_values():
    n = 2
    assert SkewPoly.var(1, n).dd(1) == SkewPoly.one(n)
    assert SkewPoly.var(2, n).dd(1) == SkewPoly.one(n)
    assert (SkewPoly.var(1, n) * SkewPoly.var(1, n)).dd(1) == SkewPoly.var(1, n) - SkewPoly.var(2, n)


def test_staircase_and_delta():
    assert delta(3) == (2, 1, 0)
    assert len(list(staircase_exponents(3))) == 6


@given(monos, monos, monos)
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(exps, exps)
def test_swap_sign(a, b):
    swap = sum(a) * sum(b) - sum(p * q for p, q in zip(a, b))
    f, g = SkewPoly.monomial(a), SkewPoly.monomial(b)
    assert g * f == (f * g).scale(-1 if swap % 2 else 1)
    assert mono_mul_sign(a, b) in (1, -1)


@given(polys)
def test_d_squared(f):
    assert f.d().d().is_zero()


@given(monos, polys)
def test_leibniz(f, g):
    sign = -1 if f.parity else 1
    assert (f * g).d() == f.d() * g + (f * g.d()).scale(sign)


@given(polys)
def test_involutions(f):
    assert f.theta().theta() == f
    assert f.w0().w0() == f
    assert f.iota().iota() == f


@given(polys, st.integers(1, N - 1))
def test_dd_squares_to_zero(f, i):
    assert f.dd(i).dd(i).is_zero()


@settings(max_examples=30)
@given(monos, st.tuples(*[st.integers(0, 1)] * N), st.tuples(*[st.integers(0, 1)] * N))
def test_null_homotopy(f, alpha, beta):
    ip = sum(p * q for p, q in zip(alpha, beta))
    lhs = directional(beta, module_differential(alpha, f)) + module_differential(alpha, directional(beta, f))
    assert lhs == f.scale(ip)


def test_mod_p_reduces():
    f = SkewPoly(2, {(1, 0): 4, (0, 1): 3}).mod(3)
    assert f.terms == {(1, 0): 1}
