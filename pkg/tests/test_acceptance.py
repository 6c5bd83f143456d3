"""Acceptance criteria 1-13, exact arithmetic, each under its own time budget.

A pass/fail line per criterion is printed in the pytest terminal summary.
"""

import random
import subprocess
import sys
from math import comb

import pytest

from oddnh import bimodules as B
from oddnh import grothendieck as G
from oddnh import homology as H
from oddnh import oddsym as S
from oddnh import onh as O
from oddnh import partitions as Pt
from oddnh.skewpoly import SkewPoly, brace, delta, staircase_exponents
from oddnh.textfmt import format_partition


def sgn(k):
    return -1 if k % 2 else 1


def rand_poly(n, rng, max_deg):
    t = {}
    for _ in range(5):
        cuts = sorted(rng.randint(0, max_deg) for _ in range(n - 1))
        a = tuple(y - x for x, y in zip([0] + cuts, cuts + [max_deg]))
        a = tuple(rng.randint(0, x) for x in a)
        t[a] = t.get(a, 0) + rng.choice([-3, -1, 1, 2])
    return SkewPoly(n, t)


def block_symmetric(a, b, deg, rng):
    n = a + b
    f = SkewPoly.zero(n)
    for j in range(deg + 1):
        for lam in Pt.partitions_of(j, None, a):
            for mu in Pt.partitions_of(deg - j, None, b):
                c = rng.choice([-1, 0, 1, 2])
                if c:
                    f = f + (S.schur(lam, a, "t").shift(0, n) * S.schur(mu, b, "t").shift(a, n)).scale(c)
    return f


def within(criterion):
    assert criterion.elapsed() < criterion.budget, f"took {criterion.elapsed():.1f}s"


# ---------------------------------------------------------------------------

@pytest.mark.criterion(1, "ONH operator relations on the staircase basis, n = 2,3,4", 10)
def test_c01_onh_relations(criterion):
    for n in (2, 3, 4):
        assert all(O.operator_relations(n).values()), n
        # the same relations evaluated directly with polynomial operators
        for a in staircase_exponents(n):
            f = SkewPoly.monomial(a)
            for i in range(1, n):
                assert f.dd(i).dd(i).is_zero()
                xi, xj = SkewPoly.var(i, n), SkewPoly.var(i + 1, n)
                assert (xi * f).dd(i) + xj * f.dd(i) == f
                assert xi * f.dd(i) + (xj * f).dd(i) == f
                if i + 1 < n:
                    assert f.dd(i).dd(i + 1).dd(i) == f.dd(i + 1).dd(i).dd(i + 1)
                for j in range(i + 2, n):
                    assert (f.dd(i).dd(j) + f.dd(j).dd(i)).is_zero()
                for k in range(1, n + 1):
                    if k in (i, i + 1):
                        continue
                    xk = SkewPoly.var(k, n)
                    assert ((xk * f).dd(i) + xk * f.dd(i)).is_zero()
    within(criterion)


@pytest.mark.criterion(2, "d^2 = 0 on OPol, ONH, Z_n, Z_ab, duals and the natural twist", 30)
def test_c02_d_squared(criterion):
    rng = random.Random(20)
    for n in range(1, 6):
        for deg in range(0, 21, 4):
            assert rand_poly(n, rng, deg).d().d().is_zero()
    for n in range(1, 5):
        for _ in range(5):
            assert O.random_element(n, rng, terms=3, max_exp=2).d().d().is_zero()
    for n in range(1, 6):
        for _ in range(3):
            z = B.ZElement((1,) * n, rand_poly(n, rng, 4))
            assert B.z_differential(B.z_differential(z)).is_zero()
    for n in range(2, 6):
        for a in range(1, n):
            b = n - a
            for deg in range(3):
                f = block_symmetric(a, b, deg, rng)
                assert B.z_differential(B.z_differential(B.ZElement((a, b), f))).is_zero()
                assert B.dual_differential(B.dual_differential(B.DualZElement((a, b), f))).payload.is_zero()
            assert B.natural_generator_differential(a, b).d_squared_zero
    within(criterion)


@pytest.mark.criterion(3, "d_w0(x^delta) = (-1)^C(n,3) and e_n^2 = e_n, n = 1..5", 5)
def test_c03_longest_and_idempotent(criterion):
    for n in range(1, 6):
        value = O.ONHElement.longest(n).act(SkewPoly.monomial(delta(n)))
        assert value == SkewPoly.const(sgn(comb(n, 3)), n)
        e = O.idempotent(n)
        assert e * e == e
    within(criterion)


@pytest.mark.criterion(4, "d(e_n) and d(d_w0) in PBW form, n = 2,3,4", 30)
def test_c04_idempotent_and_longest_differentials(criterion):
    for n in (2, 3, 4):
        e, dw0 = O.idempotent(n), O.ONHElement.longest(n)
        expected_e = O.ONHElement.zero(n)
        expected_w = O.ONHElement.zero(n)
        for i in range(1, n + 1):
            x = O.ONHElement.x(i, n)
            expected_e = expected_e + (x * e).scale(brace(i - 1))
            expected_w = expected_w + (x * dw0).scale(brace(i - 1))
            expected_w = expected_w - (dw0 * x).scale(sgn(comb(n, 2)) * brace(n - i))
        assert e.d() == expected_e
        assert dw0.d() == expected_w
    within(criterion)


@pytest.mark.criterion(5, "d(e_k) for k <= n <= 6; d(s_lambda) against the polynomial oracle, |lambda| <= 5", 60)
def test_c05_symmetric_differentials(criterion):
    for n in range(1, 7):
        e1 = S.elementary(1, n)
        for k in range(0, n + 1):
            rhs = e1 * S.elementary(k, n)
            if k + 1 <= n:
                rhs = rhs - S.elementary(k + 1, n).scale(brace(k + 1))
            assert S.elementary(k, n).d() == rhs, (k, n)
    for k in range(0, 6):
        for lam in Pt.partitions_of(k):
            n = k + 1
            oracle = S.expand_in_schur(S.schur(lam, n).d(), n)
            assert S.schur_differential(lam, n) == oracle, lam
    within(criterion)


@pytest.mark.criterion(6, "splitter differentials and the slider relation, a+b <= 5", 60)
def test_c06_splitters_and_slider(criterion):
    for n in range(2, 6):
        for a in range(1, n):
            b = n - a
            eab = O.block_idempotent([a, b])
            up, down = O.splitter("up", a, b), O.splitter("down", a, b)
            ey = O.ONHElement.from_poly(O.twisted_e1_block(a, b, n))
            ex = O.ONHElement.from_poly(O.twisted_e1_block(0, a, n))
            assert O.splitter_differential("up", a, b) == (eab * ey * up).scale(brace(a))
            assert O.splitter_differential("down", a, b) == (down * ex * eab).scale(sgn(a * b - 1) * brace(b))
            for s in range(0, n + 1):
                lhs, rhs = O.slider_sides(a, b, s)
                assert lhs == rhs, (a, b, s)
    within(criterion)


def _partner(lam, a, b):
    padded = list(lam) + [0] * (a - len(lam))
    comp = Pt.normalize([b - x for x in reversed(padded)])
    return Pt.conjugate(comp)


@pytest.mark.criterion(7, "trace pairing is a signed permutation; compatibility on all basis pairs, a,b <= 3", 30)
def test_c07_trace_pairing(criterion):
    for a in range(1, 4):
        for b in range(1, 4):
            rows, cols, M = B.pairing_matrix(a, b)
            for lam, line in zip(rows, M):
                for mu, v in zip(cols, line):
                    assert abs(v) == (1 if mu == _partner(lam, a, b) else 0), (a, b, lam, mu)
            for mu in Pt.box_partitions(b, a):
                f = B.zab_basis_element(a, b, mu)
                for lam in Pt.box_partitions(a, b):
                    h = B.DualZElement((a, b), S.schur(lam, a, "ht").shift(0, a + b))
                    lhs, rhs = B.compatibility_sides(h, f)
                    assert lhs == rhs, (a, b, lam, mu)
    within(criterion)


U2_EDGES = {("1", "x2"): 1}
U3_EDGES = {("1", "x2"): 1, ("x3", "x3^2"): 1, ("x3", "x2*x3"): 1,
            ("x3^2", "x2*x3^2"): 1, ("x2*x3", "x2*x3^2"): -1}


@pytest.mark.criterion(8, "U_n acyclic and hypercube-decomposed, 2 <= n <= 6; n = 2,3 diagrams", 10)
def test_c08_un(criterion):
    for n in range(2, 7):
        c = B.un_complex(n)
        assert c.d_squared_zero()
        assert H.cohomology(c, "Z", representatives=False).is_acyclic()
        comps = H.hypercube_decompose(c)
        assert all(x.certified for x in comps)
        assert sum(2 ** x.k for x in comps) == len(c.labels)
    assert B.un_complex(2).d == U2_EDGES
    assert B.un_complex(3).d == U3_EDGES
    assert sorted(len(x.labels) for x in H.hypercube_decompose(B.un_complex(3))) == [2, 4]
    within(criterion)


def _partition_count(m):
    return len(Pt.partitions_of(m))


@pytest.mark.criterion(9, "H(O-Lambda) through qdeg 24 equals Lima counts; Lima-product leading terms", 60)
def test_c09_olambda(criterion):
    dims = H.olambda_cohomology(24, "Z").dims_by_qdeg()
    # a 2x2-tileable partition of size 4m is a doubled partition of m
    for size in range(0, 13):
        expected = _partition_count(size // 4) if size % 4 == 0 else 0
        assert dims.get(2 * size, 0) == expected, size
    reps = H.lima_product_check(12, "rows") + H.lima_product_check(12, "columns")
    assert reps and all(r["ok"] for r in reps)
    within(criterion)


@pytest.mark.criterion(10, "V_ab: acyclic for a odd, Lima basis for a even, a,b <= 4", 30)
def test_c10_vab(criterion):
    failures = []
    for a in range(1, 5):
        for b in range(1, 5):
            res = H.cohomology(B.vab_complex(a, b), "Z")
            if a % 2:
                if not res.is_acyclic():
                    failures.append(f"V_{a},{b} has cohomology of rank {res.total()}")
            else:
                classes = sorted(k for g in res.groups for v in g.representatives for k in v)
                lima = sorted(format_partition(l) for l in Pt.box_partitions(b, a) if Pt.is_lima(l))
                if classes != lima or res.total() != len(lima):
                    failures.append(f"V_{a},{b} classes {classes}, Lima {lima}")
    within(criterion)
    assert not failures, "; ".join(failures)


@pytest.mark.criterion(11, "slash cohomology of V_i for p = 3,5; p-Lima slash basis for p = 2, 3", 30)
def test_c11_slash(criterion):
    for p in (3, 5):
        for i in range(p):
            for k in range(p - 1):
                got = H.slash_cohomology(H.v_module(i, p), k)
                expected = {2 * (i - k): 1} if k <= i < p - 1 else {}
                assert got == expected, (p, i, k)
    expected_basis = {2: [(), (2, 2), (4, 4), (2, 2, 2, 2)], 3: [(), (3, 3, 3)]}
    for p, maxdeg in ((2, 8), (3, 9)):
        r = H.pdg_symfun_slash(None, p, maxdeg)
        assert sorted(r.basis) == sorted(expected_basis[p])
        assert r.basis_verified
        assert sum(r.dims[0].values()) == len(expected_basis[p])
        assert all(not any(r.dims[k].values()) for k in range(1, p - 1))
    within(criterion)


@pytest.mark.criterion(12, "Grothendieck layer: [2] at i, bialgebra, K0 symbols, Euler characteristic of U_n", 10)
def test_c12_grothendieck(criterion):
    assert G.qint(2).eval_i() == G.GaussianInt(0, 0)
    assert G.bialgebra_check(6).passed
    rep = G.k0_symbols(5)
    assert rep["passed"]
    assert {(r["a"], r["b"]) for r in rep["products"]} == {(a, n - a) for n in range(6) for a in range(n + 1)}
    powers = [1, 1j, -1, -1j]
    for n in range(2, 7):
        chi = sum(powers[lab.qdeg % 4] for lab in B.un_complex(n).labels)
        assert chi == 0, n
    within(criterion)


@pytest.mark.criterion(13, "`oddnh verify all --n 4` passes deterministically", 300)
def test_c13_verify_cli(criterion):
    cmd = [sys.executable, "-m", "oddnh", "verify", "all", "--n", "4"]
    first = subprocess.run(cmd, capture_output=True, text=True, timeout=300)
    assert criterion.elapsed() < criterion.budget
    second = subprocess.run(cmd, capture_output=True, text=True, timeout=300)
    assert first.returncode == 0, first.stdout + first.stderr
    assert first.stdout == second.stdout
    assert "FAIL" not in first.stdout
