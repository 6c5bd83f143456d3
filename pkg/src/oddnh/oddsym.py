"""
Odd symmetric polynomials inside the skew polynomial ring.

Schur polynomials come in four variants:

    's'    untwisted       w0 theta d_w0( x~^delta x~^lam )
    't'    twisted         theta(s)
    'h'    hat             theta(ht)
    'ht'   hat twisted     (-1)^{sum_{i<j} lam_i lam_j} d_w0( x^lam x^delta )

The hat-twisted variant is also reachable through w0 d_w0 applied to the
reversed staircase monomial x^beta, beta_i = lam_{n+1-i} + i - 1; the sign
that makes this agree with the form above is returned by hat_literal_sign.

Formal combinations of partitions are plain dicts {partition: int}.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, Optional

from . import linalg
from . import partitions as Pt
from .perms import w0_word
from .skewpoly import SkewPoly, brace, delta

Combination = Dict[Pt.Partition, int]

VARIANTS = ("s", "t", "h", "ht")
_ALIASES = {
    "s": "s", "untwisted": "s",
    "t": "t", "twisted": "t", "tilde": "t",
    "h": "h", "hat": "h",
    "ht": "ht", "hat-twisted": "ht", "hat_twisted": "ht", "hattilde": "ht",
}


def _sgn(k: int) -> int:
    return -1 if k & 1 else 1


def variant_tag(v: str) -> str:
    try:
        return _ALIASES[v]
    except KeyError:
        raise ValueError(f"unknown Schur variant {v!r}") from None


# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def elementary(k: int, n: int, twisted: bool = False) -> SkewPoly:
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > n:
        return SkewPoly.zero(n)
    t = {}
    for idx in combinations(range(n), k):
        a = [0] * n
        for i in idx:
            a[i] = 1
        t[tuple(a)] = 1
    e = SkewPoly(n, t)
    return e.theta() if twisted else e


@lru_cache(maxsize=None)
def complete(k: int, n: int) -> SkewPoly:
    """From sum_{i=0}^k (-1)^{i+C(i,2)} e_i h_{k-i} = 0 with h_0 = 1."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return SkewPoly.one(n)
    out = SkewPoly.zero(n)
    for i in range(1, min(k, n) + 1):
        out = out - (elementary(i, n) * complete(k - i, n)).scale(_sgn(i + comb(i, 2)))
    return out


def _dw0(f: SkewPoly) -> SkewPoly:
    return f.dd_word(w0_word(f.n))


@lru_cache(maxsize=None)
def _schur(lam: Pt.Partition, n: int, tag: str) -> SkewPoly:
    if n == 0:
        if lam:
            raise ValueError("partition too long")
        return SkewPoly.one(0)
    lp = Pt.padded(lam, n)
    if tag == "s":
        arg = (SkewPoly.monomial(delta(n)) * SkewPoly.monomial(lp)).theta()
        return _dw0(arg).theta().w0()
    if tag == "t":
        return _schur(lam, n, "s").theta()
    if tag == "ht":
        f = SkewPoly.monomial(lp) * SkewPoly.monomial(delta(n))
        return _dw0(f).scale(_sgn(Pt.cross_sum(lam)))
    if tag == "h":
        return _schur(lam, n, "ht").theta()
    raise ValueError(tag)


def schur(lam, n: int, variant: str = "s") -> SkewPoly:
    lam = Pt.normalize(lam)
    if len(lam) > n:
        raise ValueError(f"partition {list(lam)} is longer than {n}")
    return _schur(lam, n, variant_tag(variant))


def schur_twisted_direct(lam, n: int) -> SkewPoly:
    """(-1)^{C(n,3)+C(n,2)|lam|} w0 d_w0(x^lam x^delta): an independent route to the twisted variant."""
    lam = Pt.normalize(lam)
    f = SkewPoly.monomial(Pt.padded(lam, n)) * SkewPoly.monomial(delta(n))
    return _dw0(f).w0().scale(_sgn(comb(n, 3) + comb(n, 2) * sum(lam)))


def schur_hat_literal(lam, n: int) -> SkewPoly:
    """(-1)^{C(n,3)+eta(lam)} w0 d_w0(x_1^{lam_n} ... x_n^{lam_1+n-1}), eta(lam) = sum_j lam_j C(n-j+1, 2)."""
    lam = Pt.normalize(lam)
    lp = Pt.padded(lam, n)
    beta = tuple(lp[n - i] + i - 1 for i in range(1, n + 1))
    return _dw0(SkewPoly.monomial(beta)).w0().scale(_sgn(comb(n, 3) + Pt.eta(lam, n)))


def hat_literal_sign(lam, n: int) -> int:
    """schur_hat_literal = hat_literal_sign * schur(.., 'ht')."""
    lam = Pt.normalize(lam)
    return _sgn(comb(n + 1, 4) + sum(l * (n - j) for j, l in enumerate(lam, 1)))


# ---------------------------------------------------------------------------

def is_odd_symmetric(f: SkewPoly, n: Optional[int] = None) -> bool:
    """theta(f) is killed by every divided difference."""
    n = f.n if n is None else n
    g = f.theta()
    return all(g.dd(i).is_zero() for i in range(1, n))


def is_twisted_symmetric(f: SkewPoly) -> bool:
    return all(f.dd(i).is_zero() for i in range(1, f.n))


def schur_differential(lam, n: Optional[int] = None) -> Combination:
    """d(s_lam) = sum over added boxes in row i of (-1)^{|lam/i| + i - 1} {ct} s_mu."""
    lam = Pt.normalize(lam)
    if n is not None and len(lam) > n:
        raise ValueError("partition too long")
    out: Combination = {}
    for i in Pt.addable_rows(lam):
        if n is not None and i > n:
            continue
        ct = Pt.added_content(lam, i)
        if brace(ct):
            mu = Pt.add_box(lam, i)
            out[mu] = out.get(mu, 0) + _sgn(Pt.above(lam, i) + i - 1)
    return {k: v for k, v in out.items() if v}


def pieri_e1(lam, n: Optional[int] = None) -> Combination:
    """s~_lam e~_1 = sum over added boxes in row i of (-1)^{|i/lam|} s~_mu."""
    lam = Pt.normalize(lam)
    out: Combination = {}
    for i in Pt.addable_rows(lam):
        if n is not None and i > n:
            continue
        mu = Pt.add_box(lam, i)
        out[mu] = out.get(mu, 0) + _sgn(Pt.below(lam, i))
    return out


def hat_pieri_e1(lam, n: int) -> Combination:
    """e~_1 s^~_lam = (-1)^{C(n-1,2)} sum (-1)^{|i/lam| + i - 1} s^~_mu."""
    lam = Pt.normalize(lam)
    out: Combination = {}
    for i in Pt.addable_rows(lam):
        if i > n:
            continue
        mu = Pt.add_box(lam, i)
        out[mu] = out.get(mu, 0) + _sgn(comb(n - 1, 2) + Pt.below(lam, i) + i - 1)
    return out


def hat_schur_differential(lam, n: int) -> Combination:
    """d(s^_lam) = (-1)^{C(n-1,2)} sum (-1)^{|i/lam| + i - 1} {ct} s^_mu."""
    lam = Pt.normalize(lam)
    out: Combination = {}
    for i in Pt.addable_rows(lam):
        if i > n:
            continue
        ct = Pt.added_content(lam, i)
        if brace(ct):
            mu = Pt.add_box(lam, i)
            out[mu] = out.get(mu, 0) + _sgn(comb(n - 1, 2) + Pt.below(lam, i) + i - 1)
    return out


def combine(comb_: Combination, n: int, variant: str = "s") -> SkewPoly:
    out = SkewPoly.zero(n)
    for lam, c in comb_.items():
        out = out + schur(lam, n, variant).scale(c)
    return out


def expand_in_schur(f: SkewPoly, n: Optional[int] = None, variant: str = "s", max_degree: Optional[int] = None) -> Combination:
    """Coefficients of f in the Schur basis, found by an exact linear solve in each degree."""
    n = f.n if n is None else n
    tag = variant_tag(variant)
    symmetric = is_twisted_symmetric(f) if tag in ("t", "ht") else is_odd_symmetric(f)
    if not symmetric:
        raise ValueError("element is not odd symmetric for this variant")
    out: Combination = {}
    for qd in sorted(f.degrees()):
        k = qd // 2
        if max_degree is not None and k > max_degree:
            raise ValueError(f"degree {k} exceeds the configured bound {max_degree}")
        part = f.homogeneous_part(qd)
        lams = list(Pt.partitions_of(k, None, n))
        polys = [schur(l, n, tag) for l in lams]
        monos = sorted({a for g in polys for a in g.terms} | set(part.terms))
        A = [[g.terms.get(m, 0) for g in polys] for m in monos]
        b = [part.terms.get(m, 0) for m in monos]
        x = linalg.solve_integral(A, b)
        for l, c in zip(lams, x):
            if c:
                out[l] = c
    return out


def variant_square_sign(lam, n: int, row: str) -> int:
    """Sign of the horizontal w0-arrow: s <-> s^ (row 's') or s~ <-> s^~ (row 't')."""
    lam = Pt.normalize(lam)
    k = comb(n - 1, 2) if row == "s" else comb(n, 2)
    return _sgn(comb(n, 3) + k * sum(lam) + Pt.cross_sum(lam))
