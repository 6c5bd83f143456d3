"""
The odd nilHecke algebra ONH_n in PBW form x^a d_w.

Products are computed by pushing polynomials leftward through divided
differences, one letter at a time, using

    d_i f = d_i(f) + (-1)^{p(f)} s_i(f) d_i

and then merging divided-difference words through the signed word table.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Dict, Mapping, Optional, Sequence, Tuple

from . import perms as P
from .skewpoly import Exp, SkewPoly, brace, delta, mono_dd, mono_mul, mono_si, mono_d, staircase_exponents

Key = Tuple[Exp, P.Perm]


def _sgn(k: int) -> int:
    return -1 if k & 1 else 1


class ONHElement:
    """Integer combination of x^a d_w."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Mapping[Key, int]] = None):
        self.n = n
        t = {}
        if terms:
            for (a, w), c in terms.items():
                if len(a) != n or len(w) != n:
                    raise ValueError("term does not match the strand count")
                if c:
                    t[(tuple(a), tuple(w))] = c
        self.terms = t

    @classmethod
    def _raw(cls, n, terms):
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = {k: c for k, c in terms.items() if c}
        return obj

    # constructors
    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    @classmethod
    def one(cls, n):
        return cls._raw(n, {((0,) * n, P.identity(n)): 1})

    @classmethod
    def from_poly(cls, f: SkewPoly) -> "ONHElement":
        e = P.identity(f.n)
        return cls._raw(f.n, {(a, e): c for a, c in f.terms.items()})

    @classmethod
    def x(cls, i: int, n: int) -> "ONHElement":
        return cls.from_poly(SkewPoly.var(i, n))

    @classmethod
    def dw(cls, w: Sequence[int]) -> "ONHElement":
        w = tuple(w)
        if not P.is_perm(w):
            raise ValueError(f"{w} is not a permutation")
        return cls._raw(len(w), {((0,) * len(w), w): 1})

    @classmethod
    def dd(cls, i: int, n: int) -> "ONHElement":
        if not 1 <= i <= n - 1:
            raise ValueError(f"divided difference index {i} out of range")
        return cls.dw(P.transposition(i, n))

    @classmethod
    def word(cls, word: Sequence[int], n: int) -> "ONHElement":
        """The product d_{i1} ... d_{ik}."""
        s, w = P.word_sign(tuple(word), n)
        if not s:
            return cls.zero(n)
        return cls._raw(n, {((0,) * n, w): s})

    @classmethod
    def longest(cls, n: int) -> "ONHElement":
        return cls.dw(P.longest(n))

    # arithmetic
    def _check(self, other):
        if not isinstance(other, ONHElement):
            raise TypeError("expected ONHElement")
        if other.n != self.n:
            raise ValueError(f"strand count mismatch: {self.n} vs {other.n}")

    def _lift(self, other):
        if isinstance(other, int):
            return ONHElement.one(self.n).scale(other)
        if isinstance(other, SkewPoly):
            if other.n != self.n:
                raise ValueError("strand count mismatch")
            return ONHElement.from_poly(other)
        self._check(other)
        return other

    def __add__(self, other):
        other = self._lift(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, 0) + c
        return ONHElement._raw(self.n, t)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> "ONHElement":
        return ONHElement._raw(self.n, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._lift(other)
        return pbw_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return self._lift(other) * self

    def __eq__(self, other):
        if isinstance(other, (int, SkewPoly)):
            other = self._lift(other)
        if not isinstance(other, ONHElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        from .textfmt import format_onh
        return f"ONHElement({format_onh(self)!r}, n={self.n})"

    def __str__(self):
        from .textfmt import format_onh
        return format_onh(self)

    # grading
    def degrees(self):
        return {(2 * sum(a) - 2 * P.length(w), (sum(a) + P.length(w)) & 1) for a, w in self.terms}

    def d(self) -> "ONHElement":
        return onh_differential(self)

    def act(self, f: SkewPoly) -> SkewPoly:
        return act(self, f)

    def poly_part(self) -> Dict[P.Perm, SkewPoly]:
        """Group terms as sum_w f_w d_w."""
        groups: Dict[P.Perm, Dict[Exp, int]] = {}
        for (a, w), c in self.terms.items():
            groups.setdefault(w, {})[a] = c
        return {w: SkewPoly(self.n, t) for w, t in groups.items()}


# ---------------------------------------------------------------------------
# rewriting

@lru_cache(maxsize=None)
def _push_word(word: Tuple[int, ...], b: Exp) -> Tuple[Tuple[Key, int], ...]:
    """d_{i1} ... d_{ik} x^b rewritten as sum c x^a d_u; suffixes are shared through the cache."""
    n = len(b)
    if not word:
        return (((b, P.identity(n)), 1),)
    i = word[0]
    out: Dict[Key, int] = {}
    for (a, u), c in _push_word(word[1:], b):
        for s, a2 in mono_dd(i, a):
            k = (a2, u)
            out[k] = out.get(k, 0) + s * c
        s_u, su = P.left_letter_sign(i, u)
        if s_u:
            s2, a3 = mono_si(i, a)
            k = (a3, su)
            out[k] = out.get(k, 0) + s_u * s2 * _sgn(sum(a)) * c
    return tuple((k, c) for k, c in out.items() if c)


def _push(w: P.Perm, b: Exp) -> Tuple[Tuple[Key, int], ...]:
    """d_w x^b in PBW form."""
    return _push_word(P.canonical_word(w), b)


def pbw_mul(xi: ONHElement, eta: ONHElement) -> ONHElement:
    if xi.n != eta.n:
        raise ValueError(f"strand count mismatch: {xi.n} vs {eta.n}")
    n = xi.n
    # d_w * eta once per distinct w, then left multiplication by monomials
    by_w: Dict[P.Perm, Dict[Exp, int]] = {}
    for (a, w), c in xi.terms.items():
        by_w.setdefault(w, {})[a] = c
    out: Dict[Key, int] = {}
    for w, left in by_w.items():
        mid: Dict[Key, int] = {}
        for (b, v), e in eta.terms.items():
            for (a2, u), c2 in _push(w, b):
                sg, uv = P.product_sign(u, v)
                if sg:
                    k = (a2, uv)
                    mid[k] = mid.get(k, 0) + sg * c2 * e
        for a, c in left.items():
            for (a2, uv), m in mid.items():
                if m:
                    s, a3 = mono_mul(a, a2)
                    k = (a3, uv)
                    out[k] = out.get(k, 0) + s * c * m
    return ONHElement._raw(n, out)


def product(*elts: ONHElement) -> ONHElement:
    out = elts[0]
    for e in elts[1:]:
        out = out * e
    return out


def act(xi: ONHElement, f: SkewPoly) -> SkewPoly:
    """x_i acts by left multiplication, d_i by the divided difference."""
    if xi.n != f.n:
        raise ValueError("strand count mismatch")
    out = SkewPoly.zero(f.n)
    cache: Dict[P.Perm, SkewPoly] = {}
    for (a, w), c in xi.terms.items():
        g = cache.get(w)
        if g is None:
            g = cache[w] = f.dd_word(P.canonical_word(w))
        out = out + (SkewPoly.monomial(a) * g).scale(c)
    return out


# ---------------------------------------------------------------------------
# differential: d(x_i) = x_i^2, d(d_i) = 1, both generators odd

@lru_cache(maxsize=None)
def _d_dw(w: P.Perm) -> Tuple[Tuple[Key, int], ...]:
    n = len(w)
    word = P.canonical_word(w)
    out: Dict[Key, int] = {}
    for k in range(len(word)):
        s, u = P.word_sign(word[:k] + word[k + 1:], n)
        if s:
            key = ((0,) * n, u)
            out[key] = out.get(key, 0) + s * _sgn(k)
    return tuple((k, c) for k, c in out.items() if c)


def onh_differential(xi: ONHElement) -> ONHElement:
    n = xi.n
    out: Dict[Key, int] = {}
    for (a, w), c in xi.terms.items():
        for s, a2 in mono_d(a):
            k = (a2, w)
            out[k] = out.get(k, 0) + s * c
        sa = _sgn(sum(a))
        for (_, u), e in _d_dw(w):
            k = (a, u)
            out[k] = out.get(k, 0) + sa * e * c
    return ONHElement._raw(n, out)


# ---------------------------------------------------------------------------
# distinguished elements

def x_delta(n: int) -> ONHElement:
    return ONHElement.from_poly(SkewPoly.monomial(delta(n)))


@lru_cache(maxsize=None)
def idempotent(n: int) -> ONHElement:
    """e_n = (-1)^{C(n,3)} d_{w0} x^delta."""
    if n < 1:
        raise ValueError("idempotent needs n >= 1")
    return (ONHElement.longest(n) * x_delta(n)).scale(_sgn(comb(n, 3)))


def embed(xi: ONHElement, offset: int, n: int) -> ONHElement:
    """Place an element of ONH_m on strands offset+1 .. offset+m of ONH_n."""
    m = xi.n
    if offset < 0 or offset + m > n:
        raise ValueError("embedding does not fit")
    out = ONHElement.zero(n)
    for (a, w), c in xi.terms.items():
        word = tuple(i + offset for i in P.canonical_word(w))
        f = SkewPoly.monomial(a).shift(offset, n)
        out = out + (ONHElement.from_poly(f) * ONHElement.word(word, n)).scale(c)
    return out


def tensor(xi: ONHElement, eta: ONHElement) -> ONHElement:
    """xi on the first strands, eta on the remaining ones."""
    n = xi.n + eta.n
    return embed(xi, 0, n) * embed(eta, xi.n, n)


def block_idempotent(blocks: Sequence[int]) -> ONHElement:
    return _block_idempotent(tuple(blocks))


@lru_cache(maxsize=None)
def _block_idempotent(blocks) -> ONHElement:
    n = sum(blocks)
    out = ONHElement.one(n)
    off = 0
    for b in blocks:
        out = out * embed(idempotent(b), off, n)
        off += b
    return out


def longest_formula(n: int) -> ONHElement:
    """sum {i-1} x_i d_w0 - (-1)^{C(n,2)} sum {n-i} d_w0 x_i."""
    dw0 = ONHElement.longest(n)
    out = ONHElement.zero(n)
    for i in range(1, n + 1):
        xi = ONHElement.x(i, n)
        if brace(i - 1):
            out = out + xi * dw0
        if brace(n - i):
            out = out - (dw0 * xi).scale(_sgn(comb(n, 2)))
    return out


def idempotent_formula(n: int) -> ONHElement:
    """sum {i-1} x_i e_n."""
    e = idempotent(n)
    out = ONHElement.zero(n)
    for i in range(2, n + 1, 2):
        out = out + ONHElement.x(i, n) * e
    return out


def bottom_identity_sides(n: int):
    """Both sides of d^{(n-1)}_{w0} (d_{n-1} ... d_2) = d_w0 x_1 - (-1)^{C(n,2)} x_n d_w0."""
    word = P.w0_word(n - 1) + tuple(range(n - 1, 1, -1))
    lhs = ONHElement.word(word, n)
    dw0 = ONHElement.longest(n)
    rhs = dw0 * ONHElement.x(1, n) - (ONHElement.x(n, n) * dw0).scale(_sgn(comb(n, 2)))
    return lhs, rhs


def acyclicity_witness(n: int) -> Optional[ONHElement]:
    """An element with d = 1, or None when ONH_n has none of the form d_1."""
    if n < 2:
        return None
    w = ONHElement.dd(1, n)
    if w.d() != ONHElement.one(n):
        raise AssertionError("d(d_1) != 1")
    return w


# ---------------------------------------------------------------------------
# thick calculus as idempotented elements

def split_differential(xi: ONHElement, left_idem: ONHElement) -> ONHElement:
    """Differential on an idempotented piece e' ONH e: e' d(xi)."""
    return left_idem * xi.d()


def splitter(direction: str, a: int, b: int) -> ONHElement:
    if a < 1 or b < 1:
        raise ValueError("splitter needs a, b >= 1")
    eab = block_idempotent([a, b])
    en = idempotent(a + b)
    if direction == "up":
        return eab * en
    if direction == "down":
        return en * ONHElement.dw(P.wab(a, b)) * eab
    raise ValueError(f"unknown splitter direction {direction!r}")


def splitter_differential(direction: str, a: int, b: int) -> ONHElement:
    xi = splitter(direction, a, b)
    left = block_idempotent([a, b]) if direction == "up" else idempotent(a + b)
    return split_differential(xi, left)


def twisted_e1_block(start: int, size: int, n: int) -> SkewPoly:
    """e1 of the block x_{start+1} .. x_{start+size}, twisted inside the block."""
    out = SkewPoly.zero(n)
    for j in range(1, size + 1):
        out = out + SkewPoly.var(start + j, n).scale(_sgn(j - 1))
    return out


def splitter_expected(direction: str, a: int, b: int) -> ONHElement:
    n = a + b
    if direction == "up":
        if not brace(a):
            return ONHElement.zero(n)
        eab = block_idempotent([a, b])
        return eab * ONHElement.from_poly(twisted_e1_block(a, b, n)) * splitter("up", a, b)
    if not brace(b):
        return ONHElement.zero(n)
    eab = block_idempotent([a, b])
    sg = _sgn(a * b - 1)
    return (splitter("down", a, b) * ONHElement.from_poly(twisted_e1_block(0, a, n)) * eab).scale(sg)


def slider_sides(a: int, b: int, s: int):
    """Both sides of (-1)^{C(s,2)} up * e~_s = sum_l (-1)^{al} (e~_{s-l}(x) e~_l(y)) up.

    A label g on the thick leg sits below the idempotent e_{a+b}, where it is
    written in untwisted variables: up * theta(g) * e_{a+b}.
    """
    from .oddsym import elementary
    n = a + b
    en = idempotent(n)
    eab = block_idempotent([a, b])
    # grouped so the large factor e_{a+b} is multiplied from the right by few permutations
    f = ONHElement.from_poly(elementary(s, n, twisted=True).theta())
    lhs = (eab * ((en * f) * en)).scale(_sgn(comb(s, 2)))
    g = SkewPoly.zero(n)
    for l in range(0, s + 1):
        if s - l > a or l > b:
            continue
        fx = elementary(s - l, a, twisted=True).shift(0, n)
        fy = elementary(l, b, twisted=True).shift(a, n)
        g = g + (fx * fy).scale(_sgn(a * l))
    rhs = ((eab * ONHElement.from_poly(g)) * eab) * en
    return lhs, rhs


def exploder_checks(n: int):
    """(d(split), expected), (d(merge), expected) for the two exploders."""
    en = idempotent(n)
    dw0 = ONHElement.longest(n)
    split_d = en.d()
    split_exp = idempotent_formula(n)
    merge = en * dw0
    merge_d = split_differential(merge, en)
    merge_exp = ONHElement.zero(n)
    for i in range(1, n + 1):
        if brace(n - i):
            merge_exp = merge_exp - (merge * ONHElement.x(i, n)).scale(_sgn(comb(n, 2)))
    return (split_d, split_exp), (merge_d, merge_exp)


def random_element(n: int, rng, terms: int = 4, max_exp: int = 2) -> ONHElement:
    ps = P.all_perms(n)
    t = {}
    for _ in range(terms):
        a = tuple(rng.randint(0, max_exp) for _ in range(n))
        w = rng.choice(ps)
        t[(a, w)] = t.get((a, w), 0) + rng.randint(-3, 3)
    return ONHElement(n, t)


def operator_relations(n: int) -> Dict[str, bool]:
    """The defining operator relations, checked by acting on every staircase monomial."""
    basis = [SkewPoly.monomial(a) for a in staircase_exponents(n)]
    X = lambda i: (lambda f: SkewPoly.var(i, n) * f)
    D = lambda i: (lambda f: f.dd(i))

    def holds(lhs, rhs=None):
        return all((lhs(f) == (rhs(f) if rhs else SkewPoly.zero(n))) for f in basis)

    idx = range(1, n + 1)
    di = range(1, n)
    out = {
        "x_i x_j + x_j x_i = 0": all(holds(lambda f, i=i, j=j: X(i)(X(j)(f)) + X(j)(X(i)(f)))
                                     for i in idx for j in idx if i != j),
        "d_i d_j + d_j d_i = 0, |i-j|>1": all(holds(lambda f, i=i, j=j: D(i)(D(j)(f)) + D(j)(D(i)(f)))
                                             for i in di for j in di if abs(i - j) > 1),
        "d_i^2 = 0": all(holds(lambda f, i=i: D(i)(D(i)(f))) for i in di),
        "braid": all(holds(lambda f, i=i: D(i)(D(i + 1)(D(i)(f))), lambda f, i=i: D(i + 1)(D(i)(D(i + 1)(f))))
                     for i in range(1, n - 1)),
        "d_i x_j + x_j d_i = 0, j != i,i+1": all(holds(lambda f, i=i, j=j: D(i)(X(j)(f)) + X(j)(D(i)(f)))
                                                for i in di for j in idx if j not in (i, i + 1)),
        "x_i d_i + d_i x_{i+1} = 1 = d_i x_i + x_{i+1} d_i": all(
            holds(lambda f, i=i: X(i)(D(i)(f)) + D(i)(X(i + 1)(f)), lambda f: f)
            and holds(lambda f, i=i: D(i)(X(i)(f)) + X(i + 1)(D(i)(f)), lambda f: f) for i in di),
    }
    return out
