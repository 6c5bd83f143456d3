"""
Skew polynomials: x_i x_j = -x_j x_i for i != j, deg x_i = 2, every x_i odd.

A monomial is stored as its exponent tuple with generators sorted by index.
Elements are immutable; all operators return new objects.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

Exp = Tuple[int, ...]


def brace(k: int) -> int:
    """q=-1 specialization of the unbalanced quantum integer: k mod 2."""
    return k & 1


# ---------------------------------------------------------------------------
# monomial kernels (plain tuples in, (sign, tuple) out)

def mono_mul_sign(a: Sequence[int], b: Sequence[int]) -> int:
    # (-1)^{sum_{i>j} a_i b_j}
    s = 0
    tail = 0
    for i in range(len(a) - 1, -1, -1):
        s += b[i] * tail
        tail += a[i]
    return -1 if s & 1 else 1


def mono_mul(a: Exp, b: Exp) -> Tuple[int, Exp]:
    return mono_mul_sign(a, b), tuple(x + y for x, y in zip(a, b))


def mono_d(a: Exp):
    """Terms of d(x^a) as (sign, exponent)."""
    out = []
    before = 0
    for i, ai in enumerate(a):
        if ai & 1:
            b = list(a)
            b[i] += 1
            out.append((-1 if before & 1 else 1, tuple(b)))
        before += ai
    return out


def mono_w0(a: Exp) -> Tuple[int, Exp]:
    # reversing the word of odd generators: sign (-1)^{sum_{i<j} a_i a_j}
    s = 0
    run = 0
    for ai in a:
        s += ai * run
        run += ai
    return (-1 if s & 1 else 1), tuple(reversed(a))


def mono_theta(a: Exp) -> int:
    return -1 if sum(a[1::2]) & 1 else 1


def mono_si(i: int, a: Exp) -> Tuple[int, Exp]:
    """s_i on x^a, 1-based i: swap the exponents of x_i and x_{i+1}."""
    p, q = a[i - 1], a[i]
    b = list(a)
    b[i - 1], b[i] = q, p
    return (-1 if (p * q) & 1 else 1), tuple(b)


@lru_cache(maxsize=None)
def _dd2(p: int, q: int) -> Tuple[Tuple[Tuple[int, int], int], ...]:
    """The divided difference of x^p y^q in two skew variables, as ((r, s), c) pairs."""
    acc: Dict[Tuple[int, int], int] = {}
    # d(x^p) y^q
    for (r, s), c in _ddx(p):
        key = (r, s + q)
        acc[key] = acc.get(key, 0) + c
    # (-1)^p y^p d(y^q); y^p x^r y^s = (-1)^{pr} x^r y^{p+s}
    for (r, s), c in _ddy(q):
        sg = -1 if (p + p * r) & 1 else 1
        key = (r, p + s)
        acc[key] = acc.get(key, 0) + sg * c
    return tuple((k, v) for k, v in sorted(acc.items()) if v)


@lru_cache(maxsize=None)
def _ddx(k: int):
    if k == 0:
        return ()
    if k & 1:
        return tuple(((k - 1 - j, j), 1) for j in range(k))
    return tuple(((k - 1 - j, j), -1 if j & 1 else 1) for j in range(k))


@lru_cache(maxsize=None)
def _ddy(k: int):
    # d(y^k) = y^{k-1} - x d(y^{k-1})
    if k == 0:
        return ()
    acc = {(0, k - 1): 1}
    for (r, s), c in _ddy(k - 1):
        key = (r + 1, s)
        acc[key] = acc.get(key, 0) - c
    return tuple((kk, v) for kk, v in sorted(acc.items()) if v)


def mono_dd(i: int, a: Exp):
    """Terms of the odd divided difference d_i(x^a), 1-based i."""
    pre = sum(a[: i - 1])
    sg0 = -1 if pre & 1 else 1
    out = []
    for (r, s), c in _dd2(a[i - 1], a[i]):
        b = list(a)
        b[i - 1], b[i] = r, s
        out.append((sg0 * c, tuple(b)))
    return out


def mono_partial(i: int, a: Exp):
    """d/dx_i on x^a (1-based), or None when it vanishes."""
    if not a[i - 1] & 1:
        return None
    b = list(a)
    b[i - 1] -= 1
    return (-1 if sum(a[: i - 1]) & 1 else 1), tuple(b)


# ---------------------------------------------------------------------------

class SkewPoly:
    """Integer (or F_p) combination of normal-form skew monomials in n variables."""

    __slots__ = ("n", "terms", "p")

    def __init__(self, n: int, terms: Optional[Mapping[Exp, int]] = None, p: Optional[int] = None):
        self.n = n
        self.p = p
        clean: Dict[Exp, int] = {}
        if terms:
            for a, c in terms.items():
                if len(a) != n:
                    raise ValueError(f"exponent {a} has length {len(a)}, expected {n}")
                if p is not None:
                    c %= p
                if c:
                    clean[tuple(a)] = c
        self.terms = clean

    # construction helpers
    @classmethod
    def _raw(cls, n, terms, p=None):
        obj = cls.__new__(cls)
        obj.n = n
        obj.p = p
        if p is not None:
            terms = {a: c % p for a, c in terms.items() if c % p}
        else:
            terms = {a: c for a, c in terms.items() if c}
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, n: int, p=None) -> "SkewPoly":
        return cls._raw(n, {}, p)

    @classmethod
    def const(cls, c: int, n: int, p=None) -> "SkewPoly":
        return cls._raw(n, {(0,) * n: c}, p)

    @classmethod
    def one(cls, n: int, p=None) -> "SkewPoly":
        return cls.const(1, n, p)

    @classmethod
    def var(cls, i: int, n: int, p=None) -> "SkewPoly":
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        a = [0] * n
        a[i - 1] = 1
        return cls._raw(n, {tuple(a): 1}, p)

    @classmethod
    def monomial(cls, a: Sequence[int], c: int = 1, p=None) -> "SkewPoly":
        return cls._raw(len(a), {tuple(a): c}, p)

    @classmethod
    def product_of_vars(cls, idx: Iterable[int], n: int, p=None) -> "SkewPoly":
        """x_{i1} x_{i2} ... in the given order, normalized."""
        out = cls.one(n, p)
        for i in idx:
            out = out * cls.var(i, n, p)
        return out

    # basic protocol
    def _check(self, other: "SkewPoly"):
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def _coerce(self, other):
        if isinstance(other, SkewPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return SkewPoly.const(other, self.n, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for a, c in other.terms.items():
            t[a] = t.get(a, 0) + c
        return SkewPoly._raw(self.n, t, self.p or other.p)

    __radd__ = __add__

    def __neg__(self):
        return SkewPoly._raw(self.n, {a: -c for a, c in self.terms.items()}, self.p)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> "SkewPoly":
        return SkewPoly._raw(self.n, {a: c * v for a, v in self.terms.items()}, self.p)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, SkewPoly):
            return NotImplemented
        self._check(other)
        t: Dict[Exp, int] = {}
        for a, c in self.terms.items():
            for b, e in other.terms.items():
                s, ab = mono_mul(a, b)
                t[ab] = t.get(ab, 0) + s * c * e
        return SkewPoly._raw(self.n, t, self.p or other.p)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        out = SkewPoly.one(self.n, self.p)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = SkewPoly.const(other, self.n, self.p)
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        from .textfmt import format_poly
        return f"SkewPoly({format_poly(self)!r}, n={self.n})"

    def __str__(self):
        from .textfmt import format_poly
        return format_poly(self)

    # grading
    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self):
        return {2 * sum(a) for a in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def qdeg(self) -> int:
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("qdeg of an inhomogeneous or zero element")
        return ds.pop()

    @property
    def parity(self) -> int:
        return (self.qdeg // 2) & 1

    def homogeneous_part(self, qdeg: int) -> "SkewPoly":
        return SkewPoly._raw(self.n, {a: c for a, c in self.terms.items() if 2 * sum(a) == qdeg}, self.p)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.n, 0)

    def is_constant(self) -> bool:
        return all(not any(a) for a in self.terms)

    def mod(self, p: int) -> "SkewPoly":
        return SkewPoly._raw(self.n, self.terms, p)

    # linear operators on monomials
    def _apply(self, fn) -> "SkewPoly":
        t: Dict[Exp, int] = {}
        for a, c in self.terms.items():
            for s, b in fn(a):
                t[b] = t.get(b, 0) + s * c
        return SkewPoly._raw(self.n, t, self.p)

    def d(self) -> "SkewPoly":
        return self._apply(mono_d)

    def theta(self) -> "SkewPoly":
        return SkewPoly._raw(self.n, {a: mono_theta(a) * c for a, c in self.terms.items()}, self.p)

    def w0(self) -> "SkewPoly":
        return self._apply(lambda a: [mono_w0(a)])

    def iota(self) -> "SkewPoly":
        return SkewPoly._raw(self.n, {a: (-c if sum(a) & 1 else c) for a, c in self.terms.items()}, self.p)

    def s(self, i: int) -> "SkewPoly":
        self._index(i)
        return self._apply(lambda a: [mono_si(i, a)])

    def _index(self, i):
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"divided difference index {i} out of range 1..{self.n - 1}")

    def dd(self, i: int) -> "SkewPoly":
        self._index(i)
        return self._apply(lambda a: mono_dd(i, a))

    def dd_word(self, word: Sequence[int]) -> "SkewPoly":
        """Apply d_{i1} ... d_{ik}; the rightmost letter acts first."""
        f = self
        for i in reversed(word):
            f = f.dd(i)
            if not f.terms:
                break
        return f

    def partial(self, i: int) -> "SkewPoly":
        if not 1 <= i <= self.n:
            raise ValueError(f"derivative index {i} out of range 1..{self.n}")

        def fn(a):
            r = mono_partial(i, a)
            return [r] if r else []
        return self._apply(fn)

    def shift(self, offset: int, n: int) -> "SkewPoly":
        """Relabel x_i -> x_{i+offset} inside n variables (normal order is preserved)."""
        if offset < 0 or offset + self.n > n:
            raise ValueError("shift does not fit")
        pad_l = (0,) * offset
        pad_r = (0,) * (n - offset - self.n)
        return SkewPoly._raw(n, {pad_l + a + pad_r: c for a, c in self.terms.items()}, self.p)

    def block_theta(self, blocks: Sequence[int]) -> "SkewPoly":
        """theta applied independently inside consecutive variable blocks of the given sizes."""
        if sum(blocks) != self.n:
            raise ValueError("blocks do not cover the variables")
        odd_pos = []
        start = 0
        for size in blocks:
            odd_pos.extend(range(start + 1, start + size, 2))
            start += size

        def sg(a):
            return -1 if sum(a[k] for k in odd_pos) & 1 else 1
        return SkewPoly._raw(self.n, {a: sg(a) * c for a, c in self.terms.items()}, self.p)


# ---------------------------------------------------------------------------
# functional interface

def mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return f * g


def differential(f: SkewPoly) -> SkewPoly:
    return f.d()


def involution(kind: str, f: SkewPoly) -> SkewPoly:
    if kind == "theta":
        return f.theta()
    if kind == "w0":
        return f.w0()
    if kind in ("parity", "iota"):
        return f.iota()
    raise ValueError(f"unknown involution {kind!r}")


def divided_difference(i: int, f: SkewPoly) -> SkewPoly:
    return f.dd(i)


def partial_derivative(i: int, f: SkewPoly) -> SkewPoly:
    return f.partial(i)


def directional(beta: Sequence[int], f: SkewPoly) -> SkewPoly:
    """h_beta = sum beta_i d/dx_i."""
    if len(beta) != f.n:
        raise ValueError("direction has wrong length")
    out = SkewPoly.zero(f.n, f.p)
    for i, b in enumerate(beta, 1):
        if b:
            out = out + f.partial(i).scale(b)
    return out


def alpha_element(alpha: Sequence[int], n: int, p=None) -> SkewPoly:
    return sum((SkewPoly.var(i, n, p).scale(a) for i, a in enumerate(alpha, 1) if a), SkewPoly.zero(n, p))


def module_differential(alpha: Sequence[int], f: SkewPoly) -> SkewPoly:
    """d_alpha(f 1_alpha) = (d f + (-1)^{p(f)} f * sum alpha_i x_i) 1_alpha, returned as the coefficient of 1_alpha."""
    if len(alpha) != f.n:
        raise ValueError("alpha has wrong length")
    bad = [a for a in alpha if a not in (0, 1)]
    if bad:
        raise ValueError(f"alpha entries must lie in {{0,1}}, got {list(alpha)}; d_alpha would not square to zero")
    return f.d() + f.iota() * alpha_element(alpha, f.n, f.p)


def staircase_exponents(n: int, bound=None):
    """All a with 0 <= a_i <= n-i (or a custom per-index bound)."""
    from itertools import product
    bounds = bound if bound is not None else [n - i for i in range(1, n + 1)]
    return [tuple(a) for a in product(*[range(b + 1) for b in bounds])]


def delta(n: int) -> Exp:
    return tuple(range(n - 1, -1, -1))
