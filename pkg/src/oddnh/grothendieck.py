"""
Quantum integers, Gaussian integers and the twisted bialgebra U+ at q = sqrt(-1).

Quantum integers are balanced: [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Tuple

from .skewpoly import brace  # noqa: F401  (re-exported)


class LaurentInt:
    """Integer Laurent polynomial in q."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Mapping[int, int] = None):
        self.c: Dict[int, int] = {int(k): int(v) for k, v in (coeffs or {}).items() if v}

    @classmethod
    def q(cls, k: int = 1, coeff: int = 1) -> "LaurentInt":
        return cls({k: coeff})

    @classmethod
    def const(cls, a: int) -> "LaurentInt":
        return cls({0: a})

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> "LaurentInt":
        out: Dict[int, int] = {}
        for e in exps:
            out[e] = out.get(e, 0) + 1
        return cls(out)

    def _lift(self, o):
        return o if isinstance(o, LaurentInt) else LaurentInt.const(o)

    def __add__(self, o):
        o = self._lift(o)
        out = dict(self.c)
        for k, v in o.c.items():
            out[k] = out.get(k, 0) + v
        return LaurentInt(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentInt({k: -v for k, v in self.c.items()})

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        out: Dict[int, int] = {}
        for a, x in self.c.items():
            for b, y in o.c.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return LaurentInt(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = LaurentInt.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, o):
        if isinstance(o, int):
            o = LaurentInt.const(o)
        return isinstance(o, LaurentInt) and self.c == o.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def is_zero(self):
        return not self.c

    def shift(self, k: int) -> "LaurentInt":
        return LaurentInt({e + k: v for e, v in self.c.items()})

    def bar(self) -> "LaurentInt":
        return LaurentInt({-e: v for e, v in self.c.items()})

    def degree(self) -> int:
        return max(self.c)

    def low(self) -> int:
        return min(self.c)

    def divexact(self, o: "LaurentInt") -> "LaurentInt":
        """Exact quotient; raises ArithmeticError if o does not divide self."""
        if o.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        rem = dict(self.c)
        dtop = o.degree()
        lead = o.c[dtop]
        quo: Dict[int, int] = {}
        floor = min(self.c, default=0) - o.low()
        while rem:
            top = max(rem)
            if top - dtop < floor:
                raise ArithmeticError("non-exact division")
            a = rem[top]
            if a % lead:
                raise ArithmeticError("non-exact division")
            k = top - dtop
            m = a // lead
            quo[k] = quo.get(k, 0) + m
            for e, v in o.c.items():
                rem[e + k] = rem.get(e + k, 0) - m * v
                if not rem[e + k]:
                    del rem[e + k]
        return LaurentInt(quo)

    def eval_i(self) -> "GaussianInt":
        re = im = 0
        for e, v in self.c.items():
            r = e % 4
            if r == 0:
                re += v
            elif r == 1:
                im += v
            elif r == 2:
                re -= v
            else:
                im -= v
        return GaussianInt(re, im)

    def __repr__(self):
        return f"LaurentInt({self})"

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for k, e in enumerate(sorted(self.c, reverse=True)):
            v = self.c[e]
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if k == 0:
                parts.append(("-" if v < 0 else "") + body)
            else:
                parts.append((" - " if v < 0 else " + ") + body)
        return "".join(parts)


@dataclass(frozen=True)
class GaussianInt:
    re: int = 0
    im: int = 0

    def __add__(self, o):
        o = _g(o)
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-_g(o))

    def __mul__(self, o):
        o = _g(o)
        return GaussianInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = GaussianInt(1, 0)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, o):
        if isinstance(o, int):
            o = GaussianInt(o, 0)
        return isinstance(o, GaussianInt) and (self.re, self.im) == (o.re, o.im)

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re or self.im)

    def __str__(self):
        """a+bi with zero parts left out."""
        if not self.im:
            return str(self.re)
        im = {1: "i", -1: "-i"}.get(self.im, f"{self.im}i")
        if not self.re:
            return im
        return f"{self.re}{'' if im.startswith('-') else '+'}{im}"


def _g(x) -> GaussianInt:
    return x if isinstance(x, GaussianInt) else GaussianInt(int(x), 0)


I = GaussianInt(0, 1)


def eval_i(f: LaurentInt) -> GaussianInt:
    return f.eval_i()


def qint(n: int) -> LaurentInt:
    if n < 0:
        return -qint(-n)
    return LaurentInt.from_exponents(range(1 - n, n, 2))


def qfact(n: int) -> LaurentInt:
    if n < 0:
        raise ValueError("factorial of a negative number")
    out = LaurentInt.const(1)
    for k in range(1, n + 1):
        out = out * qint(k)
    return out


def qbinom(m: int, k: int) -> LaurentInt:
    if not 0 <= k <= m:
        raise ValueError("need 0 <= k <= m")
    return qfact(m).divexact(qfact(k) * qfact(m - k))


def pascal_holds(m: int, k: int) -> bool:
    """[m, k] = q^k [m-1, k] + q^{k-m} [m-1, k-1] for balanced binomials."""
    if not 0 < k < m:
        return True
    return qbinom(m, k) == qbinom(m - 1, k).shift(k) + qbinom(m - 1, k - 1).shift(k - m)


# ---------------------------------------------------------------------------
# U+ at q = sqrt(-1) with basis E^(n)

class UPlus:
    """Element sum c_n E^(n); tensor elements are keyed by pairs (m, n)."""

    def __init__(self, coeffs: Mapping = None):
        self.c = {k: _g(v) for k, v in (coeffs or {}).items() if _g(v)}

    @classmethod
    def E(cls, n: int) -> "UPlus":
        return cls({n: 1})

    @classmethod
    def tensor_basis(cls, m: int, n: int) -> "UPlus":
        return cls({(m, n): 1})

    def __add__(self, o):
        out = dict(self.c)
        for k, v in o.c.items():
            out[k] = out.get(k, GaussianInt()) + v
        return UPlus(out)

    def scale(self, z) -> "UPlus":
        return UPlus({k: v * _g(z) for k, v in self.c.items()})

    def __eq__(self, o):
        return isinstance(o, UPlus) and self.c == o.c

    def __repr__(self):
        return f"UPlus({self})"

    def __str__(self):
        if not self.c:
            return "0"
        items = []
        for k in sorted(self.c, key=lambda k: (k if isinstance(k, tuple) else (k,)), reverse=True):
            if isinstance(k, tuple):
                b = f"{_e(k[0])} (x) {_e(k[1])}"
            else:
                b = _e(k)
            items.append(f"({self.c[k]}) {b}")
        return " + ".join(items)


def _e(n: int) -> str:
    return "1" if n == 0 else f"E^({n})"


def uplus_mul(x: UPlus, y: UPlus) -> UPlus:
    """E^(a) E^(b) = [a+b choose a] E^(a+b), evaluated at q = sqrt(-1)."""
    out: Dict[int, GaussianInt] = {}
    for a, u in x.c.items():
        for b, v in y.c.items():
            z = u * v * qbinom(a + b, a).eval_i()
            out[a + b] = out.get(a + b, GaussianInt()) + z
    return UPlus(out)


def uplus_comul(a: int) -> UPlus:
    """r(E^(a)) = sum_c (-sqrt(-1))^{c(a-c)} E^(c) (x) E^(a-c)."""
    if a < 0:
        raise ValueError("a must be non-negative")
    return UPlus({(c, a - c): (-I) ** (c * (a - c)) for c in range(a + 1)})


def twisted_mul(s: UPlus, t: UPlus) -> UPlus:
    """(b1 (x) b2)(b1' (x) b2') = (-1)^{|b2||b1'|} b1 b1' (x) b2 b2'."""
    out: Dict[Tuple[int, int], GaussianInt] = {}
    for (m1, n1), u in s.c.items():
        for (m2, n2), v in t.c.items():
            sg = -1 if (n1 * m2) & 1 else 1
            z = u * v * qbinom(m1 + m2, m1).eval_i() * qbinom(n1 + n2, n1).eval_i() * sg
            k = (m1 + m2, n1 + n2)
            out[k] = out.get(k, GaussianInt()) + z
    return UPlus(out)


def comul(x: UPlus) -> UPlus:
    out = UPlus()
    for a, u in x.c.items():
        out = out + uplus_comul(a).scale(u)
    return out


@dataclass
class CheckReport:
    name: str
    passed: bool
    failures: list

    def __bool__(self):
        return self.passed


def bialgebra_check(maxdeg: int) -> CheckReport:
    """r(E^(a) E^(b)) = r(E^(a)) r(E^(b)) for all a + b <= maxdeg."""
    bad = []
    for a in range(maxdeg + 1):
        for b in range(maxdeg + 1 - a):
            lhs = comul(uplus_mul(UPlus.E(a), UPlus.E(b)))
            rhs = twisted_mul(uplus_comul(a), uplus_comul(b))
            if lhs != rhs:
                bad.append((a, b))
    return CheckReport("bialgebra", not bad, bad)


def coassociativity_check(maxdeg: int) -> CheckReport:
    """(r (x) 1) r = (1 (x) r) r on E^(a), compared on triple indices."""
    bad = []
    for a in range(maxdeg + 1):
        left: Dict[Tuple[int, int, int], GaussianInt] = {}
        right: Dict[Tuple[int, int, int], GaussianInt] = {}
        for (m, n), u in uplus_comul(a).c.items():
            for (m1, m2), v in uplus_comul(m).c.items():
                k = (m1, m2, n)
                left[k] = left.get(k, GaussianInt()) + u * v
            for (n1, n2), v in uplus_comul(n).c.items():
                k = (m, n1, n2)
                right[k] = right.get(k, GaussianInt()) + u * v
        if {k: v for k, v in left.items() if v} != {k: v for k, v in right.items() if v}:
            bad.append(a)
    return CheckReport("coassociativity", not bad, bad)


def associativity_check(maxdeg: int) -> CheckReport:
    bad = []
    for a in range(maxdeg + 1):
        for b in range(maxdeg + 1 - a):
            for c in range(maxdeg + 1 - a - b):
                x, y, z = UPlus.E(a), UPlus.E(b), UPlus.E(c)
                if uplus_mul(uplus_mul(x, y), z) != uplus_mul(x, uplus_mul(y, z)):
                    bad.append((a, b, c))
    return CheckReport("associativity", not bad, bad)


def k0_symbols(max_n: int = 5) -> dict:
    """Cross-check graded ranks of the finite-cell complexes against U+ structure constants."""
    from . import bimodules as B
    rows = []
    ok = True
    for n in range(0, max_n + 1):
        for a in range(0, n + 1):
            b = n - a
            cx = B.vab_complex(a, b)
            _, rank = B.finite_cell_filtration(cx)
            balanced = rank.shift(-a * b)
            structure = uplus_mul(UPlus.E(a), UPlus.E(b)).c.get(n, GaussianInt())
            value = balanced.eval_i()
            good = value == structure and balanced == qbinom(n, a)
            ok &= good
            rows.append({"a": a, "b": b, "rank": str(balanced), "at_i": str(value),
                         "structure_constant": str(structure), "ok": good})
    euler = []
    for n in range(0, max_n + 2):
        cx = B.un_complex(n)
        _, rank = B.finite_cell_filtration(cx)
        chi = rank.eval_i()
        expect = GaussianInt(1, 0) if n <= 1 else GaussianInt(0, 0)
        good = chi == expect and rank == qfact(n).shift(n * (n - 1) // 2)
        ok &= good
        euler.append({"n": n, "rank": str(rank), "at_i": str(chi), "ok": good})
    return {"passed": ok, "products": rows, "euler": euler}
