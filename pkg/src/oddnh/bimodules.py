"""
Bimodules generated by a single element z over skew polynomials.

Z_n       payload f in OPol_n stands for f z, d(z) = sum_{i>=2} {i-1} x_i z.
Z_{a,b}   payload in twisted block-symmetric polynomials, d(z) = {a} e~_1(y) z.
Z^v_{a,b} payload h stands for z^v h, d(z^v) = (-1)^{ab-1} {b} z^v e~_1(x).

Payloads are stored in twisted block coordinates.  Internally the
differential is evaluated on the untwisted image F = block_theta(payload),
where the left action is plain multiplication and
    d(F z) = d(F) z + (-1)^{p(F)} F c z,   c = sum_{i>=2} {A_{i-1}} e_1(block i).
For Z_n every block has size one and the two coordinate systems agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from . import partitions as Pt
from . import perms as P
from .homology import FreeComplex
from .oddsym import elementary, is_odd_symmetric, pieri_e1, schur
from .onh import ONHElement, longest_formula
from .skewpoly import SkewPoly, brace, mono_mul_sign
from .textfmt import format_partition, format_poly


def _sgn(k: int) -> int:
    return -1 if k & 1 else 1


def _starts(composition: Sequence[int]) -> List[int]:
    out, s = [], 0
    for a in composition:
        out.append(s)
        s += a
    return out


def _internal_indices(composition: Sequence[int]) -> List[int]:
    """Divided-difference indices i with x_i, x_{i+1} in the same block."""
    out = []
    for s, a in zip(_starts(composition), composition):
        out.extend(range(s + 1, s + a))
    return out


def block_e1(start: int, size: int, n: int) -> SkewPoly:
    out = SkewPoly.zero(n)
    for j in range(1, size + 1):
        out = out + SkewPoly.var(start + j, n)
    return out


def generator_multiplier(composition: Sequence[int]) -> SkewPoly:
    """c = sum_{i>=2} {a_1 + ... + a_{i-1}} e_1(block i), untwisted."""
    n = sum(composition)
    c = SkewPoly.zero(n)
    starts = _starts(composition)
    for k in range(1, len(composition)):
        if brace(starts[k]):
            c = c + block_e1(starts[k], composition[k], n)
    return c


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ZElement:
    composition: Tuple[int, ...]
    payload: SkewPoly

    def __post_init__(self):
        comp = tuple(int(a) for a in self.composition)
        object.__setattr__(self, "composition", comp)
        if any(a < 0 for a in comp):
            raise ValueError("composition entries must be non-negative")
        if sum(comp) != self.payload.n:
            raise ValueError(f"payload has {self.payload.n} variables, composition sums to {sum(comp)}")

    @property
    def n(self) -> int:
        return self.payload.n

    def untwisted(self) -> SkewPoly:
        return self.payload.block_theta(self.composition)

    @classmethod
    def from_untwisted(cls, composition, F: SkewPoly) -> "ZElement":
        return cls(tuple(composition), F.block_theta(composition))

    def in_span(self) -> bool:
        return all(self.payload.dd(i).is_zero() for i in _internal_indices(self.composition))

    def __add__(self, o: "ZElement") -> "ZElement":
        if o.composition != self.composition:
            raise ValueError("composition mismatch")
        return ZElement(self.composition, self.payload + o.payload)

    def __sub__(self, o: "ZElement") -> "ZElement":
        return self + o.scale(-1)

    def scale(self, c: int) -> "ZElement":
        return ZElement(self.composition, self.payload.scale(c))

    def is_zero(self) -> bool:
        return self.payload.is_zero()

    def __str__(self):
        body = format_poly(self.payload)
        if body == "0":
            return "0"
        return f"({body})*z" if len(self.payload.terms) > 1 else (f"{body}*z" if body != "1" else "z")


def z_generator(composition: Sequence[int]) -> ZElement:
    n = sum(composition)
    return ZElement(tuple(composition), SkewPoly.one(n))


def zn_generator(n: int) -> ZElement:
    return z_generator((1,) * n)


def _check_span(elt: ZElement):
    if not elt.in_span():
        raise ValueError("payload is not symmetric inside the blocks of the composition")


def z_differential(elt: ZElement) -> ZElement:
    _check_span(elt)
    F = elt.untwisted()
    c = generator_multiplier(elt.composition)
    DF = F.d() + F.iota() * c
    return ZElement.from_untwisted(elt.composition, DF)


def z_left_mul(g: SkewPoly, elt: ZElement) -> ZElement:
    """g (untwisted, in the block-symmetric algebra or any of OPol_n for Z_n) times elt."""
    return ZElement.from_untwisted(elt.composition, g * elt.untwisted())


def z_right_action(elt: ZElement, f: SkewPoly) -> ZElement:
    """For Z_n: (g z) . f = g (theta o w0)(f) z, f odd symmetric."""
    if set(elt.composition) - {1}:
        raise ValueError("right action is implemented for Z_n only")
    if not is_odd_symmetric(f):
        raise ValueError("right action needs an odd symmetric polynomial")
    return ZElement(elt.composition, elt.payload * f.w0().theta())


def sz_relation(lam, n: int) -> Tuple[bool, bool]:
    """z s_lam = (-1)^{(n+1)|lam|} w0(s~_lam) z  and  s~_lam z = z w0(s_lam)."""
    z = zn_generator(n)
    s = schur(lam, n, "s")
    st = schur(lam, n, "t")
    first = z_right_action(z, s).payload == st.w0().scale(_sgn((n + 1) * sum(Pt.normalize(lam))))
    second = z_right_action(z, s.w0()).payload == st
    return first, second


# ---------------------------------------------------------------------------
# U_n

def un_exponents(n: int) -> List[Tuple[int, ...]]:
    """0 <= a_i <= i - 1: the d-stable staircase inside Z_n."""
    from itertools import product
    return [tuple(a) for a in product(*[range(i) for i in range(1, n + 1)])]


def un_differential(a: Tuple[int, ...]) -> Dict[Tuple[int, ...], int]:
    """d(x^a z) = sum_i {a_i + i - 1} x_i x^a z, rewritten on monomials."""
    n = len(a)
    out = {}
    for i in range(1, n + 1):
        if brace(a[i - 1] + i - 1):
            b = list(a)
            b[i - 1] += 1
            unit = tuple(int(j == i - 1) for j in range(n))
            out[tuple(b)] = mono_mul_sign(unit, a)
    return out


def _mono_name(a) -> str:
    return format_poly(SkewPoly.monomial(a))


def un_complex(n: int) -> FreeComplex:
    if n < 0:
        raise ValueError("n must be non-negative")
    keys = un_exponents(n)
    return FreeComplex.from_keys(keys, lambda a: 2 * sum(a), lambda a: sum(a), _mono_name, un_differential)


def un_initial_vectors(n: int) -> List[Tuple[int, ...]]:
    from .homology import hypercube_decompose
    c = un_complex(n)
    return sorted(c.keys[comp.initial] for comp in hypercube_decompose(c))


# ---------------------------------------------------------------------------
# Z_{a,b} in the Schur basis

def basis_differential_zab(a: int, b: int, lam) -> Dict[Pt.Partition, int]:
    """d(s_lam z) = sum (-1)^{|lam/i| + i - 1} {a + ct} s_mu z, mu in Par(b, a)."""
    lam = Pt.normalize(lam)
    if not Pt.in_box(lam, b, a):
        raise ValueError(f"{format_partition(lam)} is not in Par({b},{a})")
    out = {}
    for i in Pt.addable_rows(lam):
        mu = Pt.add_box(lam, i)
        if not Pt.in_box(mu, b, a):
            continue
        if brace(a + Pt.added_content(lam, i)):
            out[mu] = out.get(mu, 0) + _sgn(Pt.above(lam, i) + i - 1)
    return {k: v for k, v in out.items() if v}


def vab_complex(a: int, b: int) -> FreeComplex:
    if a < 0 or b < 0:
        raise ValueError("a, b must be non-negative")
    keys = Pt.box_partitions(b, a)
    return FreeComplex.from_keys(keys, lambda l: 2 * sum(l), lambda l: sum(l), format_partition,
                                 lambda l: basis_differential_zab(a, b, l))


def zab_basis_element(a: int, b: int, mu) -> ZElement:
    """s~_mu(y) z, the Schur basis vector of Z_{a,b} over the right action."""
    n = a + b
    return ZElement((a, b), schur(mu, b, "t").shift(a, n))


# ---------------------------------------------------------------------------
# the dual and the trace

@dataclass(frozen=True)
class DualZElement:
    composition: Tuple[int, int]
    payload: SkewPoly

    @property
    def n(self) -> int:
        return self.payload.n

    def untwisted(self) -> SkewPoly:
        return self.payload.block_theta(self.composition)

    @classmethod
    def from_untwisted(cls, composition, H: SkewPoly) -> "DualZElement":
        return cls(tuple(composition), H.block_theta(composition))

    def parity(self) -> int:
        a, b = self.composition
        return (a * b + self.payload.parity) % 2


def dual_generator(a: int, b: int) -> DualZElement:
    return DualZElement((a, b), SkewPoly.one(a + b))


def dual_differential(elt: DualZElement) -> DualZElement:
    """d(z^v H) = (-1)^{ab-1} {b} z^v e_1(x) H + (-1)^{ab} z^v d(H) in untwisted coordinates."""
    a, b = elt.composition
    H = elt.untwisted()
    out = H.d().scale(_sgn(a * b))
    if brace(b):
        out = out - (block_e1(0, a, a + b) * H).scale(_sgn(a * b))
    return DualZElement.from_untwisted(elt.composition, out)


def trace(a: int, b: int, f: SkewPoly) -> SkewPoly:
    """theta d_{a,b}(f), with d_{a,b} the divided difference of w_{a,b}."""
    return f.dd_word(P.canonical_word(P.wab(a, b))).theta()


def trace_composition(blocks: Sequence[int], f: SkewPoly) -> SkewPoly:
    """Merge blocks one at a time: d_{a1,a2} first, then d_{a1+a2,a3}, and so on; theta at the end."""
    n = sum(blocks)
    acc = blocks[0]
    g = f
    for nxt in blocks[1:]:
        word = P.canonical_word(P.wab(acc, nxt))
        g = g.dd_word(word)  # acts on the first acc+nxt variables
        acc += nxt
    if acc != n:
        raise ValueError("blocks do not cover the variables")
    return g.theta()


def pair(h: DualZElement, f: ZElement) -> SkewPoly:
    """(z^v h)(f z) = theta d_{a,b}(h f) on payloads."""
    if h.composition != f.composition:
        raise ValueError("composition mismatch")
    a, b = f.composition
    return trace(a, b, h.payload * f.payload)


def trace_pairing(a: int, b: int, lam, mu) -> int:
    lam = Pt.normalize(lam)
    mu = Pt.normalize(mu)
    if not Pt.in_box(lam, a, b):
        raise ValueError(f"{format_partition(lam)} is not in Par({a},{b})")
    if not Pt.in_box(mu, b, a):
        raise ValueError(f"{format_partition(mu)} is not in Par({b},{a})")
    n = a + b
    f = schur(lam, a, "ht").shift(0, n) * schur(mu, b, "t").shift(a, n)
    t = trace(a, b, f)
    if not t.is_constant():
        raise ArithmeticError("trace of a basis product is not a scalar")
    return t.constant_term()


def pairing_matrix(a: int, b: int):
    rows = Pt.box_partitions(a, b)
    cols = Pt.box_partitions(b, a)
    return rows, cols, [[trace_pairing(a, b, l, m) for m in cols] for l in rows]


def is_signed_permutation(M) -> bool:
    if not M:
        return True
    if len(M) != len(M[0]):
        return False
    return (all(sorted(abs(x) for x in r) == [0] * (len(r) - 1) + [1] for r in M)
            and all(sorted(abs(x) for x in c) == [0] * (len(c) - 1) + [1] for c in zip(*M)))


def pairing_partner(lam, a: int, b: int) -> Pt.Partition:
    """The mu in Par(b, a) with nonzero pairing: complement of lam in the a x b box, conjugated."""
    lp = Pt.padded(Pt.normalize(lam), a)
    comp = tuple(b - lp[a - 1 - j] for j in range(a))
    return Pt.conjugate(Pt.normalize(comp))


def compatibility_sides(h: DualZElement, f: ZElement) -> Tuple[SkewPoly, SkewPoly]:
    """d((z^v h)(f z)) against d(z^v h)(f z) + (-1)^{p(z^v h)} (z^v h)(d(f z))."""
    lhs = pair(h, f).d()
    rhs = pair(dual_differential(h), f) + pair(h, z_differential(f)).scale(_sgn(h.parity()))
    return lhs, rhs


# ---------------------------------------------------------------------------
# the natural restriction bimodule ONH^natural_{a+b}

@dataclass
class NaturalReport:
    a: int
    b: int
    value: ONHElement            # d(1^nat d_w0) as xi with 1^nat xi
    three_term: ONHElement       # the expression through (z_a z_b) (x) z_n^v
    agree: bool
    d_squared_zero: bool
    literal_value: ONHElement    # with d(1^nat) = {a} e~_1(y) 1^nat and the plain left action
    literal_agree: bool
    literal_d_squared_zero: bool


def _y_monomial(a: int, b: int) -> Tuple[int, ...]:
    return (0,) * a + (a,) * b


def _right_quotient(f: SkewPoly, ya: Tuple[int, ...]) -> SkewPoly:
    """r with Y r = f for Y = x^ya, assuming every term of f is divisible."""
    out = {}
    for e, c in f.terms.items():
        r = tuple(x - y for x, y in zip(e, ya))
        if min(r) < 0:
            raise ArithmeticError("not divisible by the generator monomial")
        out[r] = out.get(r, 0) + c * mono_mul_sign(ya, r)
    return SkewPoly(f.n, out)


def natural_left_sign(i: int, a: int, b: int) -> int:
    """x_i . 1^nat xi = sign * 1^nat x_i xi in the right-ideal model."""
    n = a + b
    ya = _y_monomial(a, b)
    unit = tuple(int(j == i - 1) for j in range(n))
    # x_i Y = s Y x_i, and the parity shift by ab contributes (-1)^{ab}
    s = mono_mul_sign(unit, ya) * mono_mul_sign(ya, unit)
    return s * _sgn(a * b)


def natural_differential(xi: ONHElement, a: int, b: int) -> ONHElement:
    """d(1^nat xi) written as 1^nat (...): right ideal Y ONH_n, Y = (x_{a+1}..x_n)^a, parity shifted by ab."""
    n = a + b
    ya = _y_monomial(a, b)
    Y = SkewPoly.monomial(ya)
    r = _right_quotient(Y.d(), ya)          # d(Y) = Y r
    return (ONHElement.from_poly(r) * xi).scale(_sgn(a * b)) + xi.d()


def natural_literal_differential(xi: ONHElement, a: int, b: int) -> ONHElement:
    """The generator rule d(1^nat) = {a} e~_1(y) 1^nat with the plain left action."""
    n = a + b
    out = xi.d()
    if brace(a):
        ey = SkewPoly.zero(n)
        for j in range(1, b + 1):
            ey = ey + SkewPoly.var(a + j, n).scale(_sgn(j - 1))
        out = out + ONHElement.from_poly(ey) * xi
    return out


def natural_three_term(a: int, b: int, left_sign) -> ONHElement:
    """sum_{i<=a} {i-1} x_i g + sum_j {j-1} x_{a+j} g - (-1)^{C(n,2)} sum_k {n-k} g x_k, g = d_w0."""
    n = a + b
    g = ONHElement.longest(n)
    out = ONHElement.zero(n)
    for i in range(1, a + 1):
        if brace(i - 1):
            out = out + (ONHElement.x(i, n) * g).scale(left_sign(i))
    for j in range(1, b + 1):
        if brace(j - 1):
            out = out + (ONHElement.x(a + j, n) * g).scale(left_sign(a + j))
    for k in range(1, n + 1):
        if brace(n - k):
            out = out - (g * ONHElement.x(k, n)).scale(_sgn(comb(n, 2)))
    return out


def natural_generator_differential(a: int, b: int, samples: int = 3, seed: int = 0) -> NaturalReport:
    if a < 1 or b < 1:
        raise ValueError("need a, b >= 1")
    import random
    n = a + b
    g = ONHElement.longest(n)
    value = natural_differential(g, a, b)
    three = natural_three_term(a, b, lambda i: natural_left_sign(i, a, b))
    lit = natural_literal_differential(g, a, b)
    lit_three = natural_three_term(a, b, lambda i: 1)
    rng = random.Random(seed)
    from .onh import random_element
    tests = [g, ONHElement.one(n)] + [random_element(n, rng, terms=3, max_exp=1) for _ in range(samples)]
    d2 = all(natural_differential(natural_differential(t, a, b), a, b).is_zero() for t in tests)
    lit_d2 = all(natural_literal_differential(natural_literal_differential(t, a, b), a, b).is_zero() for t in tests)
    return NaturalReport(a, b, value, three, value == three, d2, lit, lit == lit_three, lit_d2)


# ---------------------------------------------------------------------------
# the odd Grassmannian quotient

@dataclass
class OHQuotient:
    a: int
    b: int
    maxdeg: int
    dims: Dict[int, int]
    expected: Dict[int, int]
    basis: Dict[int, List[Tuple[Pt.Partition, Pt.Partition]]]
    matches: bool


def _product_basis(a: int, b: int, k: int):
    n = a + b
    out = []
    for j in range(k + 1):
        for lam in Pt.partitions_of(j, None, a):
            for mu in Pt.partitions_of(k - j, None, b):
                f = schur(lam, a, "s").shift(0, n) * schur(mu, b, "s").shift(a, n)
                out.append(((lam, mu), f))
    return out


def _vectors(polys: List[SkewPoly]):
    monos = sorted({m for f in polys for m in f.terms})
    return monos, [[f.terms.get(m, 0) for m in monos] for f in polys]


def oh_submodule(a: int, b: int, k: int) -> List[SkewPoly]:
    """Spanning set of M in degree k: u e_j(x, y) for u in the product basis, j >= 1."""
    n = a + b
    out = []
    for j in range(1, min(k, n) + 1):
        e = elementary(j, n)
        for _, u in _product_basis(a, b, k - j):
            out.append(u * e)
    return out


def in_oh_submodule(f: SkewPoly, a: int, b: int) -> bool:
    k = f.qdeg // 2
    if f.is_zero():
        return True
    gens = oh_submodule(a, b, k)
    monos, M = _vectors(gens + [f])
    return linalg.in_span(M[:-1], M[-1])


def box_counts(a: int, b: int) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for lam in Pt.box_partitions(b, a):
        out[sum(lam)] = out.get(sum(lam), 0) + 1
    return out


def oh_quotient(a: int, b: int, maxdeg: int) -> OHQuotient:
    if maxdeg < a * b:
        raise ValueError(f"degree bound {maxdeg} is below the top degree {a * b}; cannot decide")
    dims, basis = {}, {}
    for k in range(maxdeg + 1):
        prod = _product_basis(a, b, k)
        gens = oh_submodule(a, b, k)
        polys = [f for _, f in prod]
        monos, rows = _vectors(gens + polys)
        span = rows[:len(gens)]
        cands = rows[len(gens):]
        chosen = linalg.extend_to_complement([r for r in span if any(r)], cands)
        idx = [cands.index(v) for v in chosen]
        basis[k] = [prod[i][0] for i in idx]
        dims[k] = len(chosen)
    expected = {k: box_counts(a, b).get(k, 0) for k in range(maxdeg + 1)}
    return OHQuotient(a, b, maxdeg, dims, expected, basis, dims == expected)


def gamma_h(k: int, a: int, b: int) -> SkewPoly:
    """gamma(h_k) from h_k = -sum_{i>=1} (-1)^{i+C(i,2)} e_i h_{k-i} and gamma(e_i) = (-1)^{C(i,2)} e_i(x)."""
    n = a + b
    if k == 0:
        return SkewPoly.one(n)
    out = SkewPoly.zero(n)
    for i in range(1, min(k, a) + 1):
        ei = elementary(i, a).shift(0, n).scale(_sgn(comb(i, 2)))
        out = out - (ei * gamma_h(k - i, a, b)).scale(_sgn(i + comb(i, 2)))
    return out


def gamma_check(k: int, a: int, b: int) -> bool:
    """gamma(h_k) - (-1)^k e_k(y) lies in M."""
    n = a + b
    ey = elementary(k, b).shift(a, n) if k <= b else SkewPoly.zero(n)
    return in_oh_submodule(gamma_h(k, a, b) - ey.scale(_sgn(k)), a, b)


# ---------------------------------------------------------------------------
# filtrations

def finite_cell_filtration(c: FreeComplex):
    """Labels ordered so that every prefix spans a subcomplex, and the graded rank."""
    ids = c.ids
    known = set(ids)
    for i in ids:
        for t, _ in c.out_edges(i):
            if t not in known:
                raise ValueError("label span is not d-stable")
    order = sorted(ids, key=lambda i: (-c.label(i).qdeg, c.pos[i]))
    seen = set()
    for i in order:
        seen.add(i)
        if any(t not in seen for t, _ in c.out_edges(i)):
            raise ValueError("label span is not d-stable")
    return order, c.graded_rank()


def export_json(c: FreeComplex) -> dict:
    return c.to_json()


# ---------------------------------------------------------------------------
# Z_n as U_n tensor O-Lambda_n

def zn_tensor_check(n: int, a: Tuple[int, ...], f: SkewPoly) -> bool:
    """d(x^a z . f) = sum_b U[a -> b] x^b z . f + (-1)^{|a|} x^a z . d(f)."""
    z = ZElement((1,) * n, SkewPoly.monomial(a))
    lhs = z_differential(z_right_action(z, f))
    rhs = z_right_action(zn_generator(n), f).scale(0)
    for bexp, c in un_differential(a).items():
        rhs = rhs + z_right_action(ZElement((1,) * n, SkewPoly.monomial(bexp)), f).scale(c)
    rhs = rhs + z_right_action(z, f.d()).scale(_sgn(sum(a)))
    return lhs.payload == rhs.payload
