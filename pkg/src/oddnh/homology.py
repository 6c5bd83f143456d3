"""
Based complexes and their cohomology.

A FreeComplex has labelled basis vectors, each with a q-degree and a parity,
and a sparse integer differential raising q-degree by 2 and flipping parity.
Cohomology is computed blockwise over Q, over Z (with torsion from Smith
normal form) or over F_p.

A PComplex carries a differential with d^p = 0 over F_p; its slash cohomology
is computed per degree.
"""

from __future__ import annotations

import csv
import io
import json
from collections import defaultdict, deque
from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from . import linalg
from . import partitions as Pt


@dataclass(frozen=True)
class Label:
    id: str
    qdeg: int
    parity: int


def _sort_key(key):
    if isinstance(key, tuple):
        return (0, key)
    return (1, str(key))


class FreeComplex:
    """Finite based complex.  `keys` optionally maps ids to structured labels (exponents, partitions)."""

    def __init__(self, labels: Iterable[Label], differential: Dict[Tuple[str, str], int],
                 keys: Optional[Dict[str, Hashable]] = None, bound: Optional[int] = None):
        self.labels: List[Label] = list(labels)
        self.keys: Dict[str, Hashable] = dict(keys or {})
        self.bound = bound
        self.pos = {}
        for k, lab in enumerate(self.labels):
            if lab.id in self.pos:
                raise ValueError(f"duplicate label {lab.id!r}")
            self.pos[lab.id] = k
        self.d: Dict[Tuple[str, str], int] = {}
        for (s, t), c in differential.items():
            if s not in self.pos or t not in self.pos:
                raise ValueError(f"differential references an unknown label: {s!r} -> {t!r}")
            if c:
                ls, lt = self.labels[self.pos[s]], self.labels[self.pos[t]]
                if lt.qdeg != ls.qdeg + 2 or lt.parity != (ls.parity ^ 1):
                    raise ValueError(f"entry {s!r} -> {t!r} does not raise the bidegree by (2, 1)")
                self.d[(s, t)] = c
        self._out: Dict[str, List[Tuple[str, int]]] = defaultdict(list)
        self._in: Dict[str, List[Tuple[str, int]]] = defaultdict(list)
        for (s, t), c in sorted(self.d.items(), key=lambda kv: (self.pos[kv[0][0]], self.pos[kv[0][1]])):
            self._out[s].append((t, c))
            self._in[t].append((s, c))

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_keys(cls, keys: Sequence[Hashable], qdeg, parity, name, diff, bound=None) -> "FreeComplex":
        """Build from structured keys: qdeg(key), parity(key), name(key) -> id, diff(key) -> {key: coeff}."""
        ordered = sorted(keys, key=lambda k: (qdeg(k), _sort_key(k)))
        ids = {k: name(k) for k in ordered}
        labels = [Label(ids[k], qdeg(k), parity(k) % 2) for k in ordered]
        d = {}
        kset = set(ordered)
        for k in ordered:
            for t, c in diff(k).items():
                if c:
                    if t not in kset:
                        raise ValueError(f"label span is not d-stable: {name(k)} -> {name(t)}")
                    d[(ids[k], ids[t])] = d.get((ids[k], ids[t]), 0) + c
        return cls(labels, d, keys={ids[k]: k for k in ordered}, bound=bound)

    @property
    def ids(self) -> List[str]:
        return [l.id for l in self.labels]

    def label(self, i: str) -> Label:
        return self.labels[self.pos[i]]

    def out_edges(self, i: str):
        return self._out.get(i, [])

    def in_edges(self, i: str):
        return self._in.get(i, [])

    def bidegrees(self) -> List[Tuple[int, int]]:
        return sorted({(l.qdeg, l.parity) for l in self.labels})

    def basis(self, q: int, par: int) -> List[str]:
        return [l.id for l in self.labels if l.qdeg == q and l.parity == par]

    def block(self, q: int, par: int) -> Tuple[List[str], List[str], List[List[int]]]:
        """(sources, targets, matrix) of d from bidegree (q, par); rows are targets."""
        src = self.basis(q, par)
        tgt = self.basis(q + 2, par ^ 1)
        ti = {t: k for k, t in enumerate(tgt)}
        M = [[0] * len(src) for _ in tgt]
        for j, s in enumerate(src):
            for t, c in self.out_edges(s):
                M[ti[t]][j] += c
        return src, tgt, M

    def apply(self, vec: Dict[str, int]) -> Dict[str, int]:
        out: Dict[str, int] = {}
        for s, c in vec.items():
            for t, e in self.out_edges(s):
                out[t] = out.get(t, 0) + c * e
        return {k: v for k, v in out.items() if v}

    def d_squared_zero(self) -> bool:
        return all(not self.apply(self.apply({i: 1})) for i in self.ids)

    def max_abs_entry(self) -> int:
        return max((abs(c) for c in self.d.values()), default=0)

    # -- operations ------------------------------------------------------------

    def shift(self, q: int = 0, parity: int = 0) -> "FreeComplex":
        """Grading shift; a parity shift negates the differential."""
        sg = -1 if parity % 2 else 1
        labels = [Label(l.id, l.qdeg + q, (l.parity + parity) % 2) for l in self.labels]
        return FreeComplex(labels, {k: sg * c for k, c in self.d.items()}, self.keys, self.bound)

    def tensor(self, other: "FreeComplex", sep: str = "|") -> "FreeComplex":
        """Koszul sign rule: d(u v) = d(u) v + (-1)^{p(u)} u d(v)."""
        labels = []
        d = {}
        keys = {}
        for u in self.labels:
            for v in other.labels:
                i = u.id + sep + v.id
                labels.append(Label(i, u.qdeg + v.qdeg, (u.parity + v.parity) % 2))
                keys[i] = (self.keys.get(u.id, u.id), other.keys.get(v.id, v.id))
                for t, c in self.out_edges(u.id):
                    d[(i, t + sep + v.id)] = c
                sg = -1 if u.parity else 1
                for t, c in other.out_edges(v.id):
                    d[(i, u.id + sep + t)] = sg * c
        return FreeComplex(labels, d, keys)

    def subcomplex(self, ids: Iterable[str]) -> "FreeComplex":
        keep = set(ids)
        for s in keep:
            for t, _ in self.out_edges(s):
                if t not in keep:
                    raise ValueError(f"not d-stable: {s} -> {t}")
        return FreeComplex([l for l in self.labels if l.id in keep],
                           {k: c for k, c in self.d.items() if k[0] in keep},
                           {k: v for k, v in self.keys.items() if k in keep}, self.bound)

    def to_json(self) -> dict:
        return {
            "labels": [{"id": l.id, "qdeg": l.qdeg, "parity": l.parity} for l in self.labels],
            "differential": [{"from": s, "to": t, "coeff": c}
                             for (s, t), c in sorted(self.d.items(), key=lambda kv: (self.pos[kv[0][0]], self.pos[kv[0][1]]))],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, obj) -> "FreeComplex":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            labels = [Label(str(l["id"]), int(l["qdeg"]), int(l["parity"]) % 2) for l in obj["labels"]]
            d = {}
            for e in obj.get("differential", []):
                k = (str(e["from"]), str(e["to"]))
                d[k] = d.get(k, 0) + int(e["coeff"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed complex: {exc}") from None
        return cls(labels, d)

    def graded_rank(self):
        from .grothendieck import LaurentInt
        return LaurentInt.from_exponents(l.qdeg for l in self.labels)


# ---------------------------------------------------------------------------
# cohomology

@dataclass
class CohomologyGroup:
    qdeg: int
    parity: int
    dim: int
    torsion: List[int] = field(default_factory=list)
    representatives: List[Dict[str, int]] = field(default_factory=list)


@dataclass
class CohomologyResult:
    domain: str
    groups: List[CohomologyGroup]
    bound: Optional[int] = None

    def dims(self) -> Dict[Tuple[int, int], int]:
        return {(g.qdeg, g.parity): g.dim for g in self.groups}

    def dims_by_qdeg(self) -> Dict[int, int]:
        out: Dict[int, int] = defaultdict(int)
        for g in self.groups:
            out[g.qdeg] += g.dim
        return dict(out)

    def total(self) -> int:
        return sum(g.dim for g in self.groups)

    def is_acyclic(self) -> bool:
        return self.total() == 0 and not any(g.torsion for g in self.groups)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["qdeg", "parity", "dimension", "torsion", "representatives"])
        for g in self.groups:
            reps = ";".join(_vec_str(v) for v in g.representatives)
            w.writerow([g.qdeg, g.parity, g.dim, " ".join(map(str, g.torsion)), reps])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "domain": self.domain,
            "bound": self.bound,
            "groups": [{"qdeg": g.qdeg, "parity": g.parity, "dimension": g.dim, "torsion": g.torsion,
                        "representatives": g.representatives} for g in self.groups],
        }


def _vec_str(v: Dict[str, int]) -> str:
    return " ".join(f"{c:+d}*{k}" for k, c in v.items())


def _domain(domain) -> Tuple[str, Optional[int]]:
    if domain in (None, "Q", "rationals", "q"):
        return "Q", None
    if domain in ("Z", "integers", "z"):
        return "Z", None
    if isinstance(domain, int) or (isinstance(domain, str) and domain.isdigit()):
        p = int(domain)
        if p < 2 or any(p % k == 0 for k in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        return f"F{p}", p
    if isinstance(domain, str) and domain.upper().startswith("F") and domain[1:].isdigit():
        return _domain(int(domain[1:]))
    raise ValueError(f"unknown coefficient domain {domain!r}")


def cohomology(c: FreeComplex, domain="Q", representatives: bool = True,
               max_qdeg: Optional[int] = None) -> CohomologyResult:
    name, p = _domain(domain)
    groups = []
    for q, par in c.bidegrees():
        if max_qdeg is not None and q > max_qdeg:
            continue
        basis = c.basis(q, par)
        if not basis:
            continue
        _, _, Dout = c.block(q, par)
        src_in, _, Din = c.block(q - 2, par ^ 1)
        nb = len(basis)
        rk_out = linalg.rank(Dout, p) if Dout else 0
        rk_in = linalg.rank(Din, p) if (Din and src_in) else 0
        dim = nb - rk_out - rk_in
        torsion = []
        if name == "Z" and Din and src_in:
            torsion = [x for x in linalg.smith_diagonal(Din) if x > 1]
        reps = []
        if representatives and dim > 0:
            ker = linalg.nullspace(Dout, nb, p) if Dout else [[1 if i == j else 0 for i in range(nb)] for j in range(nb)]
            img = linalg.transpose(Din) if (Din and src_in) else []
            img = [r for r in img if any(r)]
            for v in linalg.extend_to_complement(img, ker, p):
                reps.append({basis[i]: int(x) for i, x in enumerate(v) if x})
        groups.append(CohomologyGroup(q, par, dim, torsion, reps))
    return CohomologyResult(name, groups, c.bound)


# ---------------------------------------------------------------------------
# hypercube complexes

def hypercube(k: int) -> FreeComplex:
    """Y_k with basis v_eps, eps in {0,1}^k and d(v_eps) = sum_j (-1)^{eps_1+..+eps_{j-1}} v_{eps+e_j}."""
    def name(e):
        return "v" + "".join(map(str, e))

    def diff(e):
        out = {}
        for j in range(k):
            if not e[j]:
                f = list(e)
                f[j] = 1
                out[tuple(f)] = -1 if sum(e[:j]) & 1 else 1
        return out
    keys = list(iproduct((0, 1), repeat=k))
    return FreeComplex.from_keys(keys, lambda e: 2 * sum(e), lambda e: sum(e), name, diff)


def hypercube_by_tensor(k: int) -> FreeComplex:
    """Y_k as the k-fold tensor power of Y_1, relabelled to the ids of hypercube(k)."""
    if k == 0:
        return hypercube(0)
    out = hypercube(1)
    for _ in range(k - 1):
        out = out.tensor(hypercube(1), sep="")
    ren = {l.id: "v" + l.id.replace("v", "") for l in out.labels}
    labels = [Label(ren[l.id], l.qdeg, l.parity) for l in out.labels]
    labels.sort(key=lambda l: (l.qdeg, l.id))
    return FreeComplex(labels, {(ren[s], ren[t]): c for (s, t), c in out.d.items()})


def same_complex(a: FreeComplex, b: FreeComplex) -> bool:
    la = {l.id: (l.qdeg, l.parity) for l in a.labels}
    lb = {l.id: (l.qdeg, l.parity) for l in b.labels}
    return la == lb and a.d == b.d


@dataclass
class Component:
    labels: List[str]
    initial: Optional[str]
    k: int
    certified: bool
    reason: str = ""
    levels: Dict[str, int] = field(default_factory=dict)
    truncated: bool = False


def components(c: FreeComplex) -> List[List[str]]:
    seen = set()
    out = []
    for l in c.labels:
        if l.id in seen:
            continue
        comp = []
        dq = deque([l.id])
        seen.add(l.id)
        while dq:
            u = dq.popleft()
            comp.append(u)
            for t, _ in c.out_edges(u) + c.in_edges(u):
                if t not in seen:
                    seen.add(t)
                    dq.append(t)
        comp.sort(key=lambda i: c.pos[i])
        out.append(comp)
    return out


def _certify(c: FreeComplex, comp: List[str]) -> Component:
    members = set(comp)
    sources = [u for u in comp if not c.in_edges(u)]
    if len(sources) != 1:
        return Component(comp, None, -1, False, f"{len(sources)} vertices without incoming arrows")
    v0 = sources[0]
    atoms = [t for t, _ in c.out_edges(v0)]
    k = len(atoms)
    if len(comp) != 2 ** k:
        return Component(comp, v0, k, False, f"{len(comp)} vertices but initial vector has {k} arrows")
    if any(abs(x) != 1 for (s, _), x in c.d.items() if s in members):
        return Component(comp, v0, k, False, "coefficient other than +-1")
    idx = {a: j for j, a in enumerate(atoms)}
    q0 = c.label(v0).qdeg
    subset = {v0: frozenset()}
    level = {v0: 0}
    for u in sorted(comp, key=lambda x: (c.label(x).qdeg, c.pos[x])):
        if u == v0:
            continue
        lev = (c.label(u).qdeg - q0) // 2
        ins = [s for s, _ in c.in_edges(u)]
        if u in idx:
            S = frozenset([idx[u]])
        else:
            if not all(s in subset for s in ins):
                return Component(comp, v0, k, False, f"{u} has a predecessor outside the cube")
            S = frozenset().union(*(subset[s] for s in ins)) if ins else frozenset()
        if len(S) != lev or len(ins) != lev:
            return Component(comp, v0, k, False, f"{u} does not sit at level {lev} of a cube")
        subset[u] = S
        level[u] = lev
    if len(set(subset.values())) != len(comp):
        return Component(comp, v0, k, False, "two vertices share a cube position")
    pos = {S: u for u, S in subset.items()}
    # arrows are exactly the cover relations of the boolean lattice
    for u in comp:
        S = subset[u]
        outs = {t for t, _ in c.out_edges(u)}
        expect = {pos[S | {j}] for j in range(k) if j not in S}
        if outs != expect:
            return Component(comp, v0, k, False, f"arrows out of {u} are not the cube covers")
    # sign normalisation: rescale by +-1 so that coefficients match Y_k
    sigma = {v0: 1}
    for u in sorted(comp, key=lambda x: level[x]):
        S = subset[u]
        for t, coef in c.out_edges(u):
            j = next(iter(subset[t] - S))
            ref = -1 if sum(1 for i in S if i < j) & 1 else 1
            want = sigma[u] * coef * ref
            if t in sigma:
                if sigma[t] != want:
                    return Component(comp, v0, k, False, "signs do not match a hypercube")
            else:
                sigma[t] = want
    return Component(comp, v0, k, True, "", {u: level[u] for u in comp})


def hypercube_decompose(c: FreeComplex, truncated_ids: Iterable[str] = ()) -> List[Component]:
    """Connected components, each tested for being isomorphic to some Y_k.  Failures are reported, not raised."""
    trunc = set(truncated_ids)
    out = []
    for comp in components(c):
        cert = _certify(c, comp)
        cert.truncated = any(u in trunc for u in comp)
        out.append(cert)
    return out


# ---------------------------------------------------------------------------
# odd symmetric functions as a complex in the Schur basis

def olambda_complex(max_size: int, n: Optional[int] = None) -> FreeComplex:
    """Schur-basis complex of O-Lambda (or O-Lambda_n) through partitions of size <= max_size."""
    from .oddsym import schur_differential
    from .textfmt import format_partition
    keys = Pt.partitions_upto(max_size, None, n)

    def diff(lam):
        if sum(lam) >= max_size:
            return {}
        return {mu: c for mu, c in schur_differential(lam, n).items() if n is None or len(mu) <= n}
    return FreeComplex.from_keys(keys, lambda l: 2 * sum(l), lambda l: sum(l), format_partition, diff, bound=max_size)


def olambda_cohomology(max_qdeg: int, domain="Q", n: Optional[int] = None) -> CohomologyResult:
    """Cohomology of O-Lambda in q-degrees <= max_qdeg (computed with one extra degree)."""
    size = max_qdeg // 2
    c = olambda_complex(size + 1, n)
    res = cohomology(c, domain, max_qdeg=2 * size)
    res.bound = 2 * size
    return res


def lima_counts(max_size: int, p: int = 2, n: Optional[int] = None) -> Dict[int, int]:
    out = {k: 0 for k in range(max_size + 1)}
    for lam in Pt.lima_enumerate(max_size, p):
        if n is None or len(lam) <= n:
            out[sum(lam)] += 1
    return out


def olambda_hypercubes(max_size: int, extra: int = 6) -> List[Component]:
    """Hypercube summands of O-Lambda whose initial vector has size <= max_size.

    The complex is built `extra` sizes further; summands touching the outer
    boundary are flagged as truncated.
    """
    big = max_size + extra
    c = olambda_complex(big)
    edge = [l.id for l in c.labels if l.qdeg == 2 * big]
    comps = hypercube_decompose(c, edge)
    out = []
    for comp in comps:
        start = comp.initial if comp.initial is not None else comp.labels[0]
        if c.label(start).qdeg <= 2 * max_size:
            out.append(comp)
    return out


def lima_product_check(max_size: int, family: str = "rows") -> List[dict]:
    """Leading-term property for products of Lima generators.

    family 'rows' uses s_(2k,2k), 'columns' uses s_(2^{2k}).  For every
    multiset of generators of total size <= max_size the product is expanded in
    the Schur basis; the concatenated partition must have coefficient 1 and
    every other term must dominate it.  Signs of the remaining coefficients
    are reported: Lima-indexed terms come out positive, others may not.
    """
    from .oddsym import schur, expand_in_schur
    gens = []
    for k in range(1, max_size // 4 + 1):
        gens.append((2 * k, 2 * k) if family == "rows" else (2,) * (2 * k))
    reports = []

    def multisets(start, remaining, cur):
        if len(cur) >= 2:
            yield list(cur)
        for j in range(start, len(gens)):
            if sum(gens[j]) <= remaining:
                yield from multisets(j, remaining - sum(gens[j]), cur + [gens[j]])
    for ms in multisets(0, max_size, []):
        lead = tuple(sorted((x for g in ms for x in g), reverse=True))
        n = len(lead)
        f = schur(ms[0], n)
        for g in ms[1:]:
            f = f * schur(g, n)
        comb = expand_in_schur(f, n)
        ok = comb.get(lead, 0) == 1 and all(_dominates(mu, lead) for mu in comb)
        lima_nonneg = all(c > 0 for mu, c in comb.items() if Pt.is_lima(mu))
        negative = sorted(mu for mu, c in comb.items() if c < 0)
        reports.append({"factors": ms, "leading": lead, "expansion": comb, "ok": ok,
                        "lima_nonnegative": lima_nonneg, "negative_terms": negative})
    return reports


def _dominates(mu, lam) -> bool:
    if sum(mu) != sum(lam):
        return False
    a = b = 0
    for i in range(max(len(mu), len(lam))):
        a += mu[i] if i < len(mu) else 0
        b += lam[i] if i < len(lam) else 0
        if a < b:
            return False
    return True


# ---------------------------------------------------------------------------
# p-complexes

class PComplex:
    """Graded F_p-module with a degree-2 map d, d^p = 0."""

    def __init__(self, p: int, labels: Iterable[Tuple[str, int]], differential: Dict[Tuple[str, str], int],
                 keys: Optional[Dict[str, Hashable]] = None, bound: Optional[int] = None):
        _domain(p)
        self.p = p
        self.labels = list(labels)
        self.keys = dict(keys or {})
        self.bound = bound
        self.deg = {}
        for i, g in self.labels:
            if i in self.deg:
                raise ValueError(f"duplicate label {i!r}")
            self.deg[i] = g
        self.d: Dict[Tuple[str, str], int] = {}
        for (s, t), c in differential.items():
            if s not in self.deg or t not in self.deg:
                raise ValueError("differential references an unknown label")
            if self.deg[t] != self.deg[s] + 2:
                raise ValueError(f"entry {s} -> {t} does not raise the degree by 2")
            if c % p:
                self.d[(s, t)] = c % p

    def basis(self, g: int) -> List[str]:
        return [i for i, h in self.labels if h == g]

    def degrees(self) -> List[int]:
        return sorted({g for _, g in self.labels})

    def power_matrix(self, g: int, k: int) -> Tuple[List[str], List[str], List[List[int]]]:
        """Matrix of d^k from degree g (rows: targets in degree g + 2k)."""
        src = self.basis(g)
        cur = {s: {s: 1} for s in src}
        for _ in range(k):
            nxt = {}
            for s, vec in cur.items():
                out: Dict[str, int] = {}
                for u, c in vec.items():
                    for (a, b), e in self._out(u):
                        out[b] = (out.get(b, 0) + c * e) % self.p
                nxt[s] = {x: y for x, y in out.items() if y}
            cur = nxt
        tgt = self.basis(g + 2 * k)
        ti = {t: j for j, t in enumerate(tgt)}
        M = [[0] * len(src) for _ in tgt]
        for j, s in enumerate(src):
            for t, c in cur[s].items():
                M[ti[t]][j] = c
        return src, tgt, M

    def _out(self, u):
        if not hasattr(self, "_adj"):
            self._adj = defaultdict(list)
            for (s, t), c in self.d.items():
                self._adj[s].append(((s, t), c))
        return self._adj.get(u, [])

    def nilpotent(self) -> bool:
        return all(linalg.is_zero(self.power_matrix(g, self.p)[2]) for g in self.degrees())


def v_module(i: int, p: int, shift: int = 0) -> PComplex:
    """V_i = H/(d^{i+1}) with basis v_0 .. v_i, d v_j = v_{j+1}."""
    if not 0 <= i <= p - 1:
        raise ValueError("need 0 <= i <= p-1")
    labels = [(f"v{j}", shift + 2 * j) for j in range(i + 1)]
    d = {(f"v{j}", f"v{j + 1}"): 1 for j in range(i)}
    return PComplex(p, labels, d)


def slash_cohomology(c: PComplex, k: int, representatives: bool = False) -> Dict[int, object]:
    """H_{/k} = Ker(d^{k+1}) / (Im(d^{p-1-k}) + Ker(d^k)), per degree."""
    p = c.p
    if not 0 <= k <= p - 2:
        raise ValueError(f"slash index must lie in 0..{p - 2}")
    out = {}
    for g in c.degrees():
        basis = c.basis(g)
        nb = len(basis)
        _, _, A = c.power_matrix(g, k + 1)
        ker_hi = linalg.nullspace(A, nb, p) if A else [[int(i == j) for i in range(nb)] for j in range(nb)]
        if k == 0:
            ker_lo = []
        else:
            _, _, B = c.power_matrix(g, k)
            ker_lo = linalg.nullspace(B, nb, p) if B else [[int(i == j) for i in range(nb)] for j in range(nb)]
        m = p - 1 - k
        src, _, C = c.power_matrix(g - 2 * m, m)
        img = [r for r in linalg.transpose(C)] if (C and src) else []
        denom = [v for v in ker_lo + img if any(x % p for x in v)]
        rd = linalg.rank(denom, p) if denom else 0
        dim = len(ker_hi) - rd
        if representatives:
            reps = linalg.extend_to_complement(denom, ker_hi, p)
            out[g] = (dim, [{basis[i]: x for i, x in enumerate(v) if x} for v in reps])
        elif dim:
            out[g] = dim
    if representatives:
        return {g: v for g, v in out.items() if v[0]}
    return out


def symfun_pcomplex(p: int, max_size: int, n: Optional[int] = None) -> PComplex:
    """Schur basis of Lambda (or Lambda_n) over F_p with d(s_lam) = sum ct(B) s_mu, sizes <= max_size."""
    from .textfmt import format_partition
    keys = Pt.partitions_upto(max_size, None, n)
    ids = {lam: format_partition(lam) for lam in keys}
    labels = [(ids[l], 2 * sum(l)) for l in keys]
    d = {}
    for lam in keys:
        if sum(lam) >= max_size:
            continue
        for i in Pt.addable_rows(lam):
            mu = Pt.add_box(lam, i)
            if n is not None and len(mu) > n:
                continue
            c = Pt.added_content(lam, i) % p
            if c:
                d[(ids[lam], ids[mu])] = c
    return PComplex(p, labels, d, keys={v: k for k, v in ids.items()}, bound=max_size)


@dataclass
class PdgResult:
    p: int
    n: Optional[int]
    maxdeg: int
    dims: Dict[int, Dict[int, int]]          # k -> {size: dim}
    basis: List[Tuple[int, ...]]             # p-Lima partitions giving H_/0
    basis_verified: bool


def pdg_symfun_slash(n: Optional[int], p: int, maxdeg: int) -> PdgResult:
    """Slash cohomology of p-dg symmetric functions through partitions of size <= maxdeg.

    Classes in size t need d-powers up to p-1 steps away, so the complex is
    built through size maxdeg + p - 1.
    """
    c = symfun_pcomplex(p, maxdeg + p - 1, n)
    dims = {}
    for k in range(0, p - 1):
        h = slash_cohomology(c, k)
        dims[k] = {g // 2: v for g, v in sorted(h.items()) if g // 2 <= maxdeg}
    lima = [l for l in Pt.lima_enumerate(maxdeg, p) if n is None or len(l) <= n]
    ok = _check_slash_basis(c, lima)
    return PdgResult(p, n, maxdeg, dims, lima, ok)


def _check_slash_basis(c: PComplex, lams) -> bool:
    """The given Schur classes are d-cocycles and independent modulo Im(d^{p-1}) in each degree."""
    from .textfmt import format_partition
    p = c.p
    by_size = defaultdict(list)
    for lam in lams:
        by_size[sum(lam)].append(lam)
    for size, group in by_size.items():
        g = 2 * size
        basis = c.basis(g)
        bi = {b: j for j, b in enumerate(basis)}
        _, _, A = c.power_matrix(g, 1)
        vecs = []
        for lam in group:
            v = [0] * len(basis)
            v[bi[format_partition(lam)]] = 1
            if A and any(sum(A[r][j] * v[j] for j in range(len(v))) % p for r in range(len(A))):
                return False
            vecs.append(v)
        m = p - 1
        src, _, C = c.power_matrix(g - 2 * m, m)
        img = [r for r in linalg.transpose(C) if any(r)] if (C and src) else []
        if linalg.rank(img + vecs, p) != (linalg.rank(img, p) if img else 0) + len(vecs):
            return False
    return True
