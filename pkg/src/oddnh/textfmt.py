"""
Text forms for skew polynomials, ONH elements, partitions and partition combinations.

    3*x1^2*x2 - x3
    2*x1*d[2,1,3] - d[1,2,3]
    [4,4,2,2]
    1*[2] - 1*[1,1]
"""

from __future__ import annotations

import re
from typing import Dict, List, Optional, Tuple

from .skewpoly import SkewPoly


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at offset {pos}")
        self.pos = pos


# ---------------------------------------------------------------------------
# printing

def _term_key(a):
    return (-sum(a), tuple(-x for x in a))


def _mono_str(a) -> str:
    parts = []
    for i, e in enumerate(a, 1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def _join(items: List[Tuple[int, str]]) -> str:
    """items: (coefficient, monomial text or '') in display order."""
    if not items:
        return "0"
    out = []
    for k, (c, m) in enumerate(items):
        mag = abs(c)
        if m:
            body = m if mag == 1 else f"{mag}*{m}"
        else:
            body = str(mag)
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def format_poly(f: SkewPoly) -> str:
    keys = sorted(f.terms, key=_term_key)
    return _join([(f.terms[a], _mono_str(a)) for a in keys])


def format_onh(xi) -> str:
    from . import perms as P
    ident = P.identity(xi.n)

    def key(k):
        a, w = k
        return (-P.length(w), tuple(w), _term_key(a))

    items = []
    for a, w in sorted(xi.terms, key=key):
        m = _mono_str(a)
        if w != ident:
            dpart = "d[" + ",".join(map(str, w)) + "]"
            m = f"{m}*{dpart}" if m else dpart
        items.append((xi.terms[(a, w)], m))
    return _join(items)


def format_partition(lam) -> str:
    return "[" + ",".join(str(x) for x in lam) + "]"


def format_combination(comb: Dict[tuple, int]) -> str:
    """Signed sum 'c*[..]', largest partitions first.  Every coefficient is shown with its sign."""
    if not comb:
        return "0"
    keys = sorted(comb, key=lambda l: (-sum(l), tuple(-x for x in l)))
    parts = []
    for lam in keys:
        c = comb[lam]
        parts.append(f"{'+' if c > 0 else '-'}{abs(c)}*{format_partition(lam)}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|(x)(\d+)|(d)\[|([-+*^\[\],]))")


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.toks: List[Tuple[str, object, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            start = m.start() + (len(m.group(0)) - len(m.group(0).lstrip()))
            if m.group(1):
                self.toks.append(("int", int(m.group(1)), start))
            elif m.group(2):
                self.toks.append(("var", int(m.group(3)), start))
            elif m.group(4):
                self.toks.append(("d[", None, start))
            else:
                self.toks.append((m.group(5), None, start))
            pos = m.end()
        self.toks.append(("end", None, len(text)))
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        t = self.toks[self.i]
        if kind is not None and t[0] != kind:
            raise ParseError(f"expected {kind!r}", t[2])
        self.i += 1
        return t


def _parse_terms(text: str, n: Optional[int], allow_d: bool):
    """List of (coeff, [factor, ...]) where a factor is ('x', i, e) or ('d', perm)."""
    lx = _Lexer(text)
    terms = []
    sign = 1
    first = True
    while True:
        t = lx.peek()
        if t[0] in "+-":
            lx.take()
            sign = 1 if t[0] == "+" else -1
        elif not first:
            if t[0] == "end":
                break
            raise ParseError("expected '+' or '-'", t[2])
        first = False
        coeff = 1
        factors = []
        need = True
        while need:
            t = lx.peek()
            if t[0] == "int":
                lx.take()
                coeff *= t[1]
            elif t[0] == "var":
                lx.take()
                idx = t[1]
                if idx < 1 or (n is not None and idx > n):
                    raise ParseError(f"unknown generator x{idx}", t[2])
                e = 1
                if lx.peek()[0] == "^":
                    lx.take()
                    nt = lx.peek()
                    if nt[0] != "int":
                        raise ParseError("expected exponent", nt[2])
                    lx.take()
                    e = nt[1]
                factors.append(("x", idx, e))
            elif t[0] == "d[":
                if not allow_d:
                    raise ParseError("divided difference not allowed here", t[2])
                lx.take()
                perm = []
                while True:
                    nt = lx.take()
                    if nt[0] != "int":
                        raise ParseError("expected integer in permutation", nt[2])
                    perm.append(nt[1])
                    nt = lx.take()
                    if nt[0] == "]":
                        break
                    if nt[0] != ",":
                        raise ParseError("expected ',' or ']'", nt[2])
                factors.append(("d", tuple(perm), t[2]))
            else:
                raise ParseError("expected a coefficient or generator", t[2])
            if lx.peek()[0] == "*":
                lx.take()
            else:
                need = False
        terms.append((sign * coeff, factors))
        if lx.peek()[0] == "end":
            break
    return terms


def _infer_n(terms):
    n = 0
    for _, fs in terms:
        for f in fs:
            if f[0] == "x":
                n = max(n, f[1])
            else:
                n = max(n, len(f[1]))
    return n


def parse_poly(text: str, n: Optional[int] = None) -> SkewPoly:
    terms = _parse_terms(text, n, allow_d=False)
    if n is None:
        n = _infer_n(terms)
    out = SkewPoly.zero(n)
    for c, fs in terms:
        t = SkewPoly.const(c, n)
        for _, i, e in fs:
            t = t * SkewPoly.var(i, n) ** e
        out = out + t
    return out


def parse_onh(text: str, n: Optional[int] = None):
    from .onh import ONHElement
    from . import perms as P
    terms = _parse_terms(text, n, allow_d=True)
    if n is None:
        n = _infer_n(terms)
    out = ONHElement.zero(n)
    for c, fs in terms:
        t = ONHElement.one(n).scale(c)
        for f in fs:
            if f[0] == "x":
                t = t * ONHElement.from_poly(SkewPoly.var(f[1], n) ** f[2])
            else:
                w = f[1]
                if len(w) != n or not P.is_perm(w):
                    raise ParseError(f"d{list(w)} is not a permutation of 1..{n}", f[2])
                t = t * ONHElement.dw(w)
        out = out + t
    return out


def parse_element(text: str, n: Optional[int] = None):
    """SkewPoly when no divided differences occur, else ONHElement."""
    if "d[" in text:
        return parse_onh(text, n)
    return parse_poly(text, n)


_PART = re.compile(r"\s*\[\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)\]\s*$")


def parse_partition(text: str) -> Tuple[int, ...]:
    text = text.strip()
    if not text.startswith("["):
        # bare list "2,1" or single number
        text = "[" + text + "]"
    m = _PART.match(text)
    if not m:
        raise ParseError("malformed partition", 0)
    body = m.group(1).strip()
    parts = tuple(int(x) for x in body.split(",")) if body else ()
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"{list(parts)} is not weakly decreasing")
    return tuple(x for x in parts if x)


_COMB_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*(\[[^\]]*\])")


def parse_combination(text: str) -> Dict[tuple, int]:
    text = text.strip()
    if text == "0":
        return {}
    out: Dict[tuple, int] = {}
    pos = 0
    while pos < len(text):
        m = _COMB_TERM.match(text, pos)
        if not m:
            raise ParseError("malformed combination", pos)
        c = int(m.group(2)) if m.group(2) else 1
        if m.group(1) == "-":
            c = -c
        lam = parse_partition(m.group(3))
        out[lam] = out.get(lam, 0) + c
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return {k: v for k, v in out.items() if v}
