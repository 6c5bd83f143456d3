"""
Exact linear algebra over Q, F_p and Z on small dense integer matrices.

Matrices are lists of rows.  Over Q the elimination is fraction-free
(Bareiss-style integer row operations); over F_p entries are reduced
modulo p after each step; over Z the Smith normal form gives torsion.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[int]]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def transpose(A: Matrix, ncols: Optional[int] = None) -> Matrix:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(r) for r in zip(*A)]


def matmul(A: Matrix, B: Matrix, p: Optional[int] = None) -> Matrix:
    if not A:
        return []
    m, k = len(A), len(A[0])
    n = len(B[0]) if B else 0
    out = zeros(m, n)
    for i in range(m):
        Ai = A[i]
        Oi = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(n):
                    if Bt[j]:
                        Oi[j] += a * Bt[j]
        if p is not None:
            out[i] = [x % p for x in Oi]
    return out


def is_zero(A: Matrix) -> bool:
    return all(not x for row in A for x in row)


def echelon(A: Matrix, p: Optional[int] = None) -> Tuple[Matrix, List[int]]:
    """Row echelon form and pivot columns.  Integer entries stay integers over Q (fraction-free)."""
    M = [list(r) for r in A]
    if p is not None:
        M = [[x % p for x in r] for r in M]
    rows = len(M)
    cols = len(M[0]) if M else 0
    piv = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if M[i][c]), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        pv = M[r][c]
        if p is not None:
            inv = pow(pv, -1, p)
            M[r] = [(x * inv) % p for x in M[r]]
            for i in range(rows):
                if i != r and M[i][c]:
                    f = M[i][c]
                    M[i] = [(x - f * y) % p for x, y in zip(M[i], M[r])]
        else:
            for i in range(r + 1, rows):
                if M[i][c]:
                    f = M[i][c]
                    row = [pv * x - f * y for x, y in zip(M[i], M[r])]
                    g = 0
                    for x in row:
                        if x:
                            g = gcd(g, x)
                    if g > 1:
                        row = [x // g for x in row]
                    M[i] = row
        piv.append(c)
        r += 1
        if r == rows:
            break
    return M[:r], piv


def rank(A: Matrix, p: Optional[int] = None) -> int:
    if not A or not A[0]:
        return 0
    return len(echelon(A, p)[1])


def rref(A: Matrix, p: Optional[int] = None):
    """Reduced row echelon form (Fractions over Q, residues over F_p) and pivots."""
    if p is not None:
        return echelon(A, p)
    R, piv = echelon(A)
    F = [[Fraction(x) for x in r] for r in R]
    for k in range(len(piv) - 1, -1, -1):
        c = piv[k]
        pv = F[k][c]
        F[k] = [x / pv for x in F[k]]
        for i in range(k):
            if F[i][c]:
                f = F[i][c]
                F[i] = [x - f * y for x, y in zip(F[i], F[k])]
    return F, piv


def nullspace(A: Matrix, ncols: int, p: Optional[int] = None) -> List[List]:
    """Basis of {v : A v = 0}; integer vectors over Q (denominators cleared)."""
    if not A:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    R, piv = rref(A, p)
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for k, c in enumerate(piv):
            v[c] = -R[k][f]
        if p is not None:
            v = [x % p for x in v]
        else:
            v = _clear(v)
        basis.append(v)
    return basis


def _clear(v):
    den = 1
    for x in v:
        if isinstance(x, Fraction):
            den = den * x.denominator // gcd(den, x.denominator)
    out = [int(x * den) for x in v]
    g = 0
    for x in out:
        if x:
            g = gcd(g, x)
    return [x // g for x in out] if g > 1 else out


def solve(A: Matrix, b: Sequence[int], p: Optional[int] = None):
    """One solution x of A x = b (Fractions over Q), or None."""
    m = len(A)
    ncols = len(A[0]) if A else 0
    aug = [list(A[i]) + [b[i]] for i in range(m)]
    R, piv = rref(aug, p)
    if ncols in piv:
        return None
    x = [0] * ncols
    for k, c in enumerate(piv):
        x[c] = R[k][ncols]
    return x


def solve_integral(A: Matrix, b: Sequence[int]):
    """Unique integral solution when A has full column rank; raises otherwise."""
    x = solve(A, b)
    if x is None:
        raise ValueError("system has no solution")
    if rank(A) != (len(A[0]) if A else 0):
        raise ValueError("solution is not unique")
    out = []
    for v in x:
        v = Fraction(v)
        if v.denominator != 1:
            raise ValueError("solution is not integral")
        out.append(int(v))
    return out


def smith_diagonal(A: Matrix) -> List[int]:
    """Nonzero invariant factors of an integer matrix."""
    M = [list(r) for r in A if any(r)]
    if not M:
        return []
    rows, cols = len(M), len(M[0])
    diag = []
    t = 0
    while t < min(rows, cols):
        # find the smallest nonzero entry in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if M[i][j] and (best is None or abs(M[i][j]) < abs(M[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        M[t], M[i] = M[i], M[t]
        for row in M:
            row[t], row[j] = row[j], row[t]
        while True:
            pv = M[t][t]
            done = True
            for i in range(t + 1, rows):
                if M[i][t]:
                    q = M[i][t] // pv
                    M[i] = [x - q * y for x, y in zip(M[i], M[t])]
                    if M[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if M[t][j]:
                    q = M[t][j] // pv
                    for row in M:
                        row[j] -= q * row[t]
                    if M[t][j]:
                        done = False
            if done:
                # divisibility of the rest of the block
                bad = None
                for i in range(t + 1, rows):
                    for j in range(t + 1, cols):
                        if M[i][j] % pv:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                M[t] = [x + y for x, y in zip(M[t], M[bad])]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            best = (t, t)
            for i in range(t, rows):
                if M[i][t] and abs(M[i][t]) < abs(M[best[0]][best[1]]):
                    best = (i, t)
            for j in range(t, cols):
                if M[t][j] and abs(M[t][j]) < abs(M[best[0]][best[1]]):
                    best = (t, j)
            i, j = best
            M[t], M[i] = M[i], M[t]
            for row in M:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(M[t][t]))
        t += 1
    return diag


def extend_to_complement(span: List[List], candidates: List[List], p: Optional[int] = None) -> List[List]:
    """Candidates that, added greedily, enlarge the span.  Used to pick cohomology representatives."""
    chosen = []
    base = [list(v) for v in span]
    r = rank(base, p) if base else 0
    for v in candidates:
        trial = base + [list(v)]
        r2 = rank(trial, p)
        if r2 > r:
            base = trial
            r = r2
            chosen.append(v)
    return chosen


def in_span(span: List[List], v: Sequence, p: Optional[int] = None) -> bool:
    if not any(v):
        return True
    if not span:
        return False
    return rank(span + [list(v)], p) == rank(span, p)
