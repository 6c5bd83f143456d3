"""
Permutations in one-line notation, reduced words, and the signed word table.

A reduced word (i1, ..., ik) names the product s_{i1} ... s_{ik}, composed as
functions.  Each permutation has one canonical word: the longest element uses
the fixed staircase word 1 (2 1) (3 2 1) ..., every other permutation uses its
lexicographically smallest reduced word.  Any other reduced word gives the same
odd divided difference operator up to a sign, read off from a breadth-first
search over braid moves (far commutation contributes -1, a length-3 braid
move contributes +1).
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import permutations as _iperms
from typing import Dict, Optional, Tuple

Perm = Tuple[int, ...]
Word = Tuple[int, ...]


class SignInconsistency(RuntimeError):
    pass


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def compose(u: Perm, v: Perm) -> Perm:
    """(u o v)(j) = u(v(j))."""
    return tuple(u[j - 1] for j in v)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, wi in enumerate(w, 1):
        out[wi - 1] = i
    return tuple(out)


def transposition(i: int, n: int) -> Perm:
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def length(w: Perm) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def is_perm(w) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def left_mul_s(i: int, w: Perm) -> Perm:
    """s_i o w: swap the values i and i+1."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def right_mul_s(w: Perm, i: int) -> Perm:
    """w o s_i: swap positions i and i+1."""
    t = list(w)
    t[i - 1], t[i] = t[i], t[i - 1]
    return tuple(t)


def is_left_descent(i: int, w: Perm) -> bool:
    """l(s_i w) < l(w)."""
    winv = inverse(w)
    return winv[i - 1] > winv[i]


def is_right_descent(w: Perm, i: int) -> bool:
    return w[i - 1] > w[i]


def word_to_perm(word, n: int) -> Perm:
    w = identity(n)
    for i in word:
        w = right_mul_s(w, i)
    return w


def is_reduced(word, n: int) -> bool:
    w = identity(n)
    for i in word:
        if is_right_descent(w, i):
            return False
        w = right_mul_s(w, i)
    return True


def longest(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def w0_word(n: int) -> Word:
    """1 (2 1) (3 2 1) ... (n-1 ... 1)."""
    out = []
    for k in range(1, n):
        out.extend(range(k, 0, -1))
    return tuple(out)


def wab(a: int, b: int) -> Perm:
    """i -> i+b for i <= a, i -> i-a otherwise."""
    return tuple([i + b for i in range(1, a + 1)] + [i - a for i in range(a + 1, a + b + 1)])


@lru_cache(maxsize=None)
def lex_min_word(w: Perm) -> Word:
    out = []
    n = len(w)
    while True:
        for i in range(1, n):
            if is_left_descent(i, w):
                out.append(i)
                w = left_mul_s(i, w)
                break
        else:
            return tuple(out)


@lru_cache(maxsize=None)
def canonical_word(w: Perm) -> Word:
    if len(w) > 1 and w == longest(len(w)):
        return w0_word(len(w))
    return lex_min_word(w)


def _moves(word: Word):
    k = len(word)
    for j in range(k - 1):
        a, b = word[j], word[j + 1]
        if abs(a - b) > 1:
            yield word[:j] + (b, a) + word[j + 2:], -1
    for j in range(k - 2):
        a, b, c = word[j], word[j + 1], word[j + 2]
        if a == c and abs(a - b) == 1:
            yield word[:j] + (b, a, b) + word[j + 3:], 1


@lru_cache(maxsize=None)
def word_table(w: Perm) -> Dict[Word, int]:
    """Every reduced word of w with its sign relative to the canonical word.

    Raises SignInconsistency if two braid paths disagree."""
    start = canonical_word(w)
    table = {start: 1}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        su = table[u]
        for v, s in _moves(u):
            sv = su * s
            old = table.get(v)
            if old is None:
                table[v] = sv
                queue.append(v)
            elif old != sv:
                raise SignInconsistency(f"braid paths disagree for {w} at word {v}")
    return table


def word_sign(word, n: int) -> Tuple[int, Optional[Perm]]:
    """(sign, w) with d_{word} = sign * d_w, or (0, None) for a non-reduced word."""
    word = tuple(word)
    if not is_reduced(word, n):
        return 0, None
    w = word_to_perm(word, n)
    return word_table(w)[word], w


@lru_cache(maxsize=None)
def product_sign(u: Perm, v: Perm) -> Tuple[int, Optional[Perm]]:
    """d_u d_v = sign * d_{uv}, zero if the lengths do not add."""
    n = len(u)
    uv = compose(u, v)
    if length(uv) != length(u) + length(v):
        return 0, None
    return word_table(uv)[canonical_word(u) + canonical_word(v)], uv


@lru_cache(maxsize=None)
def left_letter_sign(i: int, u: Perm) -> Tuple[int, Optional[Perm]]:
    """d_i d_u = sign * d_{s_i u}, zero if s_i is a left descent of u."""
    if is_left_descent(i, u):
        return 0, None
    w = left_mul_s(i, u)
    return word_table(w)[(i,) + canonical_word(u)], w


def all_perms(n: int):
    return [tuple(p) for p in _iperms(range(1, n + 1))]


def check_path_independence(n: int, max_len: int = 6) -> int:
    """Build the word table for every w in S_n with l(w) <= max_len.  Returns the number of words visited."""
    total = 0
    for w in all_perms(n):
        if length(w) <= max_len:
            total += len(word_table(w))
    return total


def shift_perm(w: Perm, offset: int, n: int) -> Perm:
    return tuple(range(1, offset + 1)) + tuple(x + offset for x in w) + tuple(range(offset + len(w) + 1, n + 1))
