"""
Partitions as weakly decreasing tuples of positive integers.

Row/box conventions: rows are numbered from 1 at the top, a box in row i and
column j has content j - i.  For a partition lam and row i,

    above(lam, i) = lam_1 + ... + lam_{i-1}      (rows i and below removed)
    below(lam, i) = lam_{i+1} + lam_{i+2} + ...  (rows i and above removed)
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

Partition = Tuple[int, ...]


def normalize(parts: Sequence[int]) -> Partition:
    parts = tuple(int(x) for x in parts)
    if any(x < 0 for x in parts):
        raise ValueError("negative part")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"{list(parts)} is not weakly decreasing")
    return tuple(x for x in parts if x)


def size(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def padded(lam: Partition, n: int) -> Tuple[int, ...]:
    if len(lam) > n:
        raise ValueError(f"partition {list(lam)} has more than {n} rows")
    return tuple(lam) + (0,) * (n - len(lam))


def above(lam: Partition, i: int) -> int:
    return sum(lam[: i - 1])


def below(lam: Partition, i: int) -> int:
    return sum(lam[i:])


def addable_rows(lam: Partition) -> List[int]:
    """Rows i (1-based) where a box can be added."""
    out = []
    for i in range(1, len(lam) + 2):
        cur = lam[i - 1] if i <= len(lam) else 0
        prev = lam[i - 2] if i >= 2 else None
        if prev is None or cur < prev:
            out.append(i)
    return out


def add_box(lam: Partition, i: int) -> Partition:
    t = list(lam) + [0]
    t[i - 1] += 1
    return normalize(t)


def added_content(lam: Partition, i: int) -> int:
    cur = lam[i - 1] if i <= len(lam) else 0
    return cur + 1 - i


def contents(lam: Partition) -> List[int]:
    return [j - i for i, r in enumerate(lam, 1) for j in range(1, r + 1)]


def in_box(lam: Partition, rows: int, cols: int) -> bool:
    """lam in Par(rows, cols): at most `rows` rows, parts at most `cols`."""
    return len(lam) <= rows and (not lam or lam[0] <= cols)


@lru_cache(maxsize=None)
def partitions_of(k: int, max_part: int = None, max_len: int = None) -> Tuple[Partition, ...]:
    """All partitions of k, in reverse lexicographic order."""
    if max_part is None:
        max_part = k
    if max_len is None:
        max_len = k
    if k == 0:
        return ((),)
    if max_len == 0:
        return ()
    out = []
    for first in range(min(k, max_part), 0, -1):
        for rest in partitions_of(k - first, first, max_len - 1):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(N: int, max_part: int = None, max_len: int = None) -> List[Partition]:
    out = []
    for k in range(N + 1):
        out.extend(partitions_of(k, max_part, max_len))
    return out


def box_partitions(rows: int, cols: int) -> List[Partition]:
    """Par(rows, cols), ordered by size then reverse lexicographically."""
    return partitions_upto(rows * cols, cols, rows)


def is_p_lima(lam: Partition, p: int) -> bool:
    """Tileable by p x p squares: every part divisible by p, every value occurring a multiple of p times."""
    if any(x % p for x in lam):
        return False
    from collections import Counter
    return all(m % p == 0 for m in Counter(lam).values())


def is_lima(lam: Partition) -> bool:
    return is_p_lima(lam, 2)


def lima_enumerate(N: int, p: int = 2) -> List[Partition]:
    """All p-Lima partitions of size <= N."""
    if p < 2:
        raise ValueError("p must be at least 2")
    out = []
    # a p-Lima partition is p copies of each part of a partition nu, each part scaled by p
    for k in range(0, N // (p * p) + 1):
        for nu in partitions_of(k):
            lam = tuple(p * x for x in nu for _ in range(p))
            out.append(lam)
    return sorted(out, key=lambda l: (sum(l), tuple(-x for x in l)))


def eta(lam: Partition, n: int) -> int:
    from math import comb
    return sum(l * comb(n - j + 1, 2) for j, l in enumerate(lam, 1))


def cross_sum(lam: Partition) -> int:
    """sum_{i<j} lam_i lam_j."""
    s = 0
    run = 0
    for x in lam:
        s += run * x
        run += x
    return s
