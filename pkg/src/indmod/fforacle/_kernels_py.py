"""Pure-Python spin and echelon kernels (fallback for the compiled module).

Field elements are integer codes; arithmetic goes through the antilog table
``ex`` (length ``2(Q-1)``), the log table ``lg`` (``lg[0] = -1``) and the Zech
table ``zech``.  Both kernels return the reduced row-echelon basis of the
result as an ``int64`` array with rows sorted by pivot.
"""
from __future__ import annotations

import numpy as np


class _Arith:
    __slots__ = ("ex", "lg", "zech", "q1", "p2", "neg1")

    def __init__(self, ex, lg, zech, p):
        self.ex = [int(x) for x in ex]
        self.lg = [int(x) for x in lg]
        self.zech = [int(x) for x in zech]
        self.q1 = len(self.lg) - 1
        self.p2 = p == 2
        self.neg1 = 1 if self.p2 else self.ex[self.q1 // 2]


def _axpy(A: _Arith, y: list[int], c: int, x: list[int], support: list[int]) -> None:
    """``y += c * x`` over the coordinates in ``support``."""
    ex, lg = A.ex, A.lg
    lc = lg[c]
    if A.p2:
        for j in support:
            y[j] ^= ex[lc + lg[x[j]]]
        return
    zech, q1 = A.zech, A.q1
    for j in support:
        t = ex[lc + lg[x[j]]]
        a = y[j]
        if a == 0:
            y[j] = t
        else:
            la = lg[a]
            d = lg[t] - la
            if d < 0:
                d += q1
            z = zech[d]
            y[j] = 0 if z < 0 else ex[la + z]


def _neg(A: _Arith, a: int) -> int:
    if A.p2 or a == 0:
        return a
    return A.ex[A.lg[a] + A.lg[A.neg1]]


def _echelon(A: _Arith, queue: list[list[int]], gens: list[list[list[tuple[int, int]]]], n: int) -> list[list[int]]:
    ex, lg, q1 = A.ex, A.lg, A.q1
    pivot_row: dict[int, list[int]] = {}
    supports: dict[int, list[int]] = {}
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for c in sorted(pivot_row):
            if v[c]:
                _axpy(A, v, _neg(A, v[c]), pivot_row[c], supports[c])
        lead = next((j for j in range(n) if v[j]), -1)
        if lead < 0:
            continue
        inv = ex[(q1 - lg[v[lead]]) % q1]
        if inv != 1:
            li = lg[inv]
            v = [ex[li + lg[x]] if x else 0 for x in v]
        pivot_row[lead] = v
        supports[lead] = [j for j in range(lead, n) if v[j]]
        for cols in gens:
            w = [0] * n
            for j in supports[lead]:
                _axpy_sparse(A, w, v[j], cols[j])
            queue.append(w)
    # back-substitution, largest pivot first
    pivots = sorted(pivot_row)
    for c in reversed(pivots):
        row = pivot_row[c]
        sup = [j for j in range(c, n) if row[j]]
        for c2 in pivots:
            if c2 >= c:
                break
            r2 = pivot_row[c2]
            if r2[c]:
                _axpy(A, r2, _neg(A, r2[c]), row, sup)
    return [pivot_row[c] for c in pivots]


def _axpy_sparse(A: _Arith, y: list[int], c: int, col: list[tuple[int, int]]) -> None:
    """``y += c * col`` for a column stored as ``(row, value)`` pairs."""
    ex, lg = A.ex, A.lg
    lc = lg[c]
    if A.p2:
        for i, a in col:
            y[i] ^= ex[lc + lg[a]]
        return
    zech, q1 = A.zech, A.q1
    for i, a in col:
        t = ex[lc + lg[a]]
        b = y[i]
        if b == 0:
            y[i] = t
        else:
            lb = lg[b]
            d = lg[t] - lb
            if d < 0:
                d += q1
            z = zech[d]
            y[i] = 0 if z < 0 else ex[lb + z]


def _sparse_columns(M: np.ndarray) -> list[list[tuple[int, int]]]:
    n = M.shape[1]
    return [[(int(i), int(M[i, j])) for i in np.flatnonzero(M[:, j])] for j in range(n)]


def spin(gens, seeds, ex, lg, zech, p):
    """Smallest subspace containing ``seeds`` and stable under every matrix in ``gens``."""
    seeds = np.asarray(seeds, dtype=np.int64)
    gens = np.asarray(gens, dtype=np.int64)
    n = seeds.shape[1]
    A = _Arith(ex, lg, zech, p)
    cols = [_sparse_columns(M) for M in gens]
    queue = [[int(x) for x in row] for row in seeds]
    rows = _echelon(A, queue, cols, n)
    return np.array(rows, dtype=np.int64).reshape(len(rows), n)


def rref(rows, ex, lg, zech, p):
    rows = np.asarray(rows, dtype=np.int64)
    n = rows.shape[1]
    A = _Arith(ex, lg, zech, p)
    out = _echelon(A, [[int(x) for x in r] for r in rows], [], n)
    return np.array(out, dtype=np.int64).reshape(len(out), n)
