# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled spin and echelon kernels over ``F_{p^N}`` (log/Zech arithmetic).

Same contract as ``_kernels_py``: inputs are int64 code arrays, output is the
reduced row-echelon basis with rows sorted by pivot.
"""
import numpy as np

ctypedef long long i64


cdef struct Arith:
    const i64* ex
    const i64* lg
    const i64* zech
    i64 q1
    bint p2
    i64 neg1


cdef inline i64 fmul(Arith* A, i64 a, i64 b) nogil:
    if a == 0 or b == 0:
        return 0
    return A.ex[A.lg[a] + A.lg[b]]


cdef inline i64 fadd(Arith* A, i64 a, i64 b) nogil:
    cdef i64 la, d, z
    if A.p2:
        return a ^ b
    if a == 0:
        return b
    if b == 0:
        return a
    la = A.lg[a]
    d = A.lg[b] - la
    if d < 0:
        d += A.q1
    z = A.zech[d]
    if z < 0:
        return 0
    return A.ex[la + z]


cdef inline i64 finv(Arith* A, i64 a) nogil:
    return A.ex[(A.q1 - A.lg[a]) % A.q1]


cdef inline i64 fneg(Arith* A, i64 a) nogil:
    if A.p2 or a == 0:
        return a
    return fmul(A, a, A.neg1)


cdef Py_ssize_t _echelon(Arith* A, i64[:, ::1] queue, Py_ssize_t qlen,
                         const i64[:, :, ::1] gens, i64[:, ::1] basis,
                         i64[::1] row_of) nogil:
    cdef Py_ssize_t n = queue.shape[1]
    cdef Py_ssize_t g = gens.shape[0]
    cdef Py_ssize_t head = 0, nrows = 0
    cdef Py_ssize_t c, j, i, lead, k
    cdef i64 f, x, inv
    while head < qlen:
        # reduce queue[head] against the semi-echelon rows, pivot order
        for c in range(n):
            x = queue[head, c]
            if x == 0 or row_of[c] < 0:
                continue
            f = fneg(A, x)
            k = row_of[c]
            for j in range(c, n):
                if basis[k, j] != 0:
                    queue[head, j] = fadd(A, queue[head, j], fmul(A, f, basis[k, j]))
        lead = -1
        for c in range(n):
            if queue[head, c] != 0:
                lead = c
                break
        if lead >= 0:
            inv = finv(A, queue[head, lead])
            for j in range(n):
                basis[nrows, j] = fmul(A, inv, queue[head, j])
            row_of[lead] = nrows
            for k in range(g):
                for i in range(n):
                    x = 0
                    for j in range(lead, n):
                        if basis[nrows, j] != 0 and gens[k, i, j] != 0:
                            x = fadd(A, x, fmul(A, gens[k, i, j], basis[nrows, j]))
                    queue[qlen, i] = x
                qlen += 1
            nrows += 1
        head += 1

    # back-substitution from the largest pivot down
    cdef Py_ssize_t c2, k2
    for c in range(n - 1, -1, -1):
        k = row_of[c]
        if k < 0:
            continue
        for c2 in range(c):
            k2 = row_of[c2]
            if k2 < 0 or basis[k2, c] == 0:
                continue
            f = fneg(A, basis[k2, c])
            for j in range(c, n):
                if basis[k, j] != 0:
                    basis[k2, j] = fadd(A, basis[k2, j], fmul(A, f, basis[k, j]))
    return nrows


def _run(gens, seeds, ex, lg, zech, int p):
    cdef i64[:, :, ::1] G = np.ascontiguousarray(gens, dtype=np.int64)
    cdef i64[:, ::1] S = np.ascontiguousarray(seeds, dtype=np.int64)
    cdef i64[::1] EX = np.ascontiguousarray(ex, dtype=np.int64)
    cdef i64[::1] LG = np.ascontiguousarray(lg, dtype=np.int64)
    cdef i64[::1] ZE = np.ascontiguousarray(zech, dtype=np.int64)
    cdef Py_ssize_t n = S.shape[1]
    cdef Py_ssize_t k = S.shape[0]
    cdef Py_ssize_t g = G.shape[0]
    cdef Arith A
    A.ex = &EX[0]
    A.lg = &LG[0]
    A.zech = &ZE[0] if ZE.shape[0] > 0 else NULL
    A.q1 = LG.shape[0] - 1
    A.p2 = p == 2
    A.neg1 = 1 if p == 2 else EX[A.q1 // 2]

    queue_np = np.zeros((k + n * g, n), dtype=np.int64)
    queue_np[:k] = S
    basis_np = np.zeros((n, n), dtype=np.int64)
    row_of_np = np.full(n, -1, dtype=np.int64)
    cdef i64[:, ::1] Q = queue_np
    cdef i64[:, ::1] B = basis_np
    cdef i64[::1] R = row_of_np
    cdef Py_ssize_t nrows
    with nogil:
        nrows = _echelon(&A, Q, k, G, B, R)
    pivots = [c for c in range(n) if row_of_np[c] >= 0]
    return basis_np[[int(row_of_np[c]) for c in pivots]].reshape(len(pivots), n)


def spin(gens, seeds, ex, lg, zech, p):
    """Smallest subspace containing ``seeds`` and stable under every matrix in ``gens``."""
    seeds = np.asarray(seeds, dtype=np.int64)
    gens = np.asarray(gens, dtype=np.int64)
    if gens.size == 0:
        gens = np.zeros((0, seeds.shape[1], seeds.shape[1]), dtype=np.int64)
    return _run(gens, seeds, ex, lg, zech, p)


def rref(rows, ex, lg, zech, p):
    rows = np.asarray(rows, dtype=np.int64)
    n = rows.shape[1]
    return _run(np.zeros((0, n, n), dtype=np.int64), rows, ex, lg, zech, p)
