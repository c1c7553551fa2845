# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels mirroring :mod:`spancomplex.kernels.pyref`.

The rank kernel works in 64-bit integers behind a magnitude guard: any
operand at or above 2**31 raises ``KernelOverflowError`` before an
overflowing multiply could happen, and the caller retries with the pure
Python kernel.  Results are bit-identical to the reference.
"""

import numpy as np

cimport numpy as cnp

from ..errors import KernelOverflowError

cnp.import_array()

ctypedef cnp.int64_t i64

cdef i64 GUARD = <i64>1 << 31


cdef int _find(cnp.int32_t* parent, int x) nogil:
    while parent[x] != x:
        x = parent[x]
    return x


cdef void _extend_forests(
    int idx,
    unsigned long long mask,
    int n_edges,
    cnp.int32_t* eu,
    cnp.int32_t* ev,
    cnp.int32_t* parent,
    list out,
):
    cdef int i, ru, rv
    cdef unsigned long long m
    for i in range(idx, n_edges):
        ru = _find(parent, eu[i])
        rv = _find(parent, ev[i])
        if ru == rv:
            continue
        parent[ru] = rv
        m = mask | (<unsigned long long>1 << i)
        out.append(m)
        _extend_forests(i + 1, m, n_edges, eu, ev, parent, out)
        parent[ru] = ru


def forest_masks(int n_edges, us, vs, int n_vertices):
    """See :func:`spancomplex.kernels.pyref.forest_masks`."""
    if n_edges >= 63:
        raise ValueError("forest enumeration supports at most 62 edges")
    cdef cnp.ndarray[cnp.int32_t, ndim=1] eu = np.ascontiguousarray(us, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] ev = np.ascontiguousarray(vs, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] parent = np.arange(n_vertices, dtype=np.int32)
    cdef list out = []
    _extend_forests(0, 0, n_edges, &eu[0], &ev[0], &parent[0], out)
    out.sort()
    return out


cdef i64 _gcd64(i64 a, i64 b) nogil:
    cdef i64 t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


def matrix_rank(cnp.ndarray[i64, ndim=2] m):
    """See :func:`spancomplex.kernels.pyref.matrix_rank`."""
    cdef int nrows = m.shape[0]
    cdef int ncols = m.shape[1]
    if nrows == 0 or ncols == 0:
        return 0
    cdef cnp.ndarray[i64, ndim=2] a = np.ascontiguousarray(m, dtype=np.int64).copy()
    cdef cnp.ndarray[cnp.int32_t, ndim=1] alive_rows = np.empty(nrows, dtype=np.int32)

    cdef int alive = 0
    cdef int i, j, ii, r, pr, bi, bj, new_alive, nonzero
    cdef i64 val, av, best_abs, p, vv, g, pp, aa, x, y, nv, rg
    cdef int rank = 0

    for i in range(nrows):
        for j in range(ncols):
            if a[i, j] != 0:
                alive_rows[alive] = i
                alive += 1
                break

    while alive > 0:
        # pivot: first entry of smallest absolute value, row-major scan
        best_abs = 0
        bi = -1
        bj = -1
        for ii in range(alive):
            r = alive_rows[ii]
            for j in range(ncols):
                val = a[r, j]
                if val != 0:
                    av = -val if val < 0 else val
                    if bi < 0 or av < best_abs:
                        best_abs = av
                        bi = ii
                        bj = j
            if best_abs == 1:
                break
        if bi < 0:
            break
        rank += 1
        pr = alive_rows[bi]
        alive_rows[bi] = alive_rows[alive - 1]
        alive -= 1
        p = a[pr, bj]

        new_alive = 0
        for ii in range(alive):
            r = alive_rows[ii]
            vv = a[r, bj]
            if vv != 0:
                g = _gcd64(p, vv)
                pp = p / g
                aa = vv / g
                if pp >= GUARD or pp <= -GUARD or aa >= GUARD or aa <= -GUARD:
                    raise KernelOverflowError("multiplier exceeds 64-bit guard")
                nonzero = 0
                rg = 0
                for j in range(ncols):
                    x = a[r, j]
                    y = a[pr, j]
                    if x >= GUARD or x <= -GUARD or y >= GUARD or y <= -GUARD:
                        raise KernelOverflowError("entry exceeds 64-bit guard")
                    nv = pp * x - aa * y
                    a[r, j] = nv
                    if nv != 0:
                        nonzero = 1
                        rg = _gcd64(rg, nv)
                if not nonzero:
                    continue  # row became zero
                if rg > 1:
                    for j in range(ncols):
                        a[r, j] = a[r, j] / rg
            alive_rows[new_alive] = r
            new_alive += 1
        alive = new_alive
    return rank
