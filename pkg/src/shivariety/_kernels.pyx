# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_kernels_py``."""
import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64
ctypedef cnp.int16_t i16


def coroot_first_violation(tuples, triples):
    cdef i64[:, ::1] k = np.ascontiguousarray(tuples, dtype=np.int64)
    cdef i64[:, ::1] t = np.ascontiguousarray(triples, dtype=np.int64).reshape(-1, 3)
    cdef Py_ssize_t nrow = k.shape[0], ntrip = t.shape[0], r, j
    cdef i64 d
    out = np.full(nrow, -1, dtype=np.int64)
    cdef i64[::1] o = out
    for r in range(nrow):
        for j in range(ntrip):
            d = k[r, t[j, 2]] - k[r, t[j, 0]] - k[r, t[j, 1]]
            if d < 0 or d > 1:
                o[r] = j
                break
    return out


cdef object _grow(object arr, Py_ssize_t cap):
    new = np.empty((cap,) + arr.shape[1:], dtype=arr.dtype)
    new[: arr.shape[0]] = arr
    return new


def bfs_alcoves(gen_perm, wall, step, roots, simple_idx, int max_length=-1, bint parallelepiped=False):
    cdef i64[:, ::1] gp = np.ascontiguousarray(gen_perm, dtype=np.int64)
    cdef i64[::1] wl = np.ascontiguousarray(wall, dtype=np.int64)
    cdef i64[::1] st = np.ascontiguousarray(step, dtype=np.int64)
    cdef i64[:, ::1] rt = np.ascontiguousarray(roots, dtype=np.int64)
    cdef i64[::1] si = np.ascontiguousarray(simple_idx, dtype=np.int64)
    cdef Py_ssize_t m = rt.shape[0], n = rt.shape[1], ngen = wl.shape[0], nsimple = si.shape[0]
    cdef Py_ssize_t cap = 1024, size = 1, head = 0, g, i, row
    cdef i64 beta, sg
    cdef bint skip

    Ka = np.zeros((cap, m), dtype=np.int16)
    Xa = np.zeros((cap, n), dtype=np.int64)
    Pa = np.zeros((cap, 2 * m), dtype=np.int16)
    Pa[0] = np.arange(2 * m, dtype=np.int16)
    par = np.full(cap, -1, dtype=np.int64)
    gen = np.full(cap, -1, dtype=np.int64)
    dep = np.zeros(cap, dtype=np.int64)

    cdef i16[:, ::1] K = Ka
    cdef i64[:, ::1] X = Xa
    cdef i16[:, ::1] P = Pa
    cdef i64[::1] PAR = par
    cdef i64[::1] GEN = gen
    cdef i64[::1] DEP = dep

    buf = np.zeros(m, dtype=np.int16)
    cdef i16[::1] kb = buf

    seen = {buf.tobytes()}

    while head < size:
        if max_length >= 0 and DEP[head] >= max_length:
            head += 1
            continue
        for g in range(ngen):
            beta = P[head, wl[g]]
            for i in range(m):
                kb[i] = K[head, i]
            if beta < m:
                kb[beta] += <i16>st[g]
            else:
                kb[beta - m] -= <i16>st[g]
            if parallelepiped:
                skip = False
                for i in range(nsimple):
                    if kb[si[i]] != 0:
                        skip = True
                        break
                if skip:
                    continue
            key = buf.tobytes()
            if key in seen:
                continue
            seen.add(key)
            if size == cap:
                cap *= 2
                Ka = _grow(Ka, cap); Xa = _grow(Xa, cap); Pa = _grow(Pa, cap)
                par = _grow(par, cap); gen = _grow(gen, cap); dep = _grow(dep, cap)
                K = Ka; X = Xa; P = Pa; PAR = par; GEN = gen; DEP = dep
            row = size
            size += 1
            for i in range(m):
                K[row, i] = kb[i]
            if st[g] > 0:
                sg = 1 if beta < m else -1
                for i in range(n):
                    X[row, i] = X[head, i] + sg * rt[beta % m, i]
            else:
                for i in range(n):
                    X[row, i] = X[head, i]
            for i in range(2 * m):
                P[row, i] = P[head, gp[g, i]]
            PAR[row] = head
            GEN[row] = g
            DEP[row] = DEP[head] + 1
        head += 1

    return (
        Ka[:size].astype(np.int64),
        Xa[:size].copy(),
        Pa[:size].astype(np.int64),
        par[:size].copy(),
        gen[:size].copy(),
        dep[:size].copy(),
    )
