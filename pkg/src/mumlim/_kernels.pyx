# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of mumlim._kernels_py; same functions, C loop scaffolding.

The coefficient arithmetic itself stays on Python objects (exact
rationals), so results are bit-identical to the pure backend.
"""

from mumlim.rationals import ZERO


def cauchy_mul(list a, list b):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j
    cdef list out = [ZERO] * n
    cdef object ai, bj
    for i in range(n):
        ai = a[i]
        if not ai:
            continue
        for j in range(n - i):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def mul_poly(list a, list p):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t np = len(p)
    cdef Py_ssize_t k, i
    cdef list out = [ZERO] * n
    cdef object pk, ai
    if np > n:
        np = n
    for k in range(np):
        pk = p[k]
        if not pk:
            continue
        for i in range(n - k):
            ai = a[i]
            if ai:
                out[i + k] = out[i + k] + pk * ai
    return out


def div_poly(list a, list d):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t nd = len(d)
    cdef Py_ssize_t i, k, kmax
    cdef object d0 = d[0]
    cdef list out = [ZERO] * n
    cdef object acc, dk, oik
    for i in range(n):
        acc = a[i]
        kmax = i if i < nd - 1 else nd - 1
        for k in range(1, kmax + 1):
            dk = d[k]
            oik = out[i - k]
            if dk and oik:
                acc = acc - dk * oik
        out[i] = acc / d0
    return out


def apply_ptable(list P, list a):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t j, m, rl
    cdef list out = [ZERO] * n
    cdef list row
    cdef object am, v
    for j in range(n):
        row = P[j]
        rl = len(row)
        for m in range(rl):
            am = a[m]
            if am:
                v = row[m]
                if v:
                    out[j + m] = out[j + m] + v * am
    return out


def solve_ptable(list P, list b, int r, object a0):
    cdef Py_ssize_t n = len(b)
    cdef Py_ssize_t m, j
    cdef list out = [ZERO] * n
    cdef list pj
    cdef object acc, am, v, mr
    out[0] = a0
    for m in range(1, n):
        acc = b[m]
        for j in range(1, m + 1):
            am = out[m - j]
            if am:
                pj = P[j]
                v = pj[m - j]
                if v:
                    acc = acc - v * am
        # box m before the power: C-int ** C-int would go through a double
        mr = m
        out[m] = acc / (mr**r)
    return out
