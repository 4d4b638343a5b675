# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled permutation-braid kernels.

This is the compiled twin of braidkit._native; see that module for the
data layout and the sliding algorithm. The two must return bit-identical
results on every input.
"""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

BACKEND = "c"

# Factors are byte permutations, so n is capped at 255; far above any
# strand count the sliding tables are sane for anyway.
DEF MAX_N = 256


cdef int _slide(unsigned char *buf, Py_ssize_t m, int n) except -1:
    """Run sliding passes in place until a full pass changes nothing."""
    cdef unsigned char inv[MAX_N]
    cdef unsigned char tmp
    cdef unsigned char *A
    cdef unsigned char *B
    cdef Py_ssize_t k, passes = 0
    cdef int t, i, move, pa, pb
    cdef bint changed = True
    while changed:
        changed = False
        passes += 1
        if passes > m + 2:
            raise RuntimeError("factor sliding failed to converge")
        for k in range(m - 1):
            A = buf + k * n
            B = A + n
            for t in range(n):
                inv[A[t]] = t
            while True:
                move = -1
                for i in range(n - 1):
                    if B[i] > B[i + 1] and inv[i] < inv[i + 1]:
                        move = i
                        break
                if move < 0:
                    break
                changed = True
                tmp = B[move]
                B[move] = B[move + 1]
                B[move + 1] = tmp
                pa = inv[move]
                pb = inv[move + 1]
                A[pa] = <unsigned char> (move + 1)
                A[pb] = <unsigned char> move
                inv[move] = <unsigned char> pb
                inv[move + 1] = <unsigned char> pa
    return 0


cdef void _strip(unsigned char *buf, Py_ssize_t m, int n,
                 Py_ssize_t *out_lo, Py_ssize_t *out_hi):
    """Find the slice left after absorbing leading Deltas and trailing ids."""
    cdef Py_ssize_t lo = 0, hi = m
    cdef int t
    cdef bint ok
    while lo < m:
        ok = True
        for t in range(n):
            if buf[lo * n + t] != n - 1 - t:
                ok = False
                break
        if not ok:
            break
        lo += 1
    while hi > lo:
        ok = True
        for t in range(n):
            if buf[(hi - 1) * n + t] != t:
                ok = False
                break
        if not ok:
            break
        hi -= 1
    out_lo[0] = lo
    out_hi[0] = hi


cdef object _finish(unsigned char *buf, Py_ssize_t m, int n, long delta):
    cdef Py_ssize_t lo, hi
    _slide(buf, m, n)
    _strip(buf, m, n, &lo, &hi)
    return (delta + lo, PyBytes_FromStringAndSize(<char *> (buf + lo * n), (hi - lo) * n))


def normalize(int n, long delta, bytes flat):
    if n == 1:
        return 0, b""
    if n < 1 or n >= MAX_N:
        raise ValueError("strand count out of range for the kernel")
    cdef Py_ssize_t m = len(flat) // n
    if m == 0:
        return delta, b""
    cdef unsigned char *buf = <unsigned char *> malloc(m * n)
    if buf is NULL:
        raise MemoryError()
    try:
        memcpy(buf, PyBytes_AS_STRING(flat), m * n)
        return _finish(buf, m, n, delta)
    finally:
        free(buf)


def multiply(int n, long p1, bytes flat1, long p2, bytes flat2):
    if n == 1:
        return 0, b""
    if n < 1 or n >= MAX_N:
        raise ValueError("strand count out of range for the kernel")
    cdef Py_ssize_t m1 = len(flat1) // n
    cdef Py_ssize_t m2 = len(flat2) // n
    cdef Py_ssize_t m = m1 + m2
    if m == 0:
        return p1 + p2, b""
    cdef unsigned char *buf = <unsigned char *> malloc(m * n)
    if buf is NULL:
        raise MemoryError()
    cdef const unsigned char *src1 = <const unsigned char *> PyBytes_AS_STRING(flat1)
    cdef Py_ssize_t off
    cdef int t
    try:
        if p2 % 2:
            for off in range(m1):
                for t in range(n):
                    buf[off * n + t] = n - 1 - src1[off * n + n - 1 - t]
        else:
            memcpy(buf, src1, m1 * n)
        memcpy(buf + m1 * n, PyBytes_AS_STRING(flat2), m2 * n)
        return _finish(buf, m, n, p1 + p2)
    finally:
        free(buf)


cdef void _conj_fill(unsigned char *buf, const unsigned char *flat, Py_ssize_t mf,
                     const unsigned char *s, int n, long p):
    """Lay out tau^p(Delta s^-1), the factors, then s."""
    cdef unsigned char inv[MAX_N]
    cdef unsigned char head[MAX_N]
    cdef int t
    for t in range(n):
        inv[s[t]] = t
    for t in range(n):
        head[t] = inv[n - 1 - t]
    if p % 2:
        for t in range(n):
            buf[t] = n - 1 - head[n - 1 - t]
    else:
        for t in range(n):
            buf[t] = head[t]
    memcpy(buf + n, flat, mf * n)
    memcpy(buf + (mf + 1) * n, s, n)


def conjugate_by_simple(int n, long p, bytes flat, bytes s):
    if n == 1:
        return 0, b""
    if n < 1 or n >= MAX_N:
        raise ValueError("strand count out of range for the kernel")
    cdef Py_ssize_t mf = len(flat) // n
    cdef Py_ssize_t m = mf + 2
    cdef unsigned char *buf = <unsigned char *> malloc(m * n)
    if buf is NULL:
        raise MemoryError()
    try:
        _conj_fill(buf, <const unsigned char *> PyBytes_AS_STRING(flat), mf,
                   <const unsigned char *> PyBytes_AS_STRING(s), n, p)
        return _finish(buf, m, n, p - 1)
    finally:
        free(buf)


def conjugate_batch(int n, long p, bytes flat, simples):
    if n == 1:
        return [(0, b"")] * len(simples)
    if n < 1 or n >= MAX_N:
        raise ValueError("strand count out of range for the kernel")
    cdef Py_ssize_t mf = len(flat) // n
    cdef Py_ssize_t m = mf + 2
    cdef unsigned char *buf = <unsigned char *> malloc(m * n)
    if buf is NULL:
        raise MemoryError()
    cdef const unsigned char *src = <const unsigned char *> PyBytes_AS_STRING(flat)
    cdef list out = []
    cdef bytes s
    try:
        for s in simples:
            _conj_fill(buf, src, mf, <const unsigned char *> PyBytes_AS_STRING(s), n, p)
            out.append(_finish(buf, m, n, p - 1))
        return out
    finally:
        free(buf)
