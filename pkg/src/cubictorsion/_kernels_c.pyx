# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; semantics identical to _kernels_py.

The point search gets a fixed-width fast path (128-bit accumulators) when
coefficient bounds allow, with a Python-int fallback otherwise.  Outputs
are bit-identical to the pure-Python backend by construction and by test.
"""

import math

from libc.math cimport sqrt as csqrt

cdef extern from *:
    ctypedef long long i128 "__int128"
    ctypedef unsigned long long u128 "unsigned __int128"

BACKEND = "c"


def poly_mul_int(a, b):
    """Convolution of two integer coefficient lists."""
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    if la == 0 or lb == 0:
        return []
    out = [0] * (la + lb - 1)
    cdef object ai
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        for j in range(lb):
            out[i + j] = out[i + j] + ai * b[j]
    return out


def poly_eval_frac_int(c, pnum, pden):
    """Homogenized evaluation: sum of c[i]*pnum**i*pden**(d-i)."""
    cdef Py_ssize_t n = len(c), i
    if n == 0:
        return 0
    acc = 0
    qpow = 1
    for i in range(n - 1, -1, -1):
        acc = acc * pnum + c[i] * qpow
        qpow = qpow * pden
    return acc


cdef inline long long c_gcd(long long a, long long b):
    cdef long long t
    if a < 0:
        a = -a
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline u128 c_isqrt(u128 x):
    if x == 0:
        return 0
    cdef u128 r = <u128> csqrt(<double> x)
    if r == 0:
        r = 1
    r = (r + x // r) // 2
    r = (r + x // r) // 2
    while r * r > x:
        r -= 1
    while (r + 1) * (r + 1) <= x:
        r += 1
    return r


def search_odd_degree_squares(h, height):
    """Same contract as the pure-Python kernel; see _kernels_py."""
    cdef Py_ssize_t d = len(h) - 1
    if d < 1 or d % 2 == 0:
        raise ValueError("kernel expects odd degree >= 1")

    # |Horner accumulator| <= sum(|h_i|) * height**d, and we also form N*q.
    bound = sum(abs(int(x)) for x in h) * (int(height) ** (d + 1))
    if height > 1000000 or bound >= 1 << 120:
        return _search_objects(h, height, d)

    cdef long long[16] hc
    cdef Py_ssize_t i
    for i in range(d + 1):
        hc[i] = h[i]

    cdef list hits = []
    cdef long long p, q, hmax = height
    cdef i128 acc, qpow
    cdef u128 nq, s
    for q in range(1, hmax + 1):
        for p in range(-hmax, hmax + 1):
            if c_gcd(p, q) != 1:
                continue
            acc = 0
            qpow = 1
            for i in range(d, -1, -1):
                acc = acc * p + hc[i] * qpow
                qpow = qpow * q
            if acc < 0:
                continue
            nq = (<u128> acc) * (<u128> q)
            s = c_isqrt(nq)
            if s * s == nq:
                hits.append((int(p), int(q), int(s)))
    return hits


def _search_objects(h, height, Py_ssize_t d):
    cdef long long p, q, hmax = height
    hits = []
    for q in range(1, hmax + 1):
        for p in range(-hmax, hmax + 1):
            if c_gcd(p, q) != 1:
                continue
            n = poly_eval_frac_int(h, p, q)
            if n < 0:
                continue
            nq = n * q
            s = math.isqrt(nq)
            if s * s == nq:
                hits.append((int(p), int(q), int(s)))
    return hits
