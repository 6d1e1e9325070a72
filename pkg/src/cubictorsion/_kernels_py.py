"""Pure-Python reference kernels.

These are the hot integer inner loops.  The compiled twin in
_kernels_c.pyx implements exactly the same functions with the same
semantics; tests assert bit-identical outputs on random inputs.

Conventions: polynomials are lists of Python ints, constant term first,
no trailing-zero requirement here (callers normalize).
"""

from __future__ import annotations

import math

BACKEND = "python"


def poly_mul_int(a: list[int], b: list[int]) -> list[int]:
    """Convolution of two integer coefficient lists."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def poly_eval_frac_int(c: list[int], pnum: int, pden: int) -> int:
    """Homogenized evaluation: sum of c[i] * pnum**i * pden**(d-i), d = len(c)-1.

    The value of the polynomial at pnum/pden is the returned integer divided
    by pden**d.
    """
    if not c:
        return 0
    acc = 0
    qpow = 1
    for ci in reversed(c):
        acc = acc * pnum + ci * qpow
        qpow *= pden
    return acc


def search_odd_degree_squares(h: list[int], height: int) -> list[tuple[int, int, int]]:
    """Find affine rational points of y**2 = h(x) up to naive height.

    h has odd degree d.  Scans x = p/q in lowest terms with |p| <= height,
    1 <= q <= height.  A hit is (p, q, s) with s = isqrt(N*q) >= 0 where
    N = h(p/q) * q**d; then y = s / q**((d+1)//2) exactly.
    Returns hits sorted by (q, p).
    """
    d = len(h) - 1
    if d < 1 or d % 2 == 0:
        raise ValueError("kernel expects odd degree >= 1")
    hits = []
    for q in range(1, height + 1):
        for p in range(-height, height + 1):
            if math.gcd(p, q) != 1:
                continue
            n = poly_eval_frac_int(h, p, q)
            if n < 0:
                continue
            nq = n * q
            s = math.isqrt(nq)
            if s * s == nq:
                hits.append((p, q, s))
    return hits
