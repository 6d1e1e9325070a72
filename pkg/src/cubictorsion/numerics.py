"""Thin wrappers around mpmath used by the exact layers.

Numeric values only ever *suggest* candidates (roots, rational
reconstructions); every consumer verifies suggestions in exact arithmetic
before trusting them.  Nothing in this module is load-bearing for
soundness, only for completeness and speed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import mpmath
from mpmath import mp

from . import kernels

try:
    from mpmath.libmp.libhyper import NoConvergence
except ImportError:  # pragma: no cover - mpmath layout drift
    NoConvergence = ArithmeticError  # type: ignore[assignment,misc]



def mpf_to_fraction(x: mpmath.mpf) -> Fraction:
    """Exact rational value of a finite binary float."""
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    if man == 0 and exp != 0:
        raise ValueError(f"not a finite float: {x!r}")
    # mantissa and exponent are gmpy2.mpz under the gmpy backend; force
    # plain ints so Fractions built here never carry foreign int types
    v = Fraction(int(man)) * Fraction(2) ** int(exp)
    return -v if sign else v


def nearest_rational(x: mpmath.mpf, max_den: int) -> Fraction:
    return mpf_to_fraction(x).limit_denominator(max_den)


def numeric_roots(
    coeffs: Sequence[int], prec_bits: int, maxsteps: int = 400
) -> tuple[list[mpmath.mpc], mpmath.mpf]:
    """All complex roots of an integer polynomial, with mpmath's error estimate.

    coeffs is constant-first with nonzero leading coefficient.  Raises
    NoConvergence if mpmath gives up (caller escalates precision).
    Division polynomials of curves with large coefficients have badly
    clustered complex roots, so the step budget is generous; totally
    real consumers should prefer certified_real_roots, which sidesteps
    the clusters entirely.
    """
    cs = list(coeffs)
    if not cs or cs[-1] == 0:
        raise ValueError("leading coefficient must be nonzero")
    if len(cs) == 1:
        return [], mp.mpf(0)
    with mp.workprec(prec_bits + 64):
        roots, err = mp.polyroots(
            cs[::-1],
            maxsteps=maxsteps,
            extraprec=prec_bits // 2 + 64,
            error=True,
        )
        return list(roots), +err


def refine_isolated_root(
    coeffs: Sequence[int], lo: Fraction, hi: Fraction, prec_bits: int
) -> tuple[mpmath.mpf, mpmath.mpf]:
    """One real root of an integer polynomial, from an isolating interval.

    (lo, hi) must contain exactly one root, simple and irrational, so
    the exact endpoint signs differ.  Bisection against the exact
    polynomial narrows the bracket until Newton cannot escape it, Newton
    polishes to the working precision, and the returned radius
    deg * |p(x)/p'(x)| certifies that a true root lies that close to the
    returned value.  Nothing here depends on floating-point seeding, so
    the result cannot silently drift to a root outside the interval.
    """
    cs = list(coeffs)
    if not cs or cs[-1] == 0:
        raise ValueError("leading coefficient must be nonzero")

    def sign_at(q: Fraction) -> int:
        v = kernels.poly_eval_frac_int(cs, q.numerator, q.denominator)
        return (v > 0) - (v < 0)

    slo = sign_at(lo)
    if slo == 0 or slo == sign_at(hi):
        raise ValueError("interval endpoints do not bracket a sign change")
    for _ in range(128):
        mid = (lo + hi) / 2
        if hi - lo <= max(abs(mid), Fraction(1)) / (1 << 48):
            break
        if sign_at(mid) == slo:
            lo = mid
        else:
            hi = mid
    d = len(cs) - 1
    deriv = [i * c for i, c in enumerate(cs)][1:]
    with mp.workprec(prec_bits + 64):
        x = (mp.mpf(lo.numerator) / lo.denominator
             + mp.mpf(hi.numerator) / hi.denominator) / 2
        capprox = [mp.mpf(c) for c in cs]
        dapprox = [mp.mpf(c) for c in deriv]
        eps = mp.mpf(2) ** (-(prec_bits + 16))
        for _ in range(80):
            fx = _horner(capprox, x)
            dfx = _horner(dapprox, x)
            if dfx == 0:
                break
            step = fx / dfx
            x = x - step
            if abs(step) <= eps * max(1, abs(x)):
                break
        dfx = _horner(deriv, x)
        if dfx == 0:
            raise NoConvergence("derivative vanished at a polished root")
        r = d * abs(_horner(cs, x) / dfx)
        return +x, +r


def certified_root_radius(coeffs: Sequence[int], x) -> mpmath.mpf:
    """Radius around x certain to contain a root of the integer polynomial.

    deg * |p(x)/p'(x)| bounds the distance to the nearest root (sum the
    partial fractions of p'/p), with exact coefficients so the bound
    holds regardless of how x was produced.  Infinite when p'(x) = 0.
    """
    cs = list(coeffs)
    d = len(cs) - 1
    deriv = [i * c for i, c in enumerate(cs)][1:]
    dfx = _horner(deriv, x)
    if dfx == 0:
        return mp.inf
    return d * abs(_horner(cs, x) / dfx)


def refine_real_root(coeffs: Sequence[int], x0: mpmath.mpf, prec_bits: int) -> mpmath.mpf:
    """Newton-polish a simple real root to the requested working precision."""
    deriv = [i * c for i, c in enumerate(coeffs)][1:]
    with mp.workprec(prec_bits + 64):
        x = mp.mpf(x0)
        for _ in range(80):
            fx = _horner(coeffs, x)
            dfx = _horner(deriv, x)
            if dfx == 0:
                break
            step = fx / dfx
            x = x - step
            if abs(step) <= mp.mpf(2) ** (-(prec_bits + 16)) * max(1, abs(x)):
                break
        return +x


def _horner(coeffs: Sequence[int], x):
    acc = mp.mpf(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def split_real_complex(
    roots: Sequence[mpmath.mpc], prec_bits: int
) -> tuple[list[mpmath.mpf], list[mpmath.mpc]]:
    """Partition numeric roots into (real, complex) by imaginary-part size.

    Misclassification is harmless for soundness (exact verification comes
    later) but real roots are sorted ascending to stabilize downstream
    enumeration order.
    """
    with mp.workprec(prec_bits + 64):
        thresh = mp.mpf(2) ** (-max(8, prec_bits // 3))
        reals: list[mpmath.mpf] = []
        cplx: list[mpmath.mpc] = []
        for z in roots:
            z = mpmath.mpc(z)
            if abs(z.imag) <= thresh * max(1, abs(z)):
                reals.append(z.real)
            else:
                cplx.append(z)
        reals.sort()
        cplx.sort(key=lambda w: (w.real, w.imag))
        return reals, cplx
