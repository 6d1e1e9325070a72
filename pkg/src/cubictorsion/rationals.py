"""Small helpers around the exact rational type.

The package's rational scalar is `fractions.Fraction`: it is always stored
fully reduced with positive denominator, and its str() form is the wire
format used in JSON ("p/q", or "p" when the denominator is 1).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import InputError

RationalLike = Union[int, Fraction, str]


def parse_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to an exact Fraction.

    Raises InputError on anything else (floats included: binary floats are
    not exact inputs and are rejected rather than silently converted).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {value!r}") from exc
    raise InputError(f"not a rational: {value!r} (type {type(value).__name__})")


def format_rational(q: Fraction) -> str:
    """Wire format: "p/q", or "p" when the denominator is 1."""
    return str(q)


def integer_nth_root(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0
    if k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    # Newton iteration on integers, seeded from the float root.
    x = max(1, int(round(n ** (1.0 / k))))
    while True:
        xk = x ** (k - 1)
        nx = ((k - 1) * x + n // xk) // k
        if nx >= x:
            break
        x = nx
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def is_perfect_power(n: int, k: int) -> bool:
    """True iff n is an exact k-th power of an integer (n may be negative for odd k)."""
    if n < 0:
        if k % 2 == 0:
            return False
        return integer_nth_root(-n, k) ** k == -n
    return integer_nth_root(n, k) ** k == n


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of q in Q, or None.  Returns the root >= 0."""
    if q < 0:
        return None
    pn, pd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if pn * pn == q.numerator and pd * pd == q.denominator:
        return Fraction(pn, pd)
    return None


def is_square_rational(q: Fraction) -> bool:
    return rational_sqrt(q) is not None


def rational_nth_root(q: Fraction, k: int) -> Fraction | None:
    """Exact k-th root of q in Q, or None.  Odd k allows negative q."""
    if q < 0 and k % 2 == 0:
        return None
    sign = -1 if q < 0 else 1
    num, den = abs(q.numerator), q.denominator
    rn, rd = integer_nth_root(num, k), integer_nth_root(den, k)
    if rn ** k == num and rd ** k == den:
        return Fraction(sign * rn, rd)
    return None
