"""Dense univariate polynomials over Q, and the exact algorithms on them.

Coefficients are stored constant term first, as a tuple of Fractions with
no trailing zeros; the zero polynomial is the empty tuple.  The module
also provides resultants (two independent routes), discriminants, a
complete rational-root finder that never factors large integers, and a
small rational-function type.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from mpmath import mp

from . import kernels
from .errors import InputError
from .numerics import refine_isolated_root
from .rationals import RationalLike, parse_rational, rational_sqrt

Scalar = Union[int, Fraction]


class RationalPoly:
    """Immutable dense polynomial over Q."""

    __slots__ = ("_c", "_zcache")

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [parse_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._c: tuple[Fraction, ...] = tuple(cs)
        self._zcache: tuple[list[int], int] | None = None

    # -- basic structure -------------------------------------------------

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    @property
    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._c):
            return self._c[i]
        return Fraction(0)

    def lc(self) -> Fraction:
        if not self._c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._c[-1]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == RationalPoly([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"RationalPoly({[str(c) for c in self._c]})"

    def __str__(self) -> str:
        return self.pretty("x")

    def pretty(self, var: str = "x") -> str:
        if not self._c:
            return "0"
        parts = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                x = var if i == 1 else f"{var}^{i}"
                body = x if mag == 1 else f"{mag}*{x}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "RationalPoly | None":
        if isinstance(other, RationalPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPoly([other])
        return None

    def __add__(self, other) -> "RationalPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "RationalPoly":
        return RationalPoly([-c for c in self._c])

    def __sub__(self, other) -> "RationalPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "RationalPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "RationalPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._c or not o._c:
            return RationalPoly()
        if o.degree == 0:
            s = o._c[0]
            return RationalPoly([c * s for c in self._c])
        if self.degree == 0:
            s = self._c[0]
            return RationalPoly([s * c for c in o._c])
        za, da = self._int_model()
        zb, db = o._int_model()
        zc = kernels.poly_mul_int(za, zb)
        d = da * db
        return RationalPoly([Fraction(n, d) for n in zc])

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalPoly":
        if isinstance(other, (int, Fraction)):
            s = Fraction(other)
            return RationalPoly([c / s for c in self._c])
        return NotImplemented

    def __pow__(self, n: int) -> "RationalPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = RationalPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def _int_model(self) -> tuple[list[int], int]:
        """(z, d) with self == (1/d) * z, z integer coefficients.  Cached."""
        if self._zcache is None:
            d = 1
            for c in self._c:
                d = d * c.denominator // math.gcd(d, c.denominator)
            z = [int(c * d) for c in self._c]
            self._zcache = (z, d)
        return self._zcache

    def primitive_model(self) -> tuple["RationalPoly", Fraction]:
        """(P, s) with self == s * P, P integer with content 1 and lc > 0.

        The zero polynomial returns (0, 1).
        """
        if not self._c:
            return RationalPoly(), Fraction(1)
        z, d = self._int_model()
        g = 0
        for c in z:
            g = math.gcd(g, c)
        if z[-1] < 0:
            g = -g
        return RationalPoly([c // g for c in z]), Fraction(g, d)

    # -- evaluation and substitution -------------------------------------

    def evaluate(self, x):
        """Horner evaluation; exact fast path for rational x, generic otherwise."""
        if isinstance(x, int):
            x = Fraction(x)
        if isinstance(x, Fraction):
            if not self._c:
                return Fraction(0)
            z, d = self._int_model()
            n = kernels.poly_eval_frac_int(z, x.numerator, x.denominator)
            return Fraction(n, d * x.denominator ** self.degree)
        # generic scalar (field element, float, polynomial, ...)
        acc = None
        for c in reversed(self._c):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return 0 * x
        return acc

    def __call__(self, x):
        return self.evaluate(x)

    def derivative(self) -> "RationalPoly":
        return RationalPoly([i * c for i, c in enumerate(self._c)][1:])

    def compose(self, g: "RationalPoly") -> "RationalPoly":
        acc = RationalPoly()
        for c in reversed(self._c):
            acc = acc * g + c
        return acc

    def shift_down(self, k: int) -> "RationalPoly":
        """Exact division by x**k; requires the low k coefficients to vanish."""
        if any(c != 0 for c in self._c[:k]):
            raise ValueError("not divisible by x^k")
        return RationalPoly(self._c[k:])

    # -- division --------------------------------------------------------

    def divmod(self, other: "RationalPoly") -> tuple["RationalPoly", "RationalPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return RationalPoly(), self
        rem = list(self._c)
        dn = other.degree
        blc = other.lc()
        quot = [Fraction(0)] * (len(rem) - dn)
        for i in range(len(rem) - 1, dn - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c / blc
            quot[i - dn] = q
            for j, bc in enumerate(other._c):
                rem[i - dn + j] -= q * bc
        return RationalPoly(quot), RationalPoly(rem[:dn])

    def __floordiv__(self, other: "RationalPoly") -> "RationalPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "RationalPoly") -> "RationalPoly":
        return self.divmod(other)[1]

    def exact_div(self, other: "RationalPoly") -> "RationalPoly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return q

    def monic(self) -> "RationalPoly":
        if self.is_zero:
            return self
        return self / self.lc()

    # -- serialization ---------------------------------------------------

    def to_json(self) -> list[str]:
        return [str(c) for c in self._c]

    @classmethod
    def from_json(cls, data) -> "RationalPoly":
        if not isinstance(data, (list, tuple)):
            raise InputError("polynomial JSON must be a list of rational strings")
        return cls([parse_rational(c) for c in data])


X = RationalPoly([0, 1])


def subst_rational(f: RationalPoly, num: RationalPoly, den: RationalPoly) -> RationalPoly:
    """Numerator of f(num/den): sum of f_i * num**i * den**(d-i), d = deg f.

    The implied denominator is den**d.  Two-sided Horner, exact.
    """
    if f.is_zero:
        return RationalPoly()
    acc = RationalPoly()
    dpow = RationalPoly([1])
    for c in reversed(f.coefficients):
        acc = acc * num + c * dpow
        dpow = dpow * den
    return acc


# -- gcd and squarefree parts ---------------------------------------------


def _pseudo_rem(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    """prem(a,b) = (lc(b)**(deg a - deg b + 1) * a) mod b."""
    k = a.degree - b.degree + 1
    return (b.lc() ** k * a) % b


def poly_gcd(f: RationalPoly, g: RationalPoly) -> RationalPoly:
    """Monic gcd over Q via a primitive PRS (no coefficient explosion)."""
    a, _ = f.primitive_model()
    b, _ = g.primitive_model()
    if a.is_zero:
        return b.monic()
    while not b.is_zero:
        r = _pseudo_rem(a, b)
        a, b = b, r.primitive_model()[0]
    return a.monic()


def poly_xgcd(
    f: RationalPoly, g: RationalPoly
) -> tuple[RationalPoly, RationalPoly, RationalPoly]:
    """(d, u, v) with u*f + v*g = d and d the monic gcd.

    Plain Fraction Euclid; only used on small degrees (field inversion
    against a cubic), where coefficient growth is a non-issue.
    """
    r0, r1 = f, g
    s0, s1 = RationalPoly([1]), RationalPoly()
    t0, t1 = RationalPoly(), RationalPoly([1])
    while not r1.is_zero:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    lcv = r0.lc()
    return r0 / lcv, s0 / lcv, t0 / lcv


def squarefree_part(f: RationalPoly) -> RationalPoly:
    """f divided by gcd(f, f'); same roots, all simple.  gcd is monic so
    the division is exact."""
    if f.degree < 1:
        return f
    g = poly_gcd(f, f.derivative())
    if g.degree < 1:
        return f
    return f.exact_div(g)


def _prim_signed(f: RationalPoly) -> RationalPoly:
    """Primitive integer model of f with the sign of f preserved."""
    g, s = f.primitive_model()
    return g if s > 0 else -g


def _sign_variations(signs: Iterable[int]) -> int:
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


class SturmChain:
    """Sturm chain of a polynomial, for exact real-root counting.

    Content is stripped (sign-preserved) after every remainder step to
    keep coefficients near subresultant size.  For non-squarefree input
    the chain terminates at gcd(f, f'), and counts give *distinct* real
    roots; the terminal element is exposed so callers can deflate.
    """

    def __init__(self, f: RationalPoly):
        if f.is_zero or f.degree < 1:
            raise ValueError("Sturm chain needs a nonconstant polynomial")
        chain = [_prim_signed(f), _prim_signed(f.derivative())]
        while chain[-1].degree > 0:
            rem = chain[-2] % chain[-1]
            if rem.is_zero:
                break
            chain.append(_prim_signed(-rem))
        self.chain = chain
        self._ints = [p._int_model()[0] for p in chain]

    @property
    def repeated_part(self) -> RationalPoly:
        """Monic gcd(f, f'); constant 1 exactly when f is squarefree."""
        tail = self.chain[-1]
        return tail.monic() if tail.degree > 0 else RationalPoly([1])

    def probe(self, x: Fraction) -> tuple[int, int]:
        """(sign variations at x, exact sign of the polynomial at x)."""
        signs = []
        for z in self._ints:
            v = kernels.poly_eval_frac_int(z, x.numerator, x.denominator)
            signs.append((v > 0) - (v < 0))
        return _sign_variations(signs), signs[0]

    def variations(self, x: Fraction) -> int:
        return self.probe(x)[0]

    def variations_at_infinity(self, sign: int) -> int:
        signs = []
        for p in self.chain:
            s = 1 if p.lc() > 0 else -1
            if sign < 0 and p.degree % 2:
                s = -s
            signs.append(s)
        return _sign_variations(signs)

    def count(self, a: Fraction, b: Fraction) -> int:
        """Distinct real roots in (a, b]; endpoints must not be roots of f."""
        return self.variations(a) - self.variations(b)

    def count_all(self) -> int:
        return self.variations_at_infinity(-1) - self.variations_at_infinity(1)


def real_root_count(f: RationalPoly) -> int:
    """Number of distinct real roots of f.  Exact."""
    if f.is_zero:
        raise ValueError("the zero polynomial vanishes everywhere")
    if f.degree < 1:
        return 0
    return SturmChain(f).count_all()


def isolate_real_roots(
    f: RationalPoly,
) -> tuple[RationalPoly, list[Fraction], list[tuple[Fraction, Fraction]]]:
    """Isolate every distinct real root of f, entirely in exact arithmetic.

    Returns (g, exact, intervals): g is the primitive squarefree part of
    f; exact lists the roots landed on by a dyadic probe point (all
    rational); each interval is open, carries a sign change of g, and
    contains exactly one real root, with no root shared between pieces.
    Together exact and the intervals account for all real roots of f.

    For squarefree g the Sturm count V(a) - V(b) of (a, b] stays valid
    when an endpoint is a root of g (the variation drop at a simple root
    happens on arrival), which is what lets probe points hit roots
    without a special subdivision path.  Nothing here involves floating
    point, so the output does not depend on any working precision.
    """
    if f.is_zero:
        raise ValueError("the zero polynomial vanishes everywhere")
    g = _prim_signed(f)
    if g.degree < 1:
        return g, [], []
    chain = SturmChain(g)
    rep = chain.repeated_part
    if rep.degree > 0:
        g = _prim_signed(g.exact_div(rep))
        if g.degree < 1:
            return g, [], []
        chain = SturmChain(g)
    total = chain.count_all()
    if total == 0:
        return g, [], []
    # Fujiwara bound |root| <= 2 max_i |c_{d-i}/c_d|^(1/i), majorized in
    # bitlengths to stay integer-only; vastly tighter than the Cauchy
    # bound when the low coefficients are huge (division polynomials)
    z, _ = g._int_model()
    d = len(z) - 1
    bl = [c.bit_length() for c in z]
    k = 1
    for i in range(1, d + 1):
        if z[d - i]:
            k = max(k, -(-(bl[d - i] - bl[d] + 1) // i))
    b = Fraction(1 << (k + 1))
    exact: list[Fraction] = []
    out: list[tuple[Fraction, Fraction]] = []
    # entries are (lo, hi, V(lo), V(hi), sign g(lo), sign g(hi))
    vlo, slo = chain.probe(-b)
    vhi, shi = chain.probe(b)
    stack = [(-b, b, vlo, vhi, slo, shi)]
    while stack:
        lo, hi, vlo, vhi, slo, shi = stack.pop()
        n = vlo - vhi
        if n == 0:
            continue
        if n == 1:
            if shi == 0:
                exact.append(hi)
            elif slo == 0:
                # lo is a root belonging to the neighbour interval; walk
                # the endpoint inward until it clears the bracket
                step = (hi - lo) / 4
                while True:
                    a = lo + step
                    va, sa = chain.probe(a)
                    if sa != 0 and va - vhi == 1:
                        out.append((a, hi))
                        break
                    step /= 2
            else:
                out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        vmid, smid = chain.probe(mid)
        stack.append((lo, mid, vlo, vmid, slo, smid))
        stack.append((mid, hi, vmid, vhi, smid, shi))
    exact.sort()
    out.sort()
    return g, exact, out


# -- resultants ------------------------------------------------------------


def resultant(f: RationalPoly, g: RationalPoly) -> Fraction:
    """Res(f, g) by a content-stripped pseudo-remainder recursion.

    Degenerate conventions: zero polynomial against anything gives 0;
    two nonzero constants give 1.
    """
    if f.is_zero or g.is_zero:
        return Fraction(0)
    m, n = f.degree, g.degree
    if m == 0 and n == 0:
        return Fraction(1)
    if m == 0:
        return f.lc() ** n
    if n == 0:
        return g.lc() ** m
    fp, sf = f.primitive_model()
    gp, sg = g.primitive_model()
    return sf ** n * sg ** m * _res_prs(fp, gp)


def _res_prs(f: RationalPoly, g: RationalPoly) -> Fraction:
    """Resultant of nonconstant primitive integer polynomials."""
    m, n = f.degree, g.degree
    sign = -1 if (m * n) % 2 else 1
    if m < n:
        return sign * _res_prs(g, f)
    r = _pseudo_rem(f, g)
    if r.is_zero:
        return Fraction(0)
    d = r.degree
    # lc(g)**(m - d - n*(m-n+1)) corrects for the pseudo-division scaling
    factor = sign * g.lc() ** (m - d - n * (m - n + 1))
    if d == 0:
        return factor * r[0] ** n
    rp, c = r.primitive_model()
    return factor * c ** n * _res_prs(g, rp)


def resultant_sylvester(f: RationalPoly, g: RationalPoly) -> Fraction:
    """Res(f, g) as the Sylvester determinant.  Independent oracle route."""
    if f.is_zero or g.is_zero:
        return Fraction(0)
    m, n = f.degree, g.degree
    if m == 0 and n == 0:
        return Fraction(1)
    if m == 0:
        return f.lc() ** n
    if n == 0:
        return g.lc() ** m
    size = m + n
    rows: list[list[Fraction]] = []
    fc = list(reversed(f.coefficients))
    gc = list(reversed(g.coefficients))
    for i in range(n):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (size - n - 1 - i))
    return _det_fraction(rows)


def _det_fraction(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        pv = rows[col][col]
        det *= pv
        for r in range(col + 1, n):
            fac = rows[r][col] / pv
            if fac == 0:
                continue
            rows[r] = [a - fac * b for a, b in zip(rows[r], rows[col])]
    return det


def discriminant(f: RationalPoly) -> Fraction:
    """disc(f) = (-1)**(d(d-1)/2) * Res(f, f') / lc(f)."""
    d = f.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    if d == 1:
        return Fraction(1)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc()


# -- rational roots --------------------------------------------------------


def rational_roots(f: RationalPoly) -> list[Fraction]:
    """All rational roots of f, with multiplicity, sorted ascending.

    Complete without integer factorization: every rational root of the
    primitive integer model z has denominator dividing lc(z), so numeric
    roots rounded against lc(z) enumerate all candidates; candidates are
    then verified in exact arithmetic.
    """
    if f.is_zero:
        raise ValueError("every rational is a root of the zero polynomial")
    roots: list[Fraction] = []
    k = 0
    while f[k] == 0:
        k += 1
    roots.extend([Fraction(0)] * k)
    g = f.shift_down(k)
    if g.degree >= 1:
        distinct = _distinct_rational_roots(g)
        # multiplicity by repeated exact division
        for r in distinct:
            lin = RationalPoly([-r, 1])
            while True:
                q, rem = g.divmod(lin)
                if not rem.is_zero:
                    break
                roots.append(r)
                g = q
    roots.sort()
    return roots


def _distinct_rational_roots(g: RationalPoly) -> list[Fraction]:
    if g.degree == 1:
        return [-g[0] / g[1]]
    if g.degree == 2:
        disc = g[1] * g[1] - 4 * g[2] * g[0]
        s = rational_sqrt(disc)
        if s is None:
            return []
        if s == 0:
            return [-g[1] / (2 * g[2])]
        return [(-g[1] - s) / (2 * g[2]), (-g[1] + s) / (2 * g[2])]
    z, _ = g.primitive_model()
    cands = _root_candidates(z._int_model()[0])
    return sorted(r for r in cands if g.evaluate(r) == 0)


def _root_candidates(z: list[int]) -> set[Fraction]:
    """Candidate rationals covering every rational root of z.

    Rational roots are real, so exact Sturm isolation accounts for all
    of them; a probe point lands on some directly, the rest sit alone in
    an interval whose refined value rounds to p/lc (any rational root of
    z has denominator dividing lc).  The caller verifies each candidate
    exactly, so spurious candidates cost nothing but time.
    """
    g, exact, intervals = isolate_real_roots(RationalPoly(z))
    cands: set[Fraction] = set(exact)
    if not intervals:
        return cands
    zg = [int(c) for c in g.coefficients]
    lc = z[-1]
    lc_bits = abs(lc).bit_length()
    for lo, hi in intervals:
        # precision must cover both lc and the root magnitude for the
        # rounding of x*lc to the nearest integer to be exact
        m = max(abs(lo), abs(hi))
        mag_bits = max(0, m.numerator.bit_length() - m.denominator.bit_length()) + 1
        need_bits = lc_bits + mag_bits + 48
        x, _ = refine_isolated_root(zg, lo, hi, need_bits)
        with mp.workprec(need_bits + 64):
            p = int(mp.nint(x * lc))
        cands.add(Fraction(p, lc))
    return cands


def has_rational_root(f: RationalPoly) -> bool:
    return bool(rational_roots(f)) if not f.is_zero else True


# -- rational functions ----------------------------------------------------


class RatFunc:
    """Quotient of two polynomials over Q, kept in lowest terms, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=RationalPoly([1])):
        num = num if isinstance(num, RationalPoly) else RationalPoly([num])
        den = den if isinstance(den, RationalPoly) else RationalPoly([den])
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        g = poly_gcd(num, den)
        if g.degree >= 1:
            num = num.exact_div(g)
            den = den.exact_div(g)
        s = den.lc()
        self.num = num / s
        self.den = den / s

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, RationalPoly)):
            return self == RatFunc(other if isinstance(other, RationalPoly) else RationalPoly([other]))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den == RationalPoly([1]):
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def _coerce(self, other) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc(RationalPoly([other]))
        if isinstance(other, RationalPoly):
            return RatFunc(other)
        return None

    def __add__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def evaluate(self, x: Scalar) -> Fraction:
        dv = self.den.evaluate(Fraction(x))
        if dv == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num.evaluate(Fraction(x)) / dv

    def __call__(self, x: Scalar) -> Fraction:
        return self.evaluate(x)

    def compose(self, g: "RatFunc") -> "RatFunc":
        """self(g(x)) as an exact rational function."""
        dn, dd = self.num.degree, self.den.degree
        nn = subst_rational(self.num, g.num, g.den)
        nd = subst_rational(self.den, g.num, g.den)
        if dn >= dd:
            nd = nd * g.den ** (dn - dd)
        else:
            nn = nn * g.den ** (dd - dn)
        return RatFunc(nn, nd)
