"""Weierstrass models and their group law over Q or a cubic field.

Scalars are Fractions over Q and FieldElements over a cubic field; the
formulas are written generically and dispatch through the shared
arithmetic dunders.  Everything is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

import math

from .errors import InputError, SingularCurveError
from .numberfields import (
    CubicField,
    FieldElement,
    FieldLike,
    QQ,
    RationalField,
    nth_root_in_field,
    sqrt_in_field,
)
from .rationals import parse_rational, rational_nth_root, rational_sqrt

Scalar = Union[Fraction, FieldElement]


def coerce_scalar(field: FieldLike, x) -> Scalar:
    """Coerce x into the scalar type of the given base field."""
    if isinstance(field, RationalField):
        if isinstance(x, FieldElement):
            raise InputError("cannot coerce a cubic field element into Q")
        return parse_rational(x)
    if isinstance(x, (tuple, list)) and not isinstance(x, str):
        return field(tuple(x))
    return field(x)


def scalar_is_zero(x: Scalar) -> bool:
    return not x


def scalar_to_json(x: Scalar):
    if isinstance(x, FieldElement):
        return x.to_json()
    return str(x)


class EllipticCurve:
    """A long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    __slots__ = ("field", "a1", "a2", "a3", "a4", "a6", "_invariants")

    def __init__(self, a1, a2, a3, a4, a6, field: FieldLike = QQ):
        self.field = field
        self.a1 = coerce_scalar(field, a1)
        self.a2 = coerce_scalar(field, a2)
        self.a3 = coerce_scalar(field, a3)
        self.a4 = coerce_scalar(field, a4)
        self.a6 = coerce_scalar(field, a6)
        self._invariants: dict | None = None
        if scalar_is_zero(self.discriminant):
            raise SingularCurveError(f"discriminant is zero: {self}")

    @classmethod
    def short(cls, a, b, field: FieldLike = QQ) -> "EllipticCurve":
        return cls(0, 0, 0, a, b, field=field)

    # -- invariants ------------------------------------------------------

    def _inv(self) -> dict:
        if self._invariants is None:
            a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
            b2 = a1 * a1 + 4 * a2
            b4 = 2 * a4 + a1 * a3
            b6 = a3 * a3 + 4 * a6
            b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
            c4 = b2 * b2 - 24 * b4
            c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6
            disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6
            # standard consistency identities; violation means a typo above
            if 4 * b8 != b2 * b6 - b4 * b4 or 1728 * disc != c4 * c4 * c4 - c6 * c6:
                raise AssertionError("b/c invariant identities failed")
            self._invariants = {
                "b2": b2, "b4": b4, "b6": b6, "b8": b8,
                "c4": c4, "c6": c6, "disc": disc,
            }
        return self._invariants

    @property
    def b2(self) -> Scalar:
        return self._inv()["b2"]

    @property
    def b4(self) -> Scalar:
        return self._inv()["b4"]

    @property
    def b6(self) -> Scalar:
        return self._inv()["b6"]

    @property
    def b8(self) -> Scalar:
        return self._inv()["b8"]

    @property
    def c4(self) -> Scalar:
        return self._inv()["c4"]

    @property
    def c6(self) -> Scalar:
        return self._inv()["c6"]

    @property
    def discriminant(self) -> Scalar:
        return self._inv()["disc"]

    @property
    def j_invariant(self) -> Scalar:
        c4 = self.c4
        return c4 * c4 * c4 / self.discriminant

    @property
    def is_short(self) -> bool:
        return (
            scalar_is_zero(self.a1)
            and scalar_is_zero(self.a2)
            and scalar_is_zero(self.a3)
        )

    def a_invariants(self) -> tuple:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    # -- identity --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EllipticCurve):
            return self.field == other.field and self.a_invariants() == other.a_invariants()
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.a_invariants()))

    def __repr__(self) -> str:
        return f"EllipticCurve(a={self.a_invariants()}, field={self.field!r})"

    def __str__(self) -> str:
        lhs = ["y^2"]
        if not scalar_is_zero(self.a1):
            lhs.append(f"({self.a1})*xy")
        if not scalar_is_zero(self.a3):
            lhs.append(f"({self.a3})*y")
        rhs = ["x^3"]
        for label, c in (("x^2", self.a2), ("x", self.a4), ("", self.a6)):
            if not scalar_is_zero(c):
                rhs.append(f"({c})*{label}" if label else f"({c})")
        return " + ".join(lhs) + " = " + " + ".join(rhs)

    def to_json(self) -> dict:
        base = "Q" if isinstance(self.field, RationalField) else self.field.to_json()
        return {"base": base, "a": [scalar_to_json(a) for a in self.a_invariants()]}

    @classmethod
    def from_json(cls, data) -> "EllipticCurve":
        if not isinstance(data, dict) or "a" not in data:
            raise InputError('curve JSON must have "base" and "a"')
        raw = data["a"]
        if len(raw) != 5:
            raise InputError('"a" must list [a1, a2, a3, a4, a6]')
        fs = data.get("base", "Q")
        field: FieldLike = QQ if fs == "Q" else CubicField.from_json(fs)
        return cls(*raw, field=field)

    # -- points ----------------------------------------------------------

    def infinity(self) -> "CurvePoint":
        return CurvePoint(self, None, None)

    def point(self, x, y) -> "CurvePoint":
        x = coerce_scalar(self.field, x)
        y = coerce_scalar(self.field, y)
        if not self.contains(x, y):
            raise InputError(f"({x}, {y}) is not on {self}")
        return CurvePoint(self, x, y)

    def contains(self, x, y) -> bool:
        x = coerce_scalar(self.field, x)
        y = coerce_scalar(self.field, y)
        lhs = y * y + self.a1 * x * y + self.a3 * y
        rhs = ((x + self.a2) * x + self.a4) * x + self.a6
        return lhs == rhs

    # -- group law -------------------------------------------------------

    def neg(self, p: "CurvePoint") -> "CurvePoint":
        if p.is_infinity:
            return p
        return CurvePoint(self, p.x, -p.y - self.a1 * p.x - self.a3)

    def add(self, p: "CurvePoint", q: "CurvePoint") -> "CurvePoint":
        if p.curve != self or q.curve != self:
            raise InputError("points on a different curve")
        if p.is_infinity:
            return q
        if q.is_infinity:
            return p
        a1, a2, a3, a4 = self.a1, self.a2, self.a3, self.a4
        x1, y1, x2, y2 = p.x, p.y, q.x, q.y
        if x1 == x2:
            if y2 == -y1 - a1 * x1 - a3:
                return self.infinity()
            den = 2 * y1 + a1 * x1 + a3
            lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / den
        else:
            lam = (y2 - y1) / (x2 - x1)
        nu = y1 - lam * x1
        x3 = lam * lam + a1 * lam - a2 - x1 - x2
        y3 = -(lam + a1) * x3 - nu - a3
        return CurvePoint(self, x3, y3)

    def mul(self, n: int, p: "CurvePoint") -> "CurvePoint":
        if n < 0:
            return self.mul(-n, self.neg(p))
        acc = self.infinity()
        base = p
        while n:
            if n & 1:
                acc = self.add(acc, base)
            if n > 1:
                base = self.add(base, base)
            n >>= 1
        return acc

    # -- model changes ---------------------------------------------------

    def transform(self, tr: "Transformation") -> "EllipticCurve":
        return tr.push_curve(self)

    def to_short(self) -> tuple["EllipticCurve", "Transformation"]:
        """Short model y^2 = x^3 + Ax + B with A = -c4/48, B = -c6/864,
        together with the transformation that maps points onto it."""
        one = coerce_scalar(self.field, 1)
        s = -self.a1 / 2
        r = -self.b2 / 12
        t = -(self.a3 + r * self.a1) / 2
        tr = Transformation(one, r, s, t, field=self.field)
        return tr.push_curve(self), tr

    def quadratic_twist(self, d) -> "EllipticCurve":
        """Twist of a short model by d: y^2 = x^3 + d^2 A x + d^3 B."""
        if not self.is_short:
            raise InputError("quadratic_twist expects a short model; use to_short first")
        d = coerce_scalar(self.field, d)
        if scalar_is_zero(d):
            raise InputError("twist parameter must be nonzero")
        return EllipticCurve.short(d * d * self.a4, d * d * d * self.a6, field=self.field)

    def base_change(self, field: CubicField) -> "EllipticCurve":
        """The same rational model viewed over a cubic field."""
        if not isinstance(self.field, RationalField):
            raise InputError("base_change starts from a curve over Q")
        return EllipticCurve(*self.a_invariants(), field=field)


class CurvePoint:
    """A point on an EllipticCurve; (None, None) encodes the origin."""

    __slots__ = ("curve", "x", "y")

    def __init__(self, curve: EllipticCurve, x, y):
        self.curve = curve
        self.x = x
        self.y = y

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CurvePoint):
            return self.curve == other.curve and self.x == other.x and self.y == other.y
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.curve, self.x, self.y))

    def __repr__(self) -> str:
        if self.is_infinity:
            return "CurvePoint(infinity)"
        return f"CurvePoint({self.x}, {self.y})"

    def __add__(self, other: "CurvePoint") -> "CurvePoint":
        return self.curve.add(self, other)

    def __neg__(self) -> "CurvePoint":
        return self.curve.neg(self)

    def __sub__(self, other: "CurvePoint") -> "CurvePoint":
        return self.curve.add(self, self.curve.neg(other))

    def __rmul__(self, n: int) -> "CurvePoint":
        if not isinstance(n, int):
            return NotImplemented
        return self.curve.mul(n, self)

    def order(self, bound: int = 30) -> int:
        """Order of a torsion point, certified by repeated addition.

        Raises ValueError if the point does not die within the bound (it
        is then presumably non-torsion).
        """
        if self.is_infinity:
            return 1
        acc = self
        n = 1
        while not acc.is_infinity:
            acc = self.curve.add(acc, self)
            n += 1
            if n > bound:
                raise ValueError(f"point order exceeds {bound}")
        return n

    def to_json(self):
        if self.is_infinity:
            return "infinity"
        return {"x": scalar_to_json(self.x), "y": scalar_to_json(self.y)}


class Transformation:
    """Weierstrass change of variables x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.

    push_* maps objects from the source model to the primed model;
    pull_point goes the other way.
    """

    __slots__ = ("field", "u", "r", "s", "t")

    def __init__(self, u, r=0, s=0, t=0, field: FieldLike = QQ):
        self.field = field
        self.u = coerce_scalar(field, u)
        self.r = coerce_scalar(field, r)
        self.s = coerce_scalar(field, s)
        self.t = coerce_scalar(field, t)
        if scalar_is_zero(self.u):
            raise InputError("transformation scale u must be nonzero")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Transformation):
            return (self.field, self.u, self.r, self.s, self.t) == (
                other.field, other.u, other.r, other.s, other.t
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.u, self.r, self.s, self.t))

    def __repr__(self) -> str:
        return f"Transformation(u={self.u}, r={self.r}, s={self.s}, t={self.t})"

    @property
    def is_identity(self) -> bool:
        return (
            self.u == 1
            and scalar_is_zero(self.r)
            and scalar_is_zero(self.s)
            and scalar_is_zero(self.t)
        )

    def push_curve(self, e: EllipticCurve) -> EllipticCurve:
        u, r, s, t = self.u, self.r, self.s, self.t
        a1, a2, a3, a4, a6 = e.a1, e.a2, e.a3, e.a4, e.a6
        u2 = u * u
        u3 = u2 * u
        b1 = (a1 + 2 * s) / u
        b2 = (a2 - s * a1 + 3 * r - s * s) / u2
        b3 = (a3 + r * a1 + 2 * t) / u3
        b4 = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / (u2 * u2)
        b6 = (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / (u3 * u3)
        return EllipticCurve(b1, b2, b3, b4, b6, field=e.field)

    def push_point(self, p: CurvePoint) -> CurvePoint:
        e2 = self.push_curve(p.curve)
        if p.is_infinity:
            return e2.infinity()
        u, r, s, t = self.u, self.r, self.s, self.t
        xq = (p.x - r) / (u * u)
        yq = (p.y - s * (p.x - r) - t) / (u * u * u)
        return e2.point(xq, yq)

    def pull_point(self, p: CurvePoint, source: EllipticCurve) -> CurvePoint:
        if p.is_infinity:
            return source.infinity()
        u, r, s, t = self.u, self.r, self.s, self.t
        x = u * u * p.x + r
        y = u * u * u * p.y + s * u * u * p.x + t
        return source.point(x, y)

    def then(self, other: "Transformation") -> "Transformation":
        """Composite: apply self first, then other."""
        u1, r1, s1, t1 = self.u, self.r, self.s, self.t
        u2, r2, s2, t2 = other.u, other.r, other.s, other.t
        return Transformation(
            u1 * u2,
            u1 * u1 * r2 + r1,
            u1 * s2 + s1,
            u1 * u1 * u1 * t2 + s1 * u1 * u1 * r2 + t1,
            field=self.field,
        )

    def inverse(self) -> "Transformation":
        u, r, s, t = self.u, self.r, self.s, self.t
        u2 = u * u
        u3 = u2 * u
        return Transformation(
            1 / u, -r / u2, -s / u, (r * s - t) / u3, field=self.field
        )


def _scale_candidates(field: FieldLike, a1, b1, a2, b2) -> list:
    """Possible u with a1/u^4 == a2 and b1/u^6 == b2, for short models of
    equal j-invariant.  May contain duplicates or near-misses; the caller
    verifies exactly."""
    rational = isinstance(field, RationalField)
    if not scalar_is_zero(a1) and not scalar_is_zero(b1):
        w = (b1 * a2) / (b2 * a1)  # u^2
        if rational:
            r = rational_sqrt(w)
            return [] if r is None else [r]
        r = sqrt_in_field(w)
        return [] if r is None else [r]
    if scalar_is_zero(b1):
        # j = 1728: u^4 = a1/a2
        w = a1 / a2
        if rational:
            r2 = rational_sqrt(w)
            if r2 is None:
                return []
            r = rational_sqrt(r2)
            return [] if r is None else [r]
        s = sqrt_in_field(w)
        if s is None:
            return []
        out = [sqrt_in_field(s), sqrt_in_field(-s)]
        return [u for u in out if u is not None]
    # j = 0: u^6 = b1/b2
    w = b1 / b2
    if rational:
        c = rational_sqrt(w)
        if c is None:
            return []
        r = rational_nth_root(c, 3)
        return [] if r is None else [r]
    c = sqrt_in_field(w)
    if c is None:
        return []
    return nth_root_in_field(c, 3) + nth_root_in_field(-c, 3)


def is_isomorphic_over(e1: EllipticCurve, e2: EllipticCurve) -> Transformation | None:
    """A transformation carrying e1 onto e2 over their common base field,
    or None when the curves are not isomorphic over it.

    A returned witness is verified exactly before being handed back.
    """
    if e1.field != e2.field:
        raise InputError("curves live over different fields")
    if e1.j_invariant != e2.j_invariant:
        return None
    s1, t1 = e1.to_short()
    s2, t2 = e2.to_short()
    for u in _scale_candidates(e1.field, s1.a4, s1.a6, s2.a4, s2.a6):
        tr = Transformation(u, field=e1.field)
        if tr.push_curve(s1) == s2:
            total = t1.then(tr).then(t2.inverse())
            if total.push_curve(e1) != e2:
                raise AssertionError("composed witness failed exact verification")
            return total
    return None


def short_model_reduce(e: EllipticCurve) -> tuple[EllipticCurve, "Transformation"]:
    """Rescale a short rational model to integral coefficients with small
    prime power content removed.  Keeps division polynomial coefficients
    manageable for parametric families with large denominators.
    """
    if not e.is_short:
        raise InputError("short_model_reduce expects a short model")
    if not isinstance(e.field, RationalField):
        return e, Transformation(1, field=e.field)
    a, b = e.a4, e.a6
    d = math.lcm(a.denominator, b.denominator)
    af, bf = a * d ** 4, b * d ** 6
    if af.denominator != 1 or bf.denominator != 1:
        raise AssertionError("denominator clearing failed")
    an, bn = af.numerator, bf.numerator
    strip = 1
    p = 2
    while p <= 10000:
        while True:
            if an == 0:
                ok = bn % p ** 6 == 0
            elif bn == 0:
                ok = an % p ** 4 == 0
            else:
                ok = an % p ** 4 == 0 and bn % p ** 6 == 0
            if not ok:
                break
            an //= p ** 4
            bn //= p ** 6
            strip *= p
        p = 3 if p == 2 else p + 2
    u = Fraction(strip, d)
    tr = Transformation(u, field=e.field)
    reduced = tr.push_curve(e)
    if reduced.a4 != an or reduced.a6 != bn:
        raise AssertionError("reduction bookkeeping failed")
    return reduced, tr
