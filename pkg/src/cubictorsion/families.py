"""Parametrised curve families with prescribed torsion over cubic fields.

Each constructor returns one or more FamilyMember records bundling a
curve over Q, a cubic field attached to the parameter, and the torsion
and field-classification values the construction is supposed to
produce.  The verification layer recomputes all of those independently
and compares; nothing here is trusted.

Coefficient tables are transcribed once, in descending order via _d so
the source visually matches the closed forms they came from.  The test
suite carries a second, independent transcription of every table and
cross-checks them at sampled parameters.

Parameters that violate a precondition (singular fibre, vanishing
denominator, reducible cubic) raise ExcludedParameterError with the
reason; callers surface these as exclusions rather than failures.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import (
    ContractViolationError,
    ExcludedParameterError,
    InputError,
    ReducibleCubicError,
    SingularCurveError,
)
from .numberfields import CubicField, GaloisType
from .polynomials import RationalPoly, isolate_real_roots
from .rationals import parse_rational
from .torsion import TorsionGroup
from .weierstrass import EllipticCurve

LABELS = (
    "F13",
    "F14_ISOG",
    "F14_KUBERT7",
    "F18_CYCLIC",
    "F18_KUBERT9",
    "F2x14",
    "FIXED_49A3",
    "FIXED_49A4",
)


def _d(*coeffs) -> RationalPoly:
    # descending-order entry, matching how the closed forms are written
    return RationalPoly([Fraction(c) for c in reversed(coeffs)])


@dataclass(frozen=True)
class FamilyMember:
    """One fibre of a family: curve, cubic field, and expected outcomes.

    expected_torsion is the torsion subgroup over `field`;
    expected_rational_torsion (when the construction pins it down) is
    the subgroup over Q.  expected_class is the Galois classification
    of `field`.  All pure-cubic candidacies are expected False.
    """

    label: str
    parameter: Optional[Fraction]
    curve: EllipticCurve
    field: CubicField
    expected_torsion: TorsionGroup
    expected_class: GaloisType
    expected_rational_torsion: Optional[TorsionGroup] = None

    def __str__(self) -> str:
        at = "" if self.parameter is None else f" at u={self.parameter}"
        return f"{self.label}{at}: {self.curve}"


def _excluded(label, u, reason) -> ExcludedParameterError:
    return ExcludedParameterError(f"{label} at u={u}: {reason}")


def _field_or_exclude(label, u, cubic: RationalPoly) -> CubicField:
    try:
        return CubicField(cubic)
    except ReducibleCubicError as exc:
        raise _excluded(label, u, f"cubic splits over Q ({exc})") from exc


def _curve_or_exclude(label, u, maker: Callable[[], EllipticCurve]) -> EllipticCurve:
    try:
        return maker()
    except SingularCurveError as exc:
        raise _excluded(label, u, "singular fibre") from exc


# ---------------------------------------------------------------------------
# Z/13 family


_Q13 = _d(1, -1, 5, 1, 1)
_P13_8 = _d(1, -5, 7, -5, 0, 5, 7, 5, 1)
_P13_12 = _d(1, -8, 25, -44, 40, 18, -40, -18, 40, 44, 25, 8, 1)
_P13_8B = _d(1, -5, 15, -29, 16, -3, -9, -3, 1)
_P13_14 = _d(1, -8, 38, -124, 245, -326, 228, 120, 12, 38, -43, -80, -34, -4, 1)
# numerator of the constant term of the squared-generator quadratic
_P13_B0 = _d(1, -4, 7, -10, -2, -1, -2, -1)
_P13_G9 = _d(3, -12, 24, -42, 15, -33, -12, -6, -6, -3)


def f13_coefficients(u) -> tuple[Fraction, Fraction]:
    """Short-model (A, B) of the Z/13 fibre at u.  Raises on excluded u."""
    u = parse_rational(u)
    q = _Q13(u)
    if u == 0 or q == 0:
        raise _excluded("F13", u, "u * q(u) = 0")
    return Fraction(-27) * _P13_8(u) / q, Fraction(54) * (u * u + 1) * _P13_12(u) / q ** 2


def f13_cubic(u) -> RationalPoly:
    """Defining cubic of the field attached to the Z/13 fibre at u."""
    u = parse_rational(u)
    q = _Q13(u)
    if u == 0 or q == 0:
        raise _excluded("F13", u, "u * q(u) = 0")
    a3 = u ** 12 * q ** 2
    a2 = -9 * u ** 8 * (u - 1) ** 2 * q ** 2
    a1 = 27 * u ** 4 * q * _P13_8B(u)
    a0 = -27 * _P13_14(u)
    return RationalPoly([a0, a1, a2, a3])


def family_13(u) -> FamilyMember:
    """Member of the Z/13 family at parameter u.

    The fibre is nonsingular for every u with u*q(u) != 0; the attached
    cubic must be irreducible, otherwise the parameter is excluded.
    """
    u = parse_rational(u)
    a, b = f13_coefficients(u)
    curve = _curve_or_exclude("F13", u, lambda: EllipticCurve.short(a, b))
    field = _field_or_exclude("F13", u, f13_cubic(u))
    return FamilyMember(
        label="F13",
        parameter=u,
        curve=curve,
        field=field,
        expected_torsion=TorsionGroup(1, 13),
        expected_class=GaloisType.CYCLIC,
        expected_rational_torsion=TorsionGroup(1, 1),
    )


def twist13_u(t) -> Fraction:
    """Twisting scalar carrying the t-model to the u-model, t != 0."""
    t = parse_rational(t)
    q = _Q13(t)
    if t == 0 or q == 0:
        raise _excluded("F13", t, "t * q(t) = 0")
    return Fraction(-1, 1) / ((t * t + 1) * q)


def isogeny13_model(t, U) -> EllipticCurve:
    """Quadratic twist by U of the 13-isogeny source curve at t != 0."""
    t = parse_rational(t)
    U = parse_rational(U)
    q = _Q13(t)
    if t == 0 or q == 0:
        raise _excluded("F13", t, "t * q(t) = 0")
    if U == 0:
        raise InputError("twist scalar must be nonzero")
    a = -27 * q * (t * t + 1) ** 2 * _P13_8(t) * U ** 2
    b = -54 * q * (t * t + 1) ** 4 * _P13_12(t) * U ** 3
    return _curve_or_exclude("F13", t, lambda: EllipticCurve.short(a, b))


def isogeny13_cubic(t, U) -> RationalPoly:
    """x-coordinate cubic of the 13-isogeny kernel on the (t, U) model."""
    t = parse_rational(t)
    U = parse_rational(U)
    q = _Q13(t)
    if t == 0 or q == 0:
        raise _excluded("F13", t, "t * q(t) = 0")
    a3 = t ** 12
    a2 = 9 * t ** 8 * (t - 1) ** 2 * (t * t + 1) * q * U
    a1 = 27 * t ** 4 * (t * t + 1) ** 2 * q * _P13_8B(t) * U ** 2
    a0 = 27 * (t * t + 1) ** 3 * q * _P13_14(t) * U ** 3
    return RationalPoly([a0, a1, a2, a3])


def verify_twist13_identity(t) -> bool:
    """Check exactly that the twisted kernel point is defined over Q(alpha).

    With alpha a root of the kernel cubic at (t, 1), the y-coordinate
    beta of the kernel point on the isomorphic model with x scaled by
    t^4 satisfies beta^2 = a2*alpha^2 + a1*alpha + a0, and U(t)*beta^2
    must equal (b1*alpha + b0)^2.  Since {1, alpha, alpha^2} is a
    Q-basis, the square identity reduces to three rational identities;
    those are checked together with the beta^2 expansion itself, which
    is the reduction of x^3 + (A/t^8)x + (B/t^12) modulo the cubic.
    x-scaling by the square t^4 cannot change any K-rationality, so the
    identities certify a 13-torsion point of the U(t)-twist over Q(alpha).
    """
    t = parse_rational(t)
    U = twist13_u(t)
    q = _Q13(t)
    t2 = t * t + 1

    a2 = -9 * t2 * q * (t ** 5 - t ** 4) ** 2 / t ** 12
    a1 = -18 * t2 * q * _P13_G9(t) * (t ** 5 - t ** 4) / t ** 12
    a0 = -9 * t2 * q * _P13_G9(t) ** 2 / t ** 12
    b1 = 3 * (t - 1) / t ** 2
    b0 = 9 * t2 * _P13_B0(t) / t ** 6

    if U * a2 != b1 * b1 or U * a1 != 2 * b1 * b0 or U * a0 != b0 * b0:
        return False

    at1 = -27 * q * t2 ** 2 * _P13_8(t) / t ** 8
    bt1 = -54 * q * t2 ** 4 * _P13_12(t) / t ** 12
    cubic = isogeny13_cubic(t, 1).monic()
    rem = RationalPoly([bt1, at1, 0, 1]) % cubic
    return rem == RationalPoly([a0, a1, a2])


# ---------------------------------------------------------------------------
# Z/14: fixed curves and the degree-2 modular cover


_ZETA7_CUBIC = RationalPoly([-1, -1, 2, 1])


def fixed_14() -> tuple[FamilyMember, FamilyMember]:
    """The two fixed curves acquiring Z/14 over the cubic field of x^3+2x^2-x-1."""
    field = CubicField(_ZETA7_CUBIC)
    m1 = FamilyMember(
        label="FIXED_49A3",
        parameter=None,
        curve=EllipticCurve(1, -1, 0, -107, 552),
        field=field,
        expected_torsion=TorsionGroup(1, 14),
        expected_class=GaloisType.CYCLIC,
        expected_rational_torsion=TorsionGroup(1, 2),
    )
    m2 = FamilyMember(
        label="FIXED_49A4",
        parameter=None,
        curve=EllipticCurve(1, -1, 0, -1822, 30393),
        field=field,
        expected_torsion=TorsionGroup(1, 14),
        expected_class=GaloisType.CYCLIC,
        expected_rational_torsion=TorsionGroup(1, 2),
    )
    return m1, m2


def modular14_models() -> tuple[Callable, Callable]:
    """Exact evaluators of the two plane models of the degree-2 cover.

    Returns (on_cover, on_base); each maps a point's coordinates to the
    value of the defining equation, zero iff the point lies on the model.
    Coordinates may be rationals or elements of one cubic field.
    """

    def on_cover(x, y):
        return y * y + (x * x + x) * y + x

    def on_base(u, v):
        return v * v + (u + 3) * v + u * u * u + 6 * u + 8

    return on_cover, on_base


def eval_phi(x, y):
    """Push a point of the cover down to the base model.

    Input must satisfy the cover equation with x*y != 0; the output is
    checked against the base equation and returned as (u, v).
    """
    on_cover, on_base = modular14_models()
    if on_cover(x, y) != 0:
        raise InputError("point does not satisfy the cover equation")
    if x == 0 or y == 0:
        raise InputError("map undefined where x*y = 0")
    u = (-1 - y + y * y * y) / (y * y)
    v = (-1 - x * x - x * x * x - y - y * y * y - 3 * x * y - x * y * y) / (x * y)
    if on_base(u, v) != 0:
        raise ContractViolationError("image does not satisfy the base equation")
    return u, v


# ---------------------------------------------------------------------------
# Z/14 Kubert family (rational 7-torsion)


_DEL7_CUBIC = _d(1, -8, 5, 1)
_K7_Q3 = _d(1, -1, 1)
_K7_P6 = _d(1, -11, 30, -15, -10, 5, 1)
_K7_P12 = _d(1, -18, 117, -354, 570, -486, 273, -222, 174, -46, -15, 6, 1)


def kubert7_discriminant(u) -> Fraction:
    u = parse_rational(u)
    return u ** 7 * (u - 1) ** 7 * _DEL7_CUBIC(u)


def kubert7_cubic(u) -> RationalPoly:
    """Monic cubic whose root generates the field of the Z/14 fibre."""
    u = parse_rational(u)
    c1 = -Fraction(1, 3) * _K7_Q3(u) * _K7_P6(u)
    c0 = Fraction(2, 27) * _K7_P12(u)
    return RationalPoly([c0, c1, 0, 1])


def family_14_kubert(u) -> FamilyMember:
    """Member of the Z/14 family with rational 7-torsion at parameter u."""
    u = parse_rational(u)
    delta = kubert7_discriminant(u)
    if delta == 0:
        raise _excluded("F14_KUBERT7", u, "singular fibre (u*(u-1)*cubic = 0)")
    a1 = -(u * u - u - 1)
    a23 = -(u ** 3 - u ** 2)
    curve = _curve_or_exclude(
        "F14_KUBERT7", u, lambda: EllipticCurve(a1, a23, a23, 0, 0)
    )
    field = _field_or_exclude("F14_KUBERT7", u, kubert7_cubic(u))
    cls = GaloisType.COMPLEX if delta < 0 else GaloisType.TOTALLY_REAL_NON_GALOIS
    return FamilyMember(
        label="F14_KUBERT7",
        parameter=u,
        curve=curve,
        field=field,
        expected_torsion=TorsionGroup(1, 14),
        expected_class=cls,
        expected_rational_torsion=TorsionGroup(1, 7),
    )


# ---------------------------------------------------------------------------
# Z/18: 9-isogeny source, rational 3-torsion slice, and the two families


_I9_P3 = _d(9, 27, 27, 1)
_I9_P6 = _d(27, 162, 405, 504, 297, 54, -1)


def isogeny9_model(t, U) -> EllipticCurve:
    """Quadratic twist by U of the 9-isogeny source curve at t."""
    t = parse_rational(t)
    U = parse_rational(U)
    if U == 0:
        raise InputError("twist scalar must be nonzero")
    a = -2187 * (t + 1) ** 3 * _I9_P3(t) * U ** 2
    b = -39366 * (t + 1) ** 3 * _I9_P6(t) * U ** 3
    return _curve_or_exclude("F18", t, lambda: EllipticCurve.short(a, b))


def three_torsion_linear_factor(t) -> RationalPoly:
    """Rational linear factor of the 3-division values on the U = 1 model."""
    t = parse_rational(t)
    return RationalPoly([81 * (t + 1) ** 3, 1])


def curve_with_rational_3torsion(s) -> EllipticCurve:
    """The twisted model with a rational 3-torsion point, s != -1."""
    s = parse_rational(s)
    if s == -1:
        raise _excluded("F18", s, "twist scalar vanishes at s = -1")
    a = -3 * (s + 1) * _I9_P3(s)
    b = 2 * _I9_P6(s)
    return _curve_or_exclude("F18", s, lambda: EllipticCurve.short(a, b))


_F18_C2 = _d(-9, -30, -33)
_F18_C1 = _d(27, 180, 450, 516, 219)
_F18_C0 = _d(-27, -270, -1053, -2196, -2565, -1566, -323)


def cubic_factor_F(s) -> RationalPoly:
    """Cubic factor of the 9-division polynomial on the 3-torsion model."""
    s = parse_rational(s)
    return RationalPoly([_F18_C0(s), _F18_C1(s), _F18_C2(s), 1])


_C18_A3 = _d(1, -3, 3, -3)
_C18_A9 = _d(1, -9, 36, -90, 162, -216, 192, -90, 9, -3)
_C18_B6 = _d(1, -6, 15, -24, 27, -18, -3)
_C18_B12 = _d(1, -12, 66, -228, 567, -1080, 1596, -1800, 1503, -900, 378, -108, 9)
_C18_K6 = _d(1, -6, 19, -40, 63, -66, 33)
_C18_K9 = _d(1, -9, 44, -146, 354, -648, 912, -954, 657, -219)
_C18_K18 = _d(
    -1, 18, -165, 1020, -4716, 17172, -50904, 125820, -263358, 470376,
    -718146, 934740, -1028268, 939276, -693360, 399924, -173097, 52326, -8721,
)


def f18_cyclic_coefficients(u) -> tuple[Fraction, Fraction]:
    u = parse_rational(u)
    if u == 1:
        raise _excluded("F18_CYCLIC", u, "denominator (u-1) vanishes")
    return Fraction(-27) * _C18_A3(u) * _C18_A9(u), Fraction(54) * _C18_B6(u) * _C18_B12(u)


def f18_cyclic_cubic(u) -> RationalPoly:
    u = parse_rational(u)
    if u == 1:
        raise _excluded("F18_CYCLIC", u, "denominator (u-1) vanishes")
    a3 = 27 * (u - 1) ** 6
    a2 = -27 * (u - 1) ** 4 * _C18_K6(u)
    a1 = 9 * (u - 1) ** 2 * _C18_A3(u) * _C18_K9(u)
    a0 = _C18_K18(u)
    return RationalPoly([a0, a1, a2, a3])


def f18_parameter_map(u) -> Fraction:
    """s-parameter of the 3-torsion slice hit by the cyclic family at u."""
    u = parse_rational(u)
    if u == 1:
        raise _excluded("F18_CYCLIC", u, "denominator (u-1) vanishes")
    return (u ** 3 - 3 * u ** 2) / (3 * u - 3)


def family_18_cyclic(u) -> FamilyMember:
    """Member of the Z/18 family with cyclic field at parameter u != 1."""
    u = parse_rational(u)
    a, b = f18_cyclic_coefficients(u)
    s = f18_parameter_map(u)
    if s == -1:
        raise _excluded("F18_CYCLIC", u, "maps to the excluded slice s = -1")
    curve = _curve_or_exclude("F18_CYCLIC", u, lambda: EllipticCurve.short(a, b))
    field = _field_or_exclude("F18_CYCLIC", u, f18_cyclic_cubic(u))
    return FamilyMember(
        label="F18_CYCLIC",
        parameter=u,
        curve=curve,
        field=field,
        expected_torsion=TorsionGroup(1, 18),
        expected_class=GaloisType.CYCLIC,
        expected_rational_torsion=TorsionGroup(1, 6),
    )


_DEL9_CUBIC = _d(1, -6, 3, 1)
_K9_Q2 = _d(1, -1, 1)
_K9_D3 = _d(1, -3, 0, 1)
_K9_D9 = _d(1, -9, 27, -48, 54, -45, 27, -9, 0, 1)
_K9_D18 = _d(
    1, -18, 135, -570, 1557, -2970, 4128, -4230, 3240, -2032,
    1359, -1080, 735, -306, 27, 42, -18, 0, 1,
)


def kubert9_discriminant(u) -> Fraction:
    u = parse_rational(u)
    return u ** 9 * (u - 1) ** 9 * _K9_Q2(u) ** 3 * _DEL9_CUBIC(u)


def kubert9_cubic(u) -> RationalPoly:
    """Monic cubic whose root generates the field of the Z/18 Kubert fibre."""
    u = parse_rational(u)
    c1 = -Fraction(1, 3) * _K9_D3(u) * _K9_D9(u)
    c0 = Fraction(2, 27) * _K9_D18(u)
    return RationalPoly([c0, c1, 0, 1])


def family_18_kubert9(u) -> FamilyMember:
    """Member of the Z/18 family with rational 9-torsion at parameter u."""
    u = parse_rational(u)
    delta = kubert9_discriminant(u)
    if delta == 0:
        raise _excluded("F18_KUBERT9", u, "singular fibre")
    a1 = -(u ** 3 - u ** 2 - 1)
    a23 = -(u ** 2 * (u - 1) * _K9_Q2(u))
    curve = _curve_or_exclude(
        "F18_KUBERT9", u, lambda: EllipticCurve(a1, a23, a23, 0, 0)
    )
    field = _field_or_exclude("F18_KUBERT9", u, kubert9_cubic(u))
    cls = GaloisType.COMPLEX if delta < 0 else GaloisType.TOTALLY_REAL_NON_GALOIS
    return FamilyMember(
        label="F18_KUBERT9",
        parameter=u,
        curve=curve,
        field=field,
        expected_torsion=TorsionGroup(1, 18),
        expected_class=cls,
        expected_rational_torsion=TorsionGroup(1, 9),
    )


# ---------------------------------------------------------------------------
# Z/2 x Z/14 family


_M14_Q6 = _d(1, 4, 13, -40, 19, 36, 31)
_M14_AN = _d(1, 4, -10, -68, 3, 552, 4, -2568, 2103, 1684, 1958, 396, 37)
_M14_BN = _d(
    1, 8, 12, -120, -518, 504, 5068, 568, -24009, -15024, 62936, 183120,
    -550452, -851984, 4384056, -3808912, 1467519, -4083672, 3590300,
    5512360, 6945498, 2943128, 893052, 120024, 3753,
)
_M14_L6A = _d(1, 2, 15, -20, 15, 18, 33)
_M14_L6B = _d(1, 2, 3, -20, 39, 18, 21)
_M14_C3 = _d(1, 2, -9, -2)


def family_2x14_cubic(u) -> RationalPoly:
    """Defining cubic (integral model) of the field at parameter u."""
    u = parse_rational(u)
    if u * u == 1:
        raise _excluded("F2x14", u, "leading coefficient (u^2-1) vanishes")
    c = _M14_C3(u)
    return RationalPoly([-c, -9 * (u * u - 1), c, u * u - 1])


def family_2x14_short(u) -> EllipticCurve:
    """Short model of the Z/2 x Z/14 fibre at u."""
    u = parse_rational(u)
    q6 = _M14_Q6(u)
    if u * u == 1 or q6 == 0:
        raise _excluded("F2x14", u, "(u^2-1) * q6(u) = 0")
    w = (u * u + 3) ** 3 * q6
    a = -_M14_AN(u) / (48 * w)
    b = _M14_BN(u) / (864 * w * w)
    return _curve_or_exclude("F2x14", u, lambda: EllipticCurve.short(a, b))


def family_2x14_long(u) -> EllipticCurve:
    """Long model of the Z/2 x Z/14 fibre at u (the one with a1 = 1)."""
    u = parse_rational(u)
    q6 = _M14_Q6(u)
    if u * u == 1 or q6 == 0:
        raise _excluded("F2x14", u, "(u^2-1) * q6(u) = 0")
    w3 = (u * u + 3) ** 3
    sq = (u - 1) ** 2 * (u + 1) ** 2
    a2 = -4 * _M14_L6A(u) * sq / (w3 * q6)
    a4 = 64 * _M14_L6B(u) * sq ** 3 / (w3 ** 2 * q6 ** 2)
    a6 = 4096 * sq ** 6 / (w3 ** 3 * q6 ** 3)
    return _curve_or_exclude("F2x14", u, lambda: EllipticCurve(1, a2, 0, a4, a6))


def family_2x14(u) -> FamilyMember:
    """Member of the Z/2 x Z/14 family at parameter u."""
    u = parse_rational(u)
    curve = family_2x14_long(u)
    field = _field_or_exclude("F2x14", u, family_2x14_cubic(u))
    return FamilyMember(
        label="F2x14",
        parameter=u,
        curve=curve,
        field=field,
        expected_torsion=TorsionGroup(2, 14),
        expected_class=GaloisType.CYCLIC,
    )


# ---------------------------------------------------------------------------
# Interval classification for the Kubert families


@dataclass(frozen=True)
class IntervalClass:
    """Sign chart of a discriminant in one parameter.

    The defining cubic has three real roots r1 < 0 < r2 < 1 < r3; the
    fibre field is complex exactly when the full discriminant is
    negative.  Membership queries are decided by exact sign evaluation;
    the stored roots are display-only floats refined from certified
    isolating intervals.
    """

    label: str
    cubic: RationalPoly
    roots: tuple[float, float, float]
    _delta: Callable[[Fraction], Fraction]

    def side(self, u) -> str:
        """"I" where the fibre field is complex, "J" where totally real."""
        u = parse_rational(u)
        d = self._delta(u)
        if d == 0:
            raise _excluded(self.label, u, "singular fibre")
        return "I" if d < 0 else "J"


def _interval_roots(cubic: RationalPoly) -> tuple[float, float, float]:
    from .numerics import refine_isolated_root

    g, exact, intervals = isolate_real_roots(cubic)
    vals = [float(r) for r in exact]
    z = [int(c) for c in g.coefficients]
    for lo, hi in intervals:
        x, _ = refine_isolated_root(z, lo, hi, 64)
        vals.append(float(x))
    if len(vals) != 3:
        raise ContractViolationError("expected three real roots")
    return tuple(sorted(vals))


def interval_class(label: str) -> IntervalClass:
    """Interval data for F14_KUBERT7 or F18_KUBERT9."""
    if label == "F14_KUBERT7":
        cubic, delta = _DEL7_CUBIC, kubert7_discriminant
    elif label == "F18_KUBERT9":
        cubic, delta = _DEL9_CUBIC, kubert9_discriminant
    else:
        raise InputError(f"no interval classification for {label!r}")
    # root layout r1 < 0 < r2 < 1 < r3: exact sign checks at 0 and 1
    if not (cubic(Fraction(0)) > 0 and cubic(Fraction(1)) < 0):
        raise ContractViolationError("sign chart broken at 0 or 1")
    return IntervalClass(label, cubic, _interval_roots(cubic), delta)


# ---------------------------------------------------------------------------
# Dispatch


_PARAMETRIC = {
    "F13": family_13,
    "F14_KUBERT7": family_14_kubert,
    "F18_CYCLIC": family_18_cyclic,
    "F18_KUBERT9": family_18_kubert9,
    "F2x14": family_2x14,
}


def make_members(label: str, parameter=None) -> tuple[FamilyMember, ...]:
    """Build the member(s) for a label; parametric labels need a parameter."""
    if label in _PARAMETRIC:
        if parameter is None:
            raise InputError(f"{label} needs a parameter")
        return (_PARAMETRIC[label](parameter),)
    if label in ("FIXED_49A3", "FIXED_49A4"):
        if parameter is not None:
            raise InputError(f"{label} takes no parameter")
        m1, m2 = fixed_14()
        return (m1,) if label == "FIXED_49A3" else (m2,)
    if label == "F14_ISOG":
        raise InputError("F14_ISOG has no standalone member; see fixed_14()")
    raise InputError(f"unknown family label {label!r}")
