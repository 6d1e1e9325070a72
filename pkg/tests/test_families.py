from fractions import Fraction

import pytest

from cubictorsion.errors import ExcludedParameterError, InputError
from cubictorsion.families import (
    LABELS,
    cubic_factor_F,
    curve_with_rational_3torsion,
    eval_phi,
    f13_coefficients,
    f13_cubic,
    f18_cyclic_coefficients,
    f18_cyclic_cubic,
    f18_parameter_map,
    family_13,
    family_14_kubert,
    family_18_cyclic,
    family_18_kubert9,
    family_2x14,
    family_2x14_cubic,
    family_2x14_long,
    family_2x14_short,
    fixed_14,
    interval_class,
    isogeny9_model,
    isogeny13_cubic,
    isogeny13_model,
    kubert7_cubic,
    kubert7_discriminant,
    kubert9_cubic,
    kubert9_discriminant,
    make_members,
    modular14_models,
    three_torsion_linear_factor,
    twist13_u,
)
from cubictorsion.numberfields import CubicField, GaloisType
from cubictorsion.polynomials import X, RationalPoly
from cubictorsion.torsion import TorsionGroup, division_polynomial
from cubictorsion.weierstrass import EllipticCurve, is_isomorphic_over

import cubictorsion.families as fam

F = Fraction

# Parameters used across the sampled identity checks.  Mixed signs and a
# non-integer to exercise denominator handling.
SAMPLES = [F(2), F(3), F(-1), F(1, 2), F(-5, 3)]


def is_rational_square(x) -> bool:
    x = Fraction(x)
    if x < 0:
        return False
    import math

    p, q = x.numerator, x.denominator
    return math.isqrt(p) ** 2 == p and math.isqrt(q) ** 2 == q


def cubic_disc(p: RationalPoly) -> Fraction:
    """Discriminant of a degree-3 polynomial from its coefficients."""
    assert p.degree == 3
    d, c, b, a = p.coefficients
    return (
        18 * a * b * c * d
        - 4 * b**3 * d
        + b**2 * c**2
        - 4 * a * c**3
        - 27 * a**2 * d**2
    )


# -- second transcriptions ---------------------------------------------------
#
# Every coefficient table in the families module is retyped here as an
# expanded polynomial expression, term by term in descending order.  The
# module stores the same data as coefficient lists, so a transcription slip
# has to be made identically twice, in two different encodings, to get
# through this file unnoticed.


def test_transcription_f13_tables():
    q = X**4 - X**3 + 5 * X**2 + X + 1
    p8 = X**8 - 5 * X**7 + 7 * X**6 - 5 * X**5 + 5 * X**3 + 7 * X**2 + 5 * X + 1
    p12 = (
        X**12 - 8 * X**11 + 25 * X**10 - 44 * X**9 + 40 * X**8 + 18 * X**7
        - 40 * X**6 - 18 * X**5 + 40 * X**4 + 44 * X**3 + 25 * X**2 + 8 * X + 1
    )
    p8b = (
        X**8 - 5 * X**7 + 15 * X**6 - 29 * X**5 + 16 * X**4 - 3 * X**3
        - 9 * X**2 - 3 * X + 1
    )
    p14 = (
        X**14 - 8 * X**13 + 38 * X**12 - 124 * X**11 + 245 * X**10
        - 326 * X**9 + 228 * X**8 + 120 * X**7 + 12 * X**6 + 38 * X**5
        - 43 * X**4 - 80 * X**3 - 34 * X**2 - 4 * X + 1
    )
    b0 = X**7 - 4 * X**6 + 7 * X**5 - 10 * X**4 - 2 * X**3 - X**2 - 2 * X - 1
    g9 = (
        3 * X**9 - 12 * X**8 + 24 * X**7 - 42 * X**6 + 15 * X**5 - 33 * X**4
        - 12 * X**3 - 6 * X**2 - 6 * X - 3
    )
    assert fam._Q13 == q
    assert fam._P13_8 == p8
    assert fam._P13_12 == p12
    assert fam._P13_8B == p8b
    assert fam._P13_14 == p14
    assert fam._P13_B0 == b0
    assert fam._P13_G9 == g9


def test_transcription_kubert7_tables():
    assert fam._DEL7_CUBIC == X**3 - 8 * X**2 + 5 * X + 1
    assert fam._K7_Q3 == X**2 - X + 1
    assert fam._K7_P6 == (
        X**6 - 11 * X**5 + 30 * X**4 - 15 * X**3 - 10 * X**2 + 5 * X + 1
    )
    assert fam._K7_P12 == (
        X**12 - 18 * X**11 + 117 * X**10 - 354 * X**9 + 570 * X**8
        - 486 * X**7 + 273 * X**6 - 222 * X**5 + 174 * X**4 - 46 * X**3
        - 15 * X**2 + 6 * X + 1
    )


def test_transcription_isogeny9_tables():
    assert fam._I9_P3 == 9 * X**3 + 27 * X**2 + 27 * X + 1
    assert fam._I9_P6 == (
        27 * X**6 + 162 * X**5 + 405 * X**4 + 504 * X**3 + 297 * X**2
        + 54 * X - 1
    )
    assert fam._F18_C2 == -9 * X**2 - 30 * X - 33
    assert fam._F18_C1 == 27 * X**4 + 180 * X**3 + 450 * X**2 + 516 * X + 219
    assert fam._F18_C0 == (
        -27 * X**6 - 270 * X**5 - 1053 * X**4 - 2196 * X**3 - 2565 * X**2
        - 1566 * X - 323
    )


def test_transcription_f18_cyclic_tables():
    assert fam._C18_A3 == X**3 - 3 * X**2 + 3 * X - 3
    assert fam._C18_A9 == (
        X**9 - 9 * X**8 + 36 * X**7 - 90 * X**6 + 162 * X**5 - 216 * X**4
        + 192 * X**3 - 90 * X**2 + 9 * X - 3
    )
    assert fam._C18_B6 == (
        X**6 - 6 * X**5 + 15 * X**4 - 24 * X**3 + 27 * X**2 - 18 * X - 3
    )
    assert fam._C18_B12 == (
        X**12 - 12 * X**11 + 66 * X**10 - 228 * X**9 + 567 * X**8
        - 1080 * X**7 + 1596 * X**6 - 1800 * X**5 + 1503 * X**4 - 900 * X**3
        + 378 * X**2 - 108 * X + 9
    )
    assert fam._C18_K6 == (
        X**6 - 6 * X**5 + 19 * X**4 - 40 * X**3 + 63 * X**2 - 66 * X + 33
    )
    assert fam._C18_K9 == (
        X**9 - 9 * X**8 + 44 * X**7 - 146 * X**6 + 354 * X**5 - 648 * X**4
        + 912 * X**3 - 954 * X**2 + 657 * X - 219
    )
    assert fam._C18_K18 == (
        -X**18 + 18 * X**17 - 165 * X**16 + 1020 * X**15 - 4716 * X**14
        + 17172 * X**13 - 50904 * X**12 + 125820 * X**11 - 263358 * X**10
        + 470376 * X**9 - 718146 * X**8 + 934740 * X**7 - 1028268 * X**6
        + 939276 * X**5 - 693360 * X**4 + 399924 * X**3 - 173097 * X**2
        + 52326 * X - 8721
    )


def test_transcription_kubert9_tables():
    assert fam._DEL9_CUBIC == X**3 - 6 * X**2 + 3 * X + 1
    assert fam._K9_Q2 == X**2 - X + 1
    assert fam._K9_D3 == X**3 - 3 * X**2 + 1
    assert fam._K9_D9 == (
        X**9 - 9 * X**8 + 27 * X**7 - 48 * X**6 + 54 * X**5 - 45 * X**4
        + 27 * X**3 - 9 * X**2 + 1
    )
    assert fam._K9_D18 == (
        X**18 - 18 * X**17 + 135 * X**16 - 570 * X**15 + 1557 * X**14
        - 2970 * X**13 + 4128 * X**12 - 4230 * X**11 + 3240 * X**10
        - 2032 * X**9 + 1359 * X**8 - 1080 * X**7 + 735 * X**6 - 306 * X**5
        + 27 * X**4 + 42 * X**3 - 18 * X**2 + 1
    )


def test_transcription_2x14_tables():
    assert fam._M14_Q6 == (
        X**6 + 4 * X**5 + 13 * X**4 - 40 * X**3 + 19 * X**2 + 36 * X + 31
    )
    assert fam._M14_AN == (
        X**12 + 4 * X**11 - 10 * X**10 - 68 * X**9 + 3 * X**8 + 552 * X**7
        + 4 * X**6 - 2568 * X**5 + 2103 * X**4 + 1684 * X**3 + 1958 * X**2
        + 396 * X + 37
    )
    assert fam._M14_BN == (
        X**24 + 8 * X**23 + 12 * X**22 - 120 * X**21 - 518 * X**20
        + 504 * X**19 + 5068 * X**18 + 568 * X**17 - 24009 * X**16
        - 15024 * X**15 + 62936 * X**14 + 183120 * X**13 - 550452 * X**12
        - 851984 * X**11 + 4384056 * X**10 - 3808912 * X**9
        + 1467519 * X**8 - 4083672 * X**7 + 3590300 * X**6 + 5512360 * X**5
        + 6945498 * X**4 + 2943128 * X**3 + 893052 * X**2 + 120024 * X + 3753
    )
    assert fam._M14_L6A == (
        X**6 + 2 * X**5 + 15 * X**4 - 20 * X**3 + 15 * X**2 + 18 * X + 33
    )
    assert fam._M14_L6B == (
        X**6 + 2 * X**5 + 3 * X**4 - 20 * X**3 + 39 * X**2 + 18 * X + 21
    )
    assert fam._M14_C3 == X**3 + 2 * X**2 - 9 * X - 2


# -- pinned spot values ------------------------------------------------------


def test_f13_values_at_2():
    a, b = f13_coefficients(F(2))
    assert a == F(459, 31)
    assert b == F(351270, 961)
    k2, _ = f13_cubic(F(2)).primitive_model()
    assert [int(c) for c in k2.coefficients] == [-290331, -2156112, -2214144, 3936256]


def test_f13_cubic_is_field_cubic():
    m = family_13(F(2))
    assert m.field.minpoly == f13_cubic(F(2)).primitive_model()[0]
    assert m.expected_torsion == TorsionGroup(1, 13)
    assert m.expected_class is GaloisType.CYCLIC
    assert m.expected_rational_torsion == TorsionGroup(1, 1)
    assert is_rational_square(m.field.disc)


def test_f13_u1_field_still_cubic():
    # the quadratic-term table vanishes at u = 1 but the cubic stays irreducible
    m = family_13(F(1))
    assert m.field.minpoly == 49 * X**3 - 3024 * X - 1728


def test_2x14_cubic_at_2():
    assert family_2x14_cubic(F(2)).primitive_model()[0] == (
        3 * X**3 - 4 * X**2 - 27 * X + 4
    )


def test_three_torsion_x_at_1():
    assert three_torsion_linear_factor(F(1)) == X + 648
    e = isogeny9_model(F(1), F(1))
    psi3 = division_polynomial(e, 3)
    assert psi3.evaluate(F(-648)) == 0


def test_cubic_factor_disc_at_0():
    assert cubic_disc(cubic_factor_F(F(0))) == 2985984


# -- exact identities --------------------------------------------------------


def test_twist13_identity_exact():
    for t in [F(2), F(3), F(-1), F(1, 2)]:
        assert fam.verify_twist13_identity(t)


def test_f13_is_twisted_isogeny_model():
    # the one-parameter slice sits inside the two-parameter twisted model
    for t in SAMPLES:
        u = twist13_u(t)
        e = isogeny13_model(t, u)
        a, b = f13_coefficients(t)
        assert (e.a4, e.a6) == (a, b)
        q = fam._Q13.evaluate(t)
        assert f13_cubic(t) == q**2 * isogeny13_cubic(t, u)


def test_kubert_discriminant_formulas():
    for u in SAMPLES + [F(8)]:
        assert kubert7_discriminant(u) == family_14_kubert(u).curve.discriminant
    for u in SAMPLES + [F(6)]:
        assert kubert9_discriminant(u) == family_18_kubert9(u).curve.discriminant


def test_three_torsion_y_square_identity():
    # y^2 at the rational 3-torsion x-coordinate collapses to a cubic in t,
    # verified here as a polynomial identity
    T = X
    a4 = -2187 * (T + 1) ** 3 * fam._I9_P3
    a6 = -39366 * (T + 1) ** 3 * fam._I9_P6
    x0 = -81 * (T + 1) ** 3
    y2 = x0 * x0 * x0 + a4 * x0 + a6
    assert y2 == -314928 * (T + 1) ** 3


def test_isogeny9_at_family_twist_is_scaled_slice():
    for s in [F(1), F(2), F(-3), F(1, 2)]:
        e1 = isogeny9_model(s, -3 * (s + 1))
        e2 = curve_with_rational_3torsion(s)
        lam = 9 * (s + 1)
        assert e1.a4 == lam**4 * e2.a4
        assert e1.a6 == lam**6 * e2.a6


def test_cubic_factor_divides_psi9():
    for s in [F(1), F(2), F(-3), F(1, 2)]:
        e = curve_with_rational_3torsion(s)
        psi9 = division_polynomial(e, 9)
        _, r = psi9.divmod(cubic_factor_F(s))
        assert r.is_zero


def test_cubic_factor_disc_law():
    # disc F_s = 331776 (s^2+3s+3)^2, checked as a polynomial identity in s
    a = RationalPoly([1])
    b, c, d = fam._F18_C2, fam._F18_C1, fam._F18_C0
    disc = (
        18 * b * c * d
        - 4 * b * b * b * d
        + b * b * c * c
        - 4 * c * c * c
        - 27 * d * d
    )
    assert disc == 331776 * (X**2 + 3 * X + 3) ** 2
    for s in [F(0), F(1), F(-2), F(1, 2)]:
        assert cubic_disc(cubic_factor_F(s)) == 331776 * (s**2 + 3 * s + 3) ** 2


def test_f18_cyclic_is_scaled_slice():
    for u in SAMPLES:
        s = f18_parameter_map(u)
        if s == -1 or s == 0:  # singular slices
            continue
        a_u, b_u = f18_cyclic_coefficients(u)
        e = curve_with_rational_3torsion(s)
        mu = 3 * (u - 1)
        assert a_u == mu**4 * e.a4
        assert b_u == mu**6 * e.a6
        assert f18_cyclic_cubic(u) == 27 * (u - 1) ** 6 * cubic_factor_F(s)


def test_f18_parameter_map_values():
    assert f18_parameter_map(F(2)) == F(-4, 3)
    assert f18_parameter_map(F(3)) == F(0)


def test_2x14_long_short_isomorphic():
    for u in [F(2), F(3), F(1, 2), F(-2)]:
        t = is_isomorphic_over(family_2x14_long(u), family_2x14_short(u))
        assert t is not None


# -- modular curve map -------------------------------------------------------


def test_eval_phi_sample_points():
    K = CubicField(X**3 + 2 * X**2 - X - 1)
    a = K.generator()
    cover, base = modular14_models()
    q1 = (1 - a - a * a, a)
    q2 = (-3 + 2 * a + 2 * a * a, 1 - 2 * a * a)
    assert cover(*q1) == K.zero()
    assert cover(*q2) == K.zero()
    c = lambda n: K.element((n, 0, 0))
    assert eval_phi(*q1) == (c(-2), c(3))
    assert eval_phi(*q2) == (c(-9), c(-25))
    for p in (eval_phi(*q1), eval_phi(*q2)):
        assert base(*p) == K.zero()


def test_eval_phi_rejects_bad_input():
    K = CubicField(X**3 + 2 * X**2 - X - 1)
    c = lambda n: K.element((n, 0, 0))
    with pytest.raises(InputError):
        eval_phi(c(1), c(1))  # not on the source curve
    with pytest.raises(InputError):
        eval_phi(c(0), c(0))  # on the curve but outside the map's domain


# -- excluded parameters -----------------------------------------------------


def test_excluded_parameters():
    with pytest.raises(ExcludedParameterError):
        family_13(F(0))
    with pytest.raises(ExcludedParameterError):
        family_14_kubert(F(0))
    with pytest.raises(ExcludedParameterError):
        family_14_kubert(F(1))
    with pytest.raises(ExcludedParameterError):
        family_18_cyclic(F(1))
    with pytest.raises(ExcludedParameterError):
        family_18_cyclic(F(3))  # lands on the singular slice s = 0
    with pytest.raises(ExcludedParameterError):
        family_18_kubert9(F(0))
    with pytest.raises(ExcludedParameterError):
        family_18_kubert9(F(1))
    with pytest.raises(ExcludedParameterError):
        family_2x14(F(1))
    with pytest.raises(ExcludedParameterError):
        family_2x14(F(-1))
    with pytest.raises(ExcludedParameterError):
        isogeny9_model(F(0), F(1))
    with pytest.raises(ExcludedParameterError):
        curve_with_rational_3torsion(F(0))
    with pytest.raises(ExcludedParameterError):
        curve_with_rational_3torsion(F(-1))
    with pytest.raises(InputError):
        isogeny13_model(F(2), F(0))


# -- fixed curves ------------------------------------------------------------


def test_fixed_14_members():
    m3, m4 = fixed_14()
    assert m3.curve == EllipticCurve(1, -1, 0, -107, 552)
    assert m4.curve == EllipticCurve(1, -1, 0, -1822, 30393)
    assert m3.curve.j_invariant == -3375
    assert m4.curve.j_invariant == 16581375
    for m in (m3, m4):
        assert m.field.minpoly == X**3 + 2 * X**2 - X - 1
        assert m.expected_torsion == TorsionGroup(1, 14)
        assert m.expected_rational_torsion == TorsionGroup(1, 2)
        assert m.expected_class is GaloisType.CYCLIC


# -- parameter intervals -----------------------------------------------------


def test_interval_class_kubert7():
    ic = interval_class("F14_KUBERT7")
    r1, r2, r3 = ic.roots
    assert r1 < 0 < r2 < 1 < r3
    # side letter tracks the sign of the curve discriminant
    for u in [F(2), F(3), F(-1), F(1, 3), F(7)]:
        assert ic.side(u) == "I"
        assert family_14_kubert(u).expected_class is GaloisType.COMPLEX
    assert ic.side(F(8)) == "J"
    assert family_14_kubert(F(8)).expected_class is GaloisType.TOTALLY_REAL_NON_GALOIS


def test_interval_class_kubert9():
    ic = interval_class("F18_KUBERT9")
    r1, r2, r3 = ic.roots
    assert r1 < 0 < r2 < 1 < r3
    for u in [F(2), F(3), F(-1)]:
        assert ic.side(u) == "I"
        assert family_18_kubert9(u).expected_class is GaloisType.COMPLEX
    assert ic.side(F(6)) == "J"
    assert family_18_kubert9(F(6)).expected_class is GaloisType.TOTALLY_REAL_NON_GALOIS


def test_interval_class_rejects_other_labels():
    with pytest.raises(InputError):
        interval_class("F13")


# -- dispatch ----------------------------------------------------------------


def test_make_members_dispatch():
    assert [m.label for m in make_members("F13", F(2))] == ["F13"]
    assert [m.label for m in make_members("FIXED_49A3")] == ["FIXED_49A3"]
    assert [m.label for m in make_members("FIXED_49A4")] == ["FIXED_49A4"]
    with pytest.raises(InputError):
        make_members("F13")  # parametric label needs a parameter
    with pytest.raises(InputError):
        make_members("FIXED_49A3", F(2))
    with pytest.raises(InputError):
        make_members("F14_ISOG", F(2))
    with pytest.raises(InputError):
        make_members("NO_SUCH_FAMILY", F(2))
    assert set(LABELS) >= {"F13", "F2x14", "FIXED_49A3"}


# -- one light torsion check per parametric family ---------------------------
#
# Full sweeps with the parameters and time budgets that actually matter live
# in test_acceptance.py; this is a smoke check that members verify at all.


def test_member_torsion_smoke():
    from cubictorsion.torsion import torsion_subgroup

    m = family_2x14(F(2))
    assert torsion_subgroup(m.curve, m.field) == TorsionGroup(2, 14)
    assert torsion_subgroup(m.curve) == TorsionGroup(1, 1)
