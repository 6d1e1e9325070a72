from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp

from cubictorsion.errors import InputError, ReducibleCubicError
from cubictorsion.numberfields import (
    CubicField,
    FieldElement,
    GaloisType,
    QQ,
    RationalField,
    roots_in_field,
    sqrt_in_field,
)
from cubictorsion.polynomials import RationalPoly, X

ZETA7 = CubicField(X ** 3 + 2 * X ** 2 - X - 1)  # disc 49, cyclic
CBRT2 = CubicField(X ** 3 - 2)  # disc -108, pure cubic
TR229 = CubicField(X ** 3 - 4 * X - 1)  # disc 229, totally real, not Galois
C23 = CubicField(X ** 3 - X - 1)  # disc -23, complex, not pure

coord = st.fractions(min_value=-9, max_value=9, max_denominator=5)
coords3 = st.tuples(coord, coord, coord)


def elements(field):
    return coords3.map(lambda c: FieldElement(field, c))


# -- construction and classification ---------------------------------------


def test_rejects_reducible_and_wrong_degree():
    with pytest.raises(ReducibleCubicError):
        CubicField(X ** 3 - 1)
    with pytest.raises(ReducibleCubicError):
        CubicField((X - 2) * (X ** 2 + X + 1))
    with pytest.raises(InputError):
        CubicField(X ** 2 + 1)
    with pytest.raises(InputError):
        CubicField(X ** 4 + 1)


def test_known_classifications():
    assert ZETA7.classify().galois_type is GaloisType.CYCLIC
    assert ZETA7.disc == 49
    assert CBRT2.classify().galois_type is GaloisType.COMPLEX
    assert CBRT2.classify().pure_candidate
    assert CBRT2.disc == -108
    assert TR229.classify().galois_type is GaloisType.TOTALLY_REAL_NON_GALOIS
    assert TR229.disc == 229
    assert C23.classify().galois_type is GaloisType.COMPLEX
    assert not C23.classify().pure_candidate


def test_cyclic_iff_square_discriminant():
    # disc of the non-monic cubic below is 518^2
    k = CubicField(RationalPoly([4, -27, -4, 3]))
    assert k.disc == 518 ** 2
    assert k.classify().galois_type is GaloisType.CYCLIC
    assert not k.classify().pure_candidate


@given(st.integers(min_value=1, max_value=12), st.sampled_from([ZETA7, CBRT2, TR229]))
def test_classify_invariant_under_rescaling(c, base):
    # root alpha -> c*alpha: substitute x/c and clear denominators
    f = base.minpoly
    scaled = RationalPoly([f[i] * Fraction(c) ** (3 - i) for i in range(4)])
    k = CubicField(scaled)
    assert k.classify() == base.classify()
    # and under multiplying the polynomial by a nonzero constant
    k2 = CubicField(f * Fraction(7, 3))
    assert k2.classify() == base.classify()


def test_monic_model_relation():
    k = CubicField(RationalPoly([4, -27, -4, 3]))
    g, s = k.monic_model()
    assert g.lc() == 1
    assert all(c.denominator == 1 for c in g.coefficients)
    assert g.evaluate(s * k.generator()) == 0


def test_field_equality_up_to_scaling():
    assert CubicField(X ** 3 - 2) == CubicField(2 * X ** 3 - 4)
    assert CubicField(X ** 3 - 2) != CubicField(X ** 3 - 3)
    assert QQ == RationalField()
    assert QQ != CubicField(X ** 3 - 2)  # type: ignore[comparison-overlap]


def test_json_round_trip():
    assert CubicField.from_json(ZETA7.to_json()) == ZETA7
    e = FieldElement(ZETA7, ("1/2", -3, "7/5"))
    assert e.to_json() == ["1/2", "-3", "7/5"]


# -- element arithmetic ----------------------------------------------------


@given(elements(ZETA7), elements(ZETA7), elements(ZETA7))
def test_ring_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x


@given(elements(TR229))
def test_inverse_round_trip(x):
    if not x:
        with pytest.raises(ZeroDivisionError):
            x.inverse()
        return
    assert x * x.inverse() == 1
    assert (1 / x) * x == TR229.one()


@given(elements(CBRT2), st.integers(min_value=0, max_value=6))
def test_pow_matches_repeated_product(x, n):
    acc = CBRT2.one()
    for _ in range(n):
        acc = acc * x
    assert x ** n == acc


def test_generator_satisfies_minpoly():
    for k in (ZETA7, CBRT2, TR229, C23):
        a = k.generator()
        val = k.minpoly.evaluate(a)
        assert not val
        assert a.charpoly() == k.minpoly.monic()


@given(elements(ZETA7), elements(ZETA7))
def test_norm_multiplicative_trace_additive(x, y):
    assert (x * y).norm() == x.norm() * y.norm()
    assert (x + y).trace() == x.trace() + y.trace()


def test_rational_elements():
    e = ZETA7(Fraction(5, 3))
    assert e.is_rational and e.as_rational() == Fraction(5, 3)
    assert e.norm() == Fraction(125, 27)
    assert e.trace() == 5
    with pytest.raises(ValueError):
        ZETA7.generator().as_rational()


def test_charpoly_is_killed_by_element():
    b = 1 + ZETA7.generator() - ZETA7.generator() ** 2
    cp = b.charpoly()
    assert not cp.evaluate(b)
    assert cp.lc() == 1 and cp.degree == 3


# -- embeddings ------------------------------------------------------------


def test_embedding_counts_and_order():
    with mp.workprec(160):
        er = ZETA7.embeddings(128)
        assert all(abs(mp.im(v)) < mp.mpf(2) ** -100 for v in er)
        assert er[0] < er[1] < er[2]
        ec = CBRT2.embeddings(128)
        assert abs(mp.im(ec[0])) < mp.mpf(2) ** -100
        assert mp.im(ec[1]) < 0 < mp.im(ec[2])
        assert abs(mp.conj(ec[1]) - ec[2]) < mp.mpf(2) ** -100


@given(elements(ZETA7))
@settings(max_examples=25)
def test_numeric_trace_matches_exact(x):
    with mp.workprec(200):
        num = sum(x.embeddings(128))
        tr = x.trace()
        assert abs(num - mp.mpf(tr.numerator) / tr.denominator) < mp.mpf(2) ** -90


def test_sign_first_embedding():
    a = TR229.generator()
    # roots of x^3-4x-1: approx -1.86, -0.25, 2.11; first embedding negative
    assert a.sign_first_embedding() == -1
    assert (-a).sign_first_embedding() == 1
    assert TR229(0).sign_first_embedding() == 0


# -- roots_in_field --------------------------------------------------------


def test_conjugates_inside_field_by_type():
    assert len(roots_in_field(ZETA7.minpoly, ZETA7)) == 3  # Galois: all conjugates
    assert len(roots_in_field(CBRT2.minpoly, CBRT2)) == 1
    assert len(roots_in_field(TR229.minpoly, TR229)) == 1


@settings(max_examples=20, deadline=None)
@given(elements(ZETA7))
def test_planted_root_recovered(beta):
    if beta.is_rational:
        return
    f = beta.charpoly() * (X ** 2 + 1) * (2 * X - 3)
    roots = roots_in_field(f, ZETA7)
    assert beta in roots
    assert ZETA7(Fraction(3, 2)) in roots
    for r in roots:
        assert not f.evaluate(r)


def test_rational_roots_come_back_as_field_elements():
    f = (X - 5) * (X ** 2 - 2)
    roots = roots_in_field(f, CBRT2)
    assert roots == [CBRT2(5)]


def test_no_roots_when_none_exist():
    assert roots_in_field(X ** 2 + 1, ZETA7) == []
    assert roots_in_field(X ** 2 - 2, ZETA7) == []  # sqrt(2) not in a cubic field


# -- sqrt_in_field ---------------------------------------------------------


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([ZETA7, CBRT2, TR229]), coords3)
def test_sqrt_of_square_round_trip(field, cs):
    c = FieldElement(field, cs)
    s = sqrt_in_field(c * c)
    assert s is not None
    assert s * s == c * c
    assert s == c or s == -c
    if c:
        assert s.sign_first_embedding() > 0


def test_sqrt_none_for_nonsquares():
    assert sqrt_in_field(ZETA7(2)) is None
    assert sqrt_in_field(ZETA7(-1)) is None
    assert sqrt_in_field(CBRT2(-4)) is None


def test_sqrt_zero():
    assert sqrt_in_field(ZETA7(0)) == ZETA7.zero()


def test_sqrt_of_rational_square_in_field():
    assert sqrt_in_field(ZETA7(Fraction(9, 4))) == ZETA7(Fraction(3, 2))
