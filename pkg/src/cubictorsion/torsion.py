"""Torsion subgroups of rational elliptic curves over Q and over cubic fields.

The computation is exact.  For each prime l in {2, 3, 5, 7, 13} the
l-primary part is found from the x-roots of division polynomials inside
the field (roots_in_field) and the square test for the matching
y-coordinate (sqrt_in_field).  The search depth per prime is bounded by
the classification of torsion groups over Q (15 groups) and over cubic
fields (20 groups); the computed structure is certified from below by
exhibiting generators and verifying their exact orders with the group
law, and any count that contradicts both classifications raises a
contract violation instead of returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractViolationError, InputError
from .numberfields import (
    CubicField,
    FieldElement,
    QQ,
    RationalField,
    roots_in_field,
    sqrt_in_field,
)
from .polynomials import RationalPoly, rational_roots
from .rationals import rational_sqrt
from .weierstrass import CurvePoint, EllipticCurve, Transformation, short_model_reduce

# (a, b) with the group Z/a x Z/b, a | b
MAZUR_LIST = frozenset(
    [(1, n) for n in (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12)]
    + [(2, 2 * n) for n in (1, 2, 3, 4)]
)
NAJMAN_LIST = frozenset(
    [(1, n) for n in (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 18, 21)]
    + [(2, 2 * n) for n in (1, 2, 3, 4, 7)]
)


@dataclass(frozen=True)
class TorsionGroup:
    """Z/a x Z/b with a | b; a = 1 encodes the cyclic group Z/b."""

    a: int
    b: int

    def __post_init__(self):
        if self.a not in (1, 2) or self.b < 1 or self.b % self.a != 0:
            raise InputError(f"not a valid torsion shape: ({self.a}, {self.b})")

    @property
    def order(self) -> int:
        return self.a * self.b

    def divides(self, other: "TorsionGroup") -> bool:
        return other.a % self.a == 0 and other.b % self.b == 0

    def __str__(self) -> str:
        if self.a == 1:
            return f"Z/{self.b}"
        return f"Z/{self.a} x Z/{self.b}"

    def to_json(self) -> str:
        return str(self)


# -- division polynomials -----------------------------------------------

_PSI_CACHE: dict[tuple[Fraction, Fraction], list[RationalPoly]] = {}


def _psi_table(a: Fraction, b: Fraction, n: int) -> list[RationalPoly]:
    """psi~_0..psi~_n for y^2 = x^3 + ax + b.

    psi~_n is the n-division polynomial for odd n and its x-only
    cofactor (psi_n / 2y) for even n.
    """
    tab = _PSI_CACHE.setdefault((a, b), [])
    if not tab:
        tab.extend(
            [
                RationalPoly([0]),
                RationalPoly([1]),
                RationalPoly([1]),
                RationalPoly([-a * a, 12 * b, 6 * a, 0, 3]),
                RationalPoly(
                    [
                        2 * (-8 * b * b - a ** 3),
                        2 * (-4 * a * b),
                        2 * (-5 * a * a),
                        40 * b,
                        10 * a,
                        0,
                        2,
                    ]
                ),
            ]
        )
    if len(tab) > n:
        return tab
    f = RationalPoly([b, a, 0, 1])
    f2_16 = 16 * f * f
    while len(tab) <= n:
        k = len(tab)
        m = k // 2
        if k % 2:
            if m % 2 == 0:
                val = f2_16 * tab[m + 2] * tab[m] ** 3 - tab[m - 1] * tab[m + 1] ** 3
            else:
                val = tab[m + 2] * tab[m] ** 3 - f2_16 * tab[m - 1] * tab[m + 1] ** 3
        else:
            val = tab[m] * (tab[m + 2] * tab[m - 1] ** 2 - tab[m - 2] * tab[m + 1] ** 2)
        want = (k * k - 1) // 2 if k % 2 else (k * k - 4) // 2
        if val.degree != want:
            raise AssertionError(f"division polynomial degree drift at n={k}")
        tab.append(val)
    return tab


def _short_rational_ab(e: EllipticCurve) -> tuple[Fraction, Fraction]:
    if not e.is_short:
        raise InputError("division polynomials are computed on short models")
    a4, a6 = e.a4, e.a6
    if isinstance(a4, FieldElement):
        if not (a4.is_rational and a6.is_rational):
            raise InputError("curve coefficients must be rational")
        a4, a6 = a4.as_rational(), a6.as_rational()
    return a4, a6


def division_polynomial(e: EllipticCurve, n: int) -> RationalPoly:
    """The n-division polynomial of a short model, as a polynomial in x.

    For even n the y factor is removed: the returned polynomial is
    psi_n / (2y), whose roots are the x-coordinates of n-torsion points
    of order > 2.  The 2-torsion x-coordinates are the roots of
    x^3 + Ax + B.
    """
    if n < 1:
        raise InputError("division polynomial index must be positive")
    a, b = _short_rational_ab(e)
    return _psi_table(a, b, n)[n]


# -- torsion computation ------------------------------------------------


class _Ctx:
    """One torsion computation: a reduced short model and its base field."""

    def __init__(self, e: EllipticCurve, field, bits: int):
        if not isinstance(e.field, RationalField):
            raise InputError(
                "torsion is computed for rational models; pass the cubic field separately"
            )
        if field is None or isinstance(field, RationalField):
            self.field = None
        elif isinstance(field, CubicField):
            self.field = field
        else:
            raise InputError(f"not a supported base field: {field!r}")
        self.bits = bits
        short, t1 = e.to_short()
        reduced, t2 = short_model_reduce(short)
        self.source = e
        self.reduced = reduced
        self.to_reduced = t1.then(t2)
        self.a, self.b = reduced.a4, reduced.a6
        self.fcubic = RationalPoly([self.b, self.a, 0, 1])
        self.curve = reduced if self.field is None else reduced.base_change(self.field)
        self.allowed = MAZUR_LIST if self.field is None else NAJMAN_LIST

    def psi(self, n: int) -> RationalPoly:
        return _psi_table(self.a, self.b, n)[n]

    def x_roots(self, poly: RationalPoly) -> list:
        if self.field is None:
            return sorted(set(rational_roots(poly)))
        return roots_in_field(poly, self.field, self.bits)

    def y_for(self, x):
        """A y with (x, y) on the curve, or None when y is not in the field."""
        val = self.fcubic.evaluate(x)
        if self.field is None:
            r = rational_sqrt(val)
            return r
        if isinstance(val, Fraction):
            val = self.field(val)
        return sqrt_in_field(val, self.bits)

    def points_from(self, poly: RationalPoly) -> list[CurvePoint]:
        """One point (x, +y) per x-root of poly that has y in the field."""
        pts = []
        for x in self.x_roots(poly):
            y = self.y_for(x)
            if y is not None:
                pts.append(self.curve.point(x, y))
        return pts

    def violation(self, msg: str):
        raise ContractViolationError(
            f"{msg} on {self.reduced} over "
            f"{'Q' if self.field is None else self.field}"
        )


def _vp(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _order_at_most(p: CurvePoint, bound: int) -> int | None:
    try:
        return p.order(bound=bound)
    except ValueError:
        return None


def _point_of_order(pts: list[CurvePoint], order: int) -> CurvePoint | None:
    for p in pts:
        if _order_at_most(p, order) == order:
            return p
    return None


def _two_part(ctx: _Ctx, cands: list) -> tuple[int, int, list, CurvePoint | None, CurvePoint | None]:
    """(alpha, beta, filtered candidates, generator, independent 2-torsion)."""
    two_tors = [ctx.curve.point(x, 0) for x in ctx.x_roots(ctx.fcubic)]
    n2 = len(two_tors)
    if n2 not in (0, 1, 3):
        ctx.violation(f"impossible 2-torsion root count {n2}")
    alpha = 1 if n2 == 3 else 0
    cands = [c for c in cands if (c[0] == 2) == (alpha == 1)]
    if not cands:
        ctx.violation("2-torsion shape outside the classification")
    if n2 == 0:
        return 0, 0, [c for c in cands if c[1] % 2], None, None

    pts4 = ctx.points_from(ctx.psi(4))
    c4 = len(pts4)
    if (n2 == 1 and c4 not in (0, 1)) or (n2 == 3 and c4 not in (0, 2)):
        ctx.violation(f"impossible 4-torsion count {c4} with {n2} two-torsion roots")
    if c4 == 0:
        beta = 1
        gen = two_tors[0]
    else:
        gen = _point_of_order(pts4, 4)
        if gen is None:
            ctx.violation("4-division roots produced no order-4 point")
        if any(_vp(c[1], 2) >= 3 for c in cands):
            pts8 = ctx.points_from(ctx.psi(8))
            c8 = len(pts8)
            want8 = {0: (1, 3), 1: (2, 6)}[alpha]
            if c8 not in want8:
                ctx.violation(f"impossible 8-torsion count {c8}")
            if c8 == want8[1]:
                beta = 3
                gen = _point_of_order(pts8, 8)
                if gen is None:
                    ctx.violation("8-division roots produced no order-8 point")
            else:
                beta = 2
        else:
            beta = 2
    aux = None
    if alpha == 1:
        half = ctx.curve.mul(2 ** (beta - 1), gen)
        aux = next((t for t in two_tors if t != half), None)
        if aux is None:
            ctx.violation("full 2-torsion expected but no independent point found")
    cands = [c for c in cands if _vp(c[1], 2) == beta]
    if not cands:
        ctx.violation(f"2-primary part 2^{beta} outside the classification")
    return alpha, beta, cands, gen, aux


def _three_part(ctx: _Ctx, cands: list) -> tuple[int, list, CurvePoint | None]:
    pts3 = ctx.points_from(ctx.psi(3))
    c3 = len(pts3)
    if c3 in (2, 3):
        ctx.violation(f"impossible 3-torsion count {c3}")
    if c3 == 4:
        ctx.violation("full 3-torsion cannot occur in an odd-degree field")
    if c3 == 0:
        cands = [c for c in cands if c[1] % 3]
        if not cands:
            ctx.violation("trivial 3-part outside the classification")
        return 0, cands, None
    gen = _point_of_order(pts3, 3)
    if gen is None:
        ctx.violation("3-division root produced no order-3 point")
    gamma = 1
    if any(_vp(c[1], 3) >= 2 for c in cands):
        cofactor = ctx.psi(9).exact_div(ctx.psi(3))
        pts9 = ctx.points_from(cofactor)
        c9 = len(pts9)
        if c9 not in (0, 3):
            ctx.violation(f"impossible exact-order-9 count {c9}")
        if c9 == 3:
            gamma = 2
            gen = _point_of_order(pts9, 9)
            if gen is None:
                ctx.violation("9-division roots produced no order-9 point")
    cands = [c for c in cands if _vp(c[1], 3) == gamma]
    if not cands:
        ctx.violation(f"3-primary part 3^{gamma} outside the classification")
    return gamma, cands, gen


def _odd_prime_part(ctx: _Ctx, ell: int, cands: list) -> tuple[int, list, CurvePoint | None]:
    if not any(c[1] % ell == 0 for c in cands):
        return 0, cands, None
    pts = ctx.points_from(ctx.psi(ell))
    c = len(pts)
    if c not in (0, (ell - 1) // 2):
        ctx.violation(f"impossible {ell}-torsion count {c}")
    if c == 0:
        return 0, [k for k in cands if k[1] % ell], None
    gen = _point_of_order(pts, ell)
    if gen is None:
        ctx.violation(f"{ell}-division roots produced no order-{ell} point")
    return 1, [k for k in cands if k[1] % ell == 0], gen


def _analyze(e: EllipticCurve, field, bits: int) -> dict:
    ctx = _Ctx(e, field, bits)
    cands = sorted(ctx.allowed)
    alpha, beta, cands, gen2, aux2 = _two_part(ctx, cands)
    gamma, cands, gen3 = _three_part(ctx, cands)
    parts = {2: beta, 3: gamma}
    gens = {2: gen2, 3: gen3}
    for ell in (5, 7, 13):
        exp, cands, gen = _odd_prime_part(ctx, ell, cands)
        parts[ell] = exp
        gens[ell] = gen
    b = 1
    for ell, exp in parts.items():
        b *= ell ** exp
    a = 2 if alpha else 1
    if (a, b) not in ctx.allowed or (a, b) not in cands:
        ctx.violation(f"assembled torsion ({a}, {b}) outside the classification")

    # certify from below: a point of exact order b, plus an independent
    # 2-torsion point in the a = 2 case
    gen = ctx.curve.infinity()
    for g in gens.values():
        if g is not None:
            gen = gen + g
    if _order_at_most(gen, b + 1) != b:
        ctx.violation("combined generator has wrong order")
    if a == 2:
        if aux2 is None or _order_at_most(aux2, 2) != 2 or aux2 == ctx.curve.mul(b // 2, gen):
            ctx.violation("no independent order-2 generator")
    return {
        "group": TorsionGroup(a, b),
        "generator": gen,
        "aux": aux2 if a == 2 else None,
        "ctx": ctx,
    }


def torsion_subgroup(e: EllipticCurve, field=None, bits: int = 128) -> TorsionGroup:
    """E(K)_tors for a rational model e and K = Q (field None) or a cubic field.

    Exact relative to the torsion classification over the base: the
    group is certified from below by explicit generators, and the search
    depth per prime is the maximum the classification allows.
    """
    return _analyze(e, field, bits)["group"]


def torsion_points(e: EllipticCurve, field=None, bits: int = 128) -> list[CurvePoint]:
    """All torsion points, as points on the given model of e.

    Points are returned on e itself when field is None and on the base
    change of e otherwise, origin first.
    """
    data = _analyze(e, field, bits)
    group, gen, aux = data["group"], data["generator"], data["aux"]
    ctx = data["ctx"]
    seen = []
    p = ctx.curve.infinity()
    for _ in range(group.b):
        seen.append(p)
        p = p + gen
    if group.a == 2:
        seen += [q + aux for q in seen]
    if len(set(seen)) != group.order:
        ctx.violation("torsion enumeration produced duplicate points")

    target = ctx.source if ctx.field is None else ctx.source.base_change(ctx.field)
    out = [ctx.to_reduced.pull_point(q, target) for q in seen]
    inf = [q for q in out if q.is_infinity]
    aff = sorted(
        (q for q in out if not q.is_infinity),
        key=lambda q: (_sort_key(q.x), _sort_key(q.y)),
    )
    return inf + aff


def _sort_key(v):
    if isinstance(v, FieldElement):
        return tuple(v.coords)
    return (v, v, v)


# -- the two-lines normal form ------------------------------------------


def _line_through(p1: CurvePoint, p2: CurvePoint) -> tuple:
    """(slope, intercept) of the line through two affine points."""
    if p1.x == p2.x:
        raise ContractViolationError("vertical chord in line normalization")
    m = (p2.y - p1.y) / (p2.x - p1.x)
    return m, p1.y - m * p1.x


def _on_line(p: CurvePoint, m, c) -> bool:
    return p.y == m * p.x + c


def bn_normalize_map(e: EllipticCurve, p: CurvePoint) -> tuple[EllipticCurve, Transformation]:
    """The unique model in which P, 2P, 4P lie on y = 0 and 3P, 5P, 6P on
    y = -x, with the change of variables that produces it.

    For a 7-torsion point P on a base-changed rational curve with full
    2-torsion over a cubic field, the resulting coefficients are
    rational; if they are not, a contract violation is raised.
    """
    if p.curve != e:
        raise InputError("point does not lie on the given curve")
    if _order_at_most(p, 7) != 7:
        raise InputError("line normalization needs a point of exact order 7")
    mult = {m: e.mul(m, p) for m in range(1, 7)}
    m1, c1 = _line_through(mult[1], mult[2])
    if not _on_line(mult[4], m1, c1):
        raise ContractViolationError("P, 2P, 4P are not collinear")
    m2, c2 = _line_through(mult[3], mult[5])
    if not _on_line(mult[6], m2, c2):
        raise ContractViolationError("3P, 5P, 6P are not collinear")
    if m1 == m2:
        raise ContractViolationError("degenerate parallel lines in normalization")
    # the map (x, y) -> (P^2 x + R, P^3 y + P^2 Q x + S) sends the first
    # line to y = 0 and the second to y = -x
    big_p = 1 / (m1 - m2)
    big_q = -big_p * m1
    big_r = big_p ** 3 * (c1 - c2)
    big_s = -(big_p ** 3) * c1
    tr = Transformation(
        1 / big_p,
        -big_r / big_p ** 2,
        -big_q / big_p,
        (big_q * big_r - big_s) / big_p ** 3,
        field=e.field,
    )
    out = tr.push_curve(e)
    for m in (1, 2, 4):
        q = tr.push_point(mult[m])
        if q.y != 0:
            raise ContractViolationError("normalized multiples left the line y = 0")
    for m in (3, 5, 6):
        q = tr.push_point(mult[m])
        if q.y != -q.x:
            raise ContractViolationError("normalized multiples left the line y = -x")
    return out, tr


def bn_normalize(e: EllipticCurve, p: CurvePoint) -> EllipticCurve:
    """The rational model produced by the two-lines normal form.

    Raises ContractViolationError when any coefficient of the normalized
    model fails to be rational.
    """
    out, _ = bn_normalize_map(e, p)
    coeffs = []
    for v in out.a_invariants():
        if isinstance(v, FieldElement):
            if not v.is_rational:
                raise ContractViolationError(
                    "two-lines normal form has an irrational coefficient"
                )
            v = v.as_rational()
        coeffs.append(v)
    return EllipticCurve(*coeffs, field=QQ)
