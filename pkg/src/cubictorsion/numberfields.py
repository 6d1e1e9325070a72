"""Cubic number fields K = Q[x]/(f) with exact element arithmetic.

Elements are coordinate triples over the basis {1, a, a^2} where a is a
root of the defining cubic (which need not be monic).  Root finding inside
K pairs numeric embeddings with exact verification: numerics only propose,
the Fraction layer disposes.

Classification of a field follows the discriminant: positive square means
cyclic Galois, positive non-square means totally real with Galois closure
of degree 6, negative means one real and two complex embeddings.  The
pure_candidate flag records the necessary condition disc = -27*(square)
satisfied by all pure cubics Q(cbrt(m)).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import mpmath
from mpmath import mp

from .errors import InputError, ReducibleCubicError, UndecidedError
from .numerics import (
    NoConvergence,
    certified_root_radius,
    numeric_roots,
    refine_isolated_root,
    split_real_complex,
)
from .polynomials import (
    RationalPoly,
    X,
    discriminant,
    isolate_real_roots,
    poly_xgcd,
    rational_roots,
    squarefree_part,
)
from .rationals import RationalLike, parse_rational, rational_sqrt


class GaloisType(enum.Enum):
    CYCLIC = "CYCLIC"
    TOTALLY_REAL_NON_GALOIS = "TOTALLY_REAL_NON_GALOIS"
    COMPLEX = "COMPLEX"


@dataclass(frozen=True)
class FieldClass:
    galois_type: GaloisType
    pure_candidate: bool

    def to_json(self) -> dict:
        return {
            "galois_type": self.galois_type.value,
            "pure_candidate": self.pure_candidate,
        }

    def __str__(self) -> str:
        suffix = ", pure candidate" if self.pure_candidate else ""
        return f"{self.galois_type.value}{suffix}"


class RationalField:
    """Base-field marker for Q.  Use the QQ singleton."""

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")


QQ = RationalField()

FieldLike = Union[RationalField, "CubicField"]


class CubicField:
    """An irreducible cubic extension of Q."""

    def __init__(self, minpoly):
        if not isinstance(minpoly, RationalPoly):
            minpoly = RationalPoly(minpoly)
        if minpoly.degree != 3:
            raise InputError(f"defining polynomial must be cubic, got degree {minpoly.degree}")
        roots = rational_roots(minpoly)
        if roots:
            raise ReducibleCubicError(
                f"cubic {minpoly} has rational root {roots[0]}; not a field"
            )
        self.minpoly = minpoly
        prim, _ = minpoly.primitive_model()
        self._key = prim.coefficients
        self.disc = discriminant(prim)
        # alpha^3 and alpha^4 in the power basis, for multiplication
        a0, a1, a2, a3 = minpoly.coefficients
        r3 = (-a0 / a3, -a1 / a3, -a2 / a3)
        r4 = (
            r3[2] * r3[0],
            r3[0] + r3[2] * r3[1],
            r3[1] + r3[2] * r3[2],
        )
        self._alpha3 = tuple(Fraction(c) for c in r3)
        self._alpha4 = tuple(Fraction(c) for c in r4)
        self._classification = self._classify()
        self._embed_cache: dict[int, tuple] = {}
        self._solve_cache: dict[int, mpmath.matrix] = {}
        self._trace_data: tuple | None = None
        self._delta_cache: dict[int, tuple] = {}
        self._delta_intervals: list | None = None

    # -- identity --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CubicField):
            return self._key == other._key
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"CubicField({self.minpoly})"

    def to_json(self) -> list[str]:
        return self.minpoly.to_json()

    @classmethod
    def from_json(cls, data) -> "CubicField":
        return cls(RationalPoly.from_json(data))

    # -- classification --------------------------------------------------

    def _classify(self) -> FieldClass:
        d = self.disc
        if d > 0:
            if rational_sqrt(d) is not None:
                gt = GaloisType.CYCLIC
            else:
                gt = GaloisType.TOTALLY_REAL_NON_GALOIS
            pure = False
        else:
            gt = GaloisType.COMPLEX
            pure = rational_sqrt(-d / 27) is not None
        return FieldClass(gt, pure)

    def classify(self) -> FieldClass:
        return self._classification

    @property
    def is_totally_real(self) -> bool:
        return self.disc > 0

    def monic_model(self) -> tuple[RationalPoly, Fraction]:
        """(g, s): g monic integral with g(s*alpha) = 0, s = lc of the
        primitive integer model."""
        prim, _ = self.minpoly.primitive_model()
        z0, z1, z2, z3 = prim.coefficients
        g = RationalPoly([z0 * z3 * z3, z1 * z3, z2, 1])
        return g, Fraction(z3)

    # -- elements --------------------------------------------------------

    def element(self, coords) -> "FieldElement":
        return FieldElement(self, coords)

    def __call__(self, x) -> "FieldElement":
        if isinstance(x, FieldElement):
            if x.field != self:
                raise InputError("element belongs to a different field")
            return x
        if isinstance(x, (int, Fraction, str)):
            return FieldElement(self, (parse_rational(x), Fraction(0), Fraction(0)))
        if isinstance(x, (tuple, list)):
            return FieldElement(self, x)
        raise InputError(f"cannot coerce {x!r} into {self!r}")

    def zero(self) -> "FieldElement":
        return self(0)

    def one(self) -> "FieldElement":
        return self(1)

    def generator(self) -> "FieldElement":
        return FieldElement(self, (0, 1, 0))

    # -- embeddings ------------------------------------------------------

    def embeddings(self, bits: int = 128) -> tuple:
        """Numeric roots of the defining cubic, ordered: real roots
        ascending, then the complex pair with negative imaginary part
        first.  Consistent with classify() by construction."""
        cached = self._embed_cache.get(bits)
        if cached is not None:
            return cached
        prim, _ = self.minpoly.primitive_model()
        z = [int(c) for c in prim.coefficients]
        want_reals = 3 if self.disc > 0 else 1
        prec = bits
        while prec <= max(4096, 16 * bits):
            try:
                roots, err = numeric_roots(z, prec)
            except NoConvergence:
                prec *= 2
                continue
            reals, cplx = split_real_complex(roots, prec)
            if len(reals) != want_reals:
                prec *= 2
                continue
            with mp.workprec(bits + 64):
                if want_reals == 3:
                    out = tuple(+r for r in sorted(reals))
                else:
                    pair = sorted(cplx, key=lambda w: mp.im(w))
                    out = (+reals[0], +pair[0], +pair[1])
            self._embed_cache[bits] = out
            return out
        raise UndecidedError("embeddings did not stabilize")

    def trace_basis(self) -> tuple[int, tuple[int, int, int], tuple]:
        """Integral scaling of the generator and its exact trace form.

        Returns (d, (C2, C1, C0), Minv): delta = d*alpha satisfies the
        monic integral cubic x^3 + C2 x^2 + C1 x + C0, and Minv is the
        exact inverse of the Hankel matrix [Tr(delta^(i+j))]_{i,j<3}
        built from Newton power sums.  Traces against powers of delta
        reconstruct coordinates of any element exactly, with no
        denominator guessing.
        """
        if self._trace_data is not None:
            return self._trace_data
        prim, _ = self.minpoly.primitive_model()
        z0, z1, z2, z3 = (int(c) for c in prim.coefficients)
        d = z3
        c2, c1, c0 = z2, z1 * z3, z0 * z3 * z3
        p1 = -c2
        p2 = c2 * c2 - 2 * c1
        p3 = -c2 ** 3 + 3 * c1 * c2 - 3 * c0
        p4 = c2 ** 4 - 4 * c1 * c2 ** 2 + 2 * c1 * c1 + 4 * c0 * c2
        m = ((3, p1, p2), (p1, p2, p3), (p2, p3, p4))
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        adj = tuple(
            tuple(
                (m[(j + 1) % 3][(i + 1) % 3] * m[(j + 2) % 3][(i + 2) % 3]
                 - m[(j + 1) % 3][(i + 2) % 3] * m[(j + 2) % 3][(i + 1) % 3])
                for j in range(3)
            )
            for i in range(3)
        )
        minv = tuple(tuple(Fraction(a, det) for a in row) for row in adj)
        self._trace_data = (d, (c2, c1, c0), minv)
        return self._trace_data

    def delta_embeddings(self, bits: int) -> tuple[list, mpmath.mpf]:
        """Embeddings of the integral generator delta with certified radii.

        Order matches embeddings(): real values ascending for totally
        real fields, else (real, w, conj w).  The returned radius bounds
        the distance of every value to a true root of delta's cubic.
        """
        cached = self._delta_cache.get(bits)
        if cached is not None:
            return cached
        d, (c2, c1, c0), _ = self.trace_basis()
        cs = [c0, c1, c2, 1]
        if self.disc > 0:
            if self._delta_intervals is None:
                poly = RationalPoly(cs)
                g, exact, intervals = isolate_real_roots(poly)
                if exact or len(intervals) != 3:
                    raise UndecidedError("integral generator cubic misbehaved")
                self._delta_intervals = intervals
            vals = []
            rad = mp.mpf(0)
            for lo, hi in self._delta_intervals:
                x, r = refine_isolated_root(cs, lo, hi, bits)
                vals.append(x)
                rad = max(rad, r)
            order = sorted(range(3), key=lambda i: vals[i])
            out = ([vals[i] for i in order], +rad)
        else:
            prec = bits
            while True:
                try:
                    roots, _ = numeric_roots(cs, prec)
                except NoConvergence:
                    prec *= 2
                    if prec > max(4096, 16 * bits):
                        raise UndecidedError("generator embeddings stalled")
                    continue
                reals, cplx = split_real_complex(roots, prec)
                if len(reals) == 1 and len(cplx) == 2:
                    break
                prec *= 2
                if prec > max(4096, 16 * bits):
                    raise UndecidedError("generator embeddings stalled")
            with mp.workprec(bits + 64):
                pair = sorted(cplx, key=lambda w: mp.im(w))
                vals = [reals[0], pair[0], pair[1]]
                rad = mp.mpf(0)
                for v in vals:
                    rad = max(rad, certified_root_radius(cs, v))
            out = (vals, +rad)
        self._delta_cache[bits] = out
        return out

    def _embedding_solver(self, bits: int) -> mpmath.matrix:
        """Inverse of the 3x3 power-basis matrix at the given precision."""
        cached = self._solve_cache.get(bits)
        if cached is not None:
            return cached
        emb = self.embeddings(bits)
        with mp.workprec(bits + 64):
            m = mp.matrix(3, 3)
            for i, a in enumerate(emb):
                m[i, 0] = mp.mpf(1)
                m[i, 1] = a
                m[i, 2] = a * a
            inv = mp.inverse(m)
        self._solve_cache[bits] = inv
        return inv


class FieldElement:
    """Element of a CubicField in the power basis of the generator."""

    __slots__ = ("field", "coords")

    def __init__(self, field: CubicField, coords):
        if len(coords) != 3:
            raise InputError("field element needs exactly 3 coordinates")
        self.field = field
        self.coords: tuple[Fraction, Fraction, Fraction] = tuple(
            parse_rational(c) for c in coords
        )

    # -- structure -------------------------------------------------------

    def lift(self) -> RationalPoly:
        return RationalPoly(self.coords)

    @property
    def is_rational(self) -> bool:
        return self.coords[1] == 0 and self.coords[2] == 0

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def __bool__(self) -> bool:
        return any(c != 0 for c in self.coords)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.coords[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.coords))

    def __repr__(self) -> str:
        return f"FieldElement({self})"

    def __str__(self) -> str:
        return self.lift().pretty("a") if self else "0"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                return None
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, (other, 0, 0))
        return None

    def __add__(self, other) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coords, o.coords
        return FieldElement(self.field, (a[0] + b[0], a[1] + b[1], a[2] + b[2]))

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, tuple(-c for c in self.coords))

    def __sub__(self, other) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coords, o.coords
        # degree-4 convolution then reduction by alpha^3, alpha^4 tables
        p0 = a[0] * b[0]
        p1 = a[0] * b[1] + a[1] * b[0]
        p2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0]
        p3 = a[1] * b[2] + a[2] * b[1]
        p4 = a[2] * b[2]
        f = self.field
        r3, r4 = f._alpha3, f._alpha4
        return FieldElement(
            f,
            (
                p0 + p3 * r3[0] + p4 * r4[0],
                p1 + p3 * r3[1] + p4 * r4[1],
                p2 + p3 * r3[2] + p4 * r4[2],
            ),
        )

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        if self.is_rational:
            return FieldElement(self.field, (1 / self.coords[0], 0, 0))
        d, u, _ = poly_xgcd(self.lift(), self.field.minpoly)
        if d.degree != 0:
            # impossible for an irreducible modulus
            raise ZeroDivisionError("element not invertible; modulus reducible?")
        u = u / d[0]
        return FieldElement(self.field, (u[0], u[1], u[2]))

    def __truediv__(self, other) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    # -- invariants ------------------------------------------------------

    def _mul_matrix(self) -> list[list[Fraction]]:
        """Columns are the coordinates of self * basis_i."""
        cols = [self, self * self.field.generator(), self * self.field.generator() ** 2]
        return [[cols[j].coords[i] for j in range(3)] for i in range(3)]

    def charpoly(self) -> RationalPoly:
        """Monic cubic killed by this element (Cayley-Hamilton on the
        multiplication matrix)."""
        m = self._mul_matrix()
        tr = m[0][0] + m[1][1] + m[2][2]
        tr2 = sum(m[i][j] * m[j][i] for i in range(3) for j in range(3))
        e2 = (tr * tr - tr2) / 2
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        return RationalPoly([-det, e2, -tr, 1])

    def trace(self) -> Fraction:
        m = self._mul_matrix()
        return m[0][0] + m[1][1] + m[2][2]

    def norm(self) -> Fraction:
        m = self._mul_matrix()
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    def embeddings(self, bits: int = 128):
        """Numeric images under the three embeddings, field ordering."""
        emb = self.field.embeddings(bits)
        c0, c1, c2 = self.coords
        with mp.workprec(bits + 64):
            out = []
            for a in emb:
                out.append(mp.mpf(c0.numerator) / c0.denominator
                           + (mp.mpf(c1.numerator) / c1.denominator) * a
                           + (mp.mpf(c2.numerator) / c2.denominator) * a * a)
            return tuple(out)

    def sign_first_embedding(self, bits: int = 128) -> int:
        """Exactly certified sign of the first (real) embedding."""
        if not self:
            return 0
        if self.is_rational:
            c = self.coords[0]
            return -1 if c < 0 else 1
        prec = bits
        while prec <= 65536:
            with mp.workprec(prec + 64):
                v = self.embeddings(prec)[0]
                if abs(v) > mp.mpf(2) ** (-(prec // 2)):
                    return 1 if v > 0 else -1
            prec *= 2
        raise UndecidedError("embedding sign did not stabilize")


# -- roots of rational polynomials inside K --------------------------------


def roots_in_field(
    f: RationalPoly, field: CubicField, bits: int = 128
) -> list[FieldElement]:
    """Distinct roots of f (over Q) that lie in K, sorted by coordinates.

    Rational roots come from the complete rational-root finder.  For roots
    generating the full cubic, conjugate triples of numeric roots are
    matched to the embeddings, the power-basis coordinates reconstructed
    by continued fractions, and every candidate verified exactly; a
    candidate that looks rational to working precision but fails exact
    verification forces a precision escalation, and UndecidedError is
    raised if the ladder tops out while such candidates remain.

    Completeness for the non-rational roots is relative to the ladder: a
    root whose coordinates need denominators beyond 2^(prec/3) at the top
    precision would be missed.  The top rung (8x the starting bits, at
    least 1024) puts that bound far beyond anything occurring here, and
    all downstream consumers re-verify group-theoretic consequences.
    """
    if f.is_zero:
        raise ValueError("every element is a root of the zero polynomial")
    rats = rational_roots(f)
    found: set[FieldElement] = {field(r) for r in rats}
    fprim, _ = f.primitive_model()
    if fprim.degree < 3:
        return sorted(found, key=lambda b: b.coords)
    deflated = False
    prec = bits
    cap = max(1024, 8 * bits)
    # a root lying in a totally real field has all conjugates real, so
    # only the real roots of f matter there; exact Sturm isolation finds
    # them all without touching the complex root clusters that stall
    # simultaneous iteration on large division polynomials.  Intervals
    # holding a known rational root are dropped; the rest each bracket
    # one irrational real root.
    if field.disc > 0:
        g, _, intervals = isolate_real_roots(fprim)
        rset = set(rats)
        intervals = [
            (lo, hi) for lo, hi in intervals if not any(lo < r < hi for r in rset)
        ]
        isolated = (g, intervals)
    else:
        isolated = None
    while prec <= cap:
        outcome = _embedded_roots_pass(fprim, field, prec, isolated)
        if outcome is None:
            if not deflated:
                deflated = True
                sf = squarefree_part(fprim)
                if sf.degree < fprim.degree:
                    fprim = sf.primitive_model()[0]
                    continue
            prec *= 2
            continue
        roots, suspicious = outcome
        found.update(roots)
        if not suspicious:
            return sorted(found, key=lambda b: b.coords)
        prec *= 2
    raise UndecidedError(
        f"roots_in_field: unresolved near-rational candidates at {cap} bits"
    )


def _embedded_roots_pass(
    fprim: RationalPoly,
    field: CubicField,
    prec: int,
    isolated: tuple[RationalPoly, list[tuple[Fraction, Fraction]]] | None,
) -> tuple[set[FieldElement], int] | None:
    """One precision rung.  None means the numeric layer failed (escalate
    or deflate); otherwise (verified roots, count of unresolved suspects).

    isolated carries the exact isolating intervals for totally real
    fields (real roots suffice there, and each is refined inside its own
    bracket); None means a complex field, where all roots are needed.
    """
    zf = [int(c) for c in fprim.coefficients]
    try:
        if isolated is not None:
            g, intervals = isolated
            zg = [int(c) for c in g.coefficients]
            reals = []
            cplx: list = []
            err = mp.mpf(0)
            for lo, hi in intervals:
                x, r = refine_isolated_root(zg, lo, hi, prec)
                reals.append(x)
                err = max(err, r)
            roots: list = list(reals)
        else:
            z = zf
            roots, _ = numeric_roots(z, prec)
            # replace the solver's heuristic estimate with a certified
            # per-root radius against the exact coefficients
            with mp.workprec(prec + 64):
                err = mp.mpf(0)
                for rt in roots:
                    err = max(err, certified_root_radius(z, rt))
    except NoConvergence:
        return None
    with mp.workprec(prec + 64):
        scale = max([mp.mpf(1)] + [abs(r) for r in roots])
        if err > mp.mpf(2) ** (-(prec // 2)) * scale:
            return None
    if isolated is None:
        reals, cplx = split_real_complex(roots, prec)

    d, _, minv = field.trace_basis()
    avals, arad = field.delta_embeddings(prec)
    lc = int(fprim.lc())
    found: set[FieldElement] = set()
    suspicious = 0
    with mp.workprec(prec + 64):
        if arad > mp.mpf(2) ** (-(prec // 2)) * max(
            [mp.mpf(1)] + [abs(a) for a in avals]
        ):
            return None
        if field.disc > 0:
            assignments = itertools.permutations(range(len(reals)), 3)
            triples = [
                (reals[i], reals[j], reals[k]) for i, j, k in assignments
            ]
        else:
            # both members of each conjugate pair occur in cplx, so both
            # pairings against the embedding order are enumerated
            triples = [
                (r, w, mp.conj(w)) for r in reals for w in cplx
            ]
        # powers of the delta embeddings and their perturbation bounds:
        # |(a+ra)^k - a^k| with everything made outward-safe by a factor 2
        apow = [[mp.mpf(1), a, a * a] for a in avals]
        abound = [
            [mp.mpf(0), arad, (2 * abs(a) + arad) * arad] for a in avals
        ]
        # certified margins: a true conjugate triple has
        # Tr(lc*beta*delta^k) integral; the numeric sum differs from the
        # true trace by at most lc * sum_l (err*|a_l|^k-bound + cross)
        margins = []
        for k in range(3):
            b = mp.mpf(0)
            for ell in range(3):
                amag = abs(apow[ell][k])
                b += err * (amag + abound[ell][k]) + scale * abound[ell][k]
            margins.append(2 * abs(lc) * b + mp.mpf(2) ** (-(prec // 2)))
        if max(margins) >= mp.mpf(0.25):
            return found, 1  # margins too loose to certify anything: climb
        for z1, z2, z3 in triples:
            zs = (z1, z2, z3)
            tvec = []
            ok = True
            for k in range(3):
                tk = lc * (zs[0] * apow[0][k] + zs[1] * apow[1][k] + zs[2] * apow[2][k])
                if abs(mp.im(tk)) > margins[k]:
                    ok = False
                    break
                tre = mp.re(tk)
                tn = mp.nint(tre)
                if abs(tre - tn) > margins[k]:
                    ok = False
                    break
                tvec.append(int(tn))
            if not ok:
                continue  # certified: not a conjugate triple of a root in K
            # exact reconstruction: [T_k] = lc * M * b over the delta
            # power basis, so b = Minv * T / lc with no rounding at all
            coords_delta = [
                sum(minv[i][j] * tvec[j] for j in range(3)) / lc for i in range(3)
            ]
            beta = FieldElement(
                field,
                (coords_delta[0], coords_delta[1] * d, coords_delta[2] * d * d),
            )
            if beta.is_rational:
                continue  # rational roots handled exactly elsewhere
            if beta in found:
                continue
            # margins certified the traces, so a failed exact check means
            # the triple belongs to some other cubic factor, not that the
            # precision was short
            if _verify_root(fprim, beta):
                found.add(beta)
    return found, suspicious


def _verify_root(f: RationalPoly, beta: FieldElement) -> bool:
    """Exact check that beta is a root of f.

    For large f dividing by the element's minimal cubic is much cheaper
    than Horner in the field.
    """
    if f.degree > 9:
        return (f % beta.charpoly()).is_zero
    val = f.evaluate(beta)
    if isinstance(val, FieldElement):
        return not val
    return val == 0


def sqrt_in_field(c: FieldElement, bits: int = 128) -> FieldElement | None:
    """A square root of c in its field, or None if none exists.

    Deterministic sign: the root whose first (real) embedding is positive.
    """
    field = c.field
    if not c:
        return field.zero()
    if c.is_rational:
        r = rational_sqrt(c.as_rational())
        # a rational non-square cannot become a square in an odd-degree field
        return None if r is None else field(r)
    t = c.charpoly()
    norm_form = RationalPoly([t[0], 0, t[1], 0, t[2], 0, 1])
    for beta in roots_in_field(norm_form, field, bits):
        if beta * beta == c:
            return beta if beta.sign_first_embedding(bits) > 0 else -beta
    return None


def nth_root_in_field(c: FieldElement, n: int, bits: int = 128) -> list[FieldElement]:
    """All beta in the field of c with beta^n == c.

    Any such beta is a root of T(z^n) where T is the characteristic
    polynomial of c, so the search reduces to a rational polynomial of
    degree 3n.
    """
    if n < 1:
        raise InputError("root exponent must be positive")
    field = c.field
    if not c:
        return [field.zero()]
    t = c.charpoly()
    form = squarefree_part(
        RationalPoly([t[0]]) + RationalPoly([t[1]]) * X ** n
        + RationalPoly([t[2]]) * X ** (2 * n) + X ** (3 * n)
    )
    return [beta for beta in roots_in_field(form, field, bits) if beta ** n == c]
