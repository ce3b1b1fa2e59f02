"""Plane isometries and affine maps with exact entries.

An isometry is stored as the rotation/reflection data (c, s, sigma) with
c^2 + s^2 = 1 and sigma = +1 (direct) or -1 (reversing), plus a translation;
the matrix is ((c, -sigma*s), (s, sigma*c)).  AffineMap is the general
invertible case used by the conic stabilizer families.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .curves import CURVE_VARS, PlaneCurve
from .errors import InputError, NormalFormError, PreconditionError
from .mpoly import MPoly
from .scalar import Scalar

Point = tuple[Scalar, Scalar]


def _pt(p: Sequence) -> Point:
    return (Scalar.coerce(p[0]), Scalar.coerce(p[1]))


@dataclass(frozen=True)
class AffineMap:
    """p -> M p + t with det M != 0."""

    m11: Scalar
    m12: Scalar
    m21: Scalar
    m22: Scalar
    t1: Scalar
    t2: Scalar

    @staticmethod
    def create(matrix, translation=(0, 0)) -> "AffineMap":
        (a, b), (c, d) = matrix
        t1, t2 = translation
        out = AffineMap(
            Scalar.coerce(a),
            Scalar.coerce(b),
            Scalar.coerce(c),
            Scalar.coerce(d),
            Scalar.coerce(t1),
            Scalar.coerce(t2),
        )
        if not out.det():
            raise InputError("affine map must be invertible")
        return out

    def det(self) -> Scalar:
        return self.m11 * self.m22 - self.m12 * self.m21

    def apply(self, p: Sequence) -> Point:
        x, y = _pt(p)
        return (
            self.m11 * x + self.m12 * y + self.t1,
            self.m21 * x + self.m22 * y + self.t2,
        )

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self after other: (self.compose(other))(p) = self(other(p))."""
        o = other
        return AffineMap(
            self.m11 * o.m11 + self.m12 * o.m21,
            self.m11 * o.m12 + self.m12 * o.m22,
            self.m21 * o.m11 + self.m22 * o.m21,
            self.m21 * o.m12 + self.m22 * o.m22,
            self.m11 * o.t1 + self.m12 * o.t2 + self.t1,
            self.m21 * o.t1 + self.m22 * o.t2 + self.t2,
        )

    def inverse(self) -> "AffineMap":
        d = self.det()
        if not d:
            raise InputError("affine map is singular")
        inv = d.inverse()
        a, b, c, e = self.m22 * inv, -self.m12 * inv, -self.m21 * inv, self.m11 * inv
        return AffineMap(a, b, c, e, -(a * self.t1 + b * self.t2), -(c * self.t1 + e * self.t2))

    def matrix(self):
        return ((self.m11, self.m12), (self.m21, self.m22))

    def translation(self):
        return (self.t1, self.t2)

    def __str__(self):
        return (
            f"({self.m11}*x + {self.m12}*y + {self.t1}, "
            f"{self.m21}*x + {self.m22}*y + {self.t2})"
        )


class Isometry:
    """Distance-preserving affine map; kind is derived, not stored loosely."""

    __slots__ = ("c", "s", "sigma", "t1", "t2")

    def __init__(self, c, s, sigma: int, t1=0, t2=0):
        c, s = Scalar.coerce(c), Scalar.coerce(s)
        if sigma not in (1, -1):
            raise InputError("sigma must be +1 or -1")
        if c * c + s * s != Scalar(1):
            raise InputError("isometry needs c^2 + s^2 = 1 exactly")
        self.c = c
        self.s = s
        self.sigma = sigma
        self.t1 = Scalar.coerce(t1)
        self.t2 = Scalar.coerce(t2)

    @staticmethod
    def identity() -> "Isometry":
        return Isometry(1, 0, 1)

    @staticmethod
    def translation(t1, t2) -> "Isometry":
        return Isometry(1, 0, 1, t1, t2)

    @staticmethod
    def rotation(c, s, about=(0, 0)) -> "Isometry":
        """Rotation with cos = c, sin = s about the given point."""
        a, b = _pt(about)
        c, s = Scalar.coerce(c), Scalar.coerce(s)
        t1 = a - (c * a - s * b)
        t2 = b - (s * a + c * b)
        return Isometry(c, s, 1, t1, t2)

    @staticmethod
    def reflection(c, s, through=(0, 0)) -> "Isometry":
        """Reflection whose matrix is ((c, s), (s, -c)), fixing `through`."""
        a, b = _pt(through)
        c, s = Scalar.coerce(c), Scalar.coerce(s)
        t1 = a - (c * a + s * b)
        t2 = b - (s * a - c * b)
        return Isometry(c, s, -1, t1, t2)

    @property
    def kind(self) -> str:
        direct = self.sigma == 1
        if direct:
            if self.c == Scalar(1) and not self.s:
                return "identity" if not self.t1 and not self.t2 else "translation"
            return "rotation"
        # sigma = -1: reflection iff R t = -t, i.e. T squares to the identity
        r1 = (self.c + 1) * self.t1 + self.s * self.t2
        r2 = self.s * self.t1 + (1 - self.c) * self.t2
        return "reflection" if not r1 and not r2 else "glide"

    def matrix(self):
        sg = Scalar(self.sigma)
        return ((self.c, -sg * self.s), (self.s, sg * self.c))

    def as_affine(self) -> AffineMap:
        (a, b), (c, d) = self.matrix()
        return AffineMap(a, b, c, d, self.t1, self.t2)

    def apply(self, p: Sequence) -> Point:
        return self.as_affine().apply(p)

    def compose(self, other: "Isometry") -> "Isometry":
        a = self.as_affine().compose(other.as_affine())
        sigma = self.sigma * other.sigma
        # matrix column (m11, m21) is always (c, s)
        return Isometry(a.m11, a.m21, sigma, a.t1, a.t2)

    def inverse(self) -> "Isometry":
        a = self.as_affine().inverse()
        return Isometry(a.m11, a.m21, self.sigma, a.t1, a.t2)

    def key(self):
        return (self.sigma, self.c, self.s, self.t1, self.t2)

    def __eq__(self, other):
        return isinstance(other, Isometry) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Isometry(kind={self.kind}, c={self.c}, s={self.s}, sigma={self.sigma:+d}, t=({self.t1}, {self.t2}))"


def _images(inv: AffineMap) -> dict[str, MPoly]:
    x = MPoly.var(CURVE_VARS, "x")
    y = MPoly.var(CURVE_VARS, "y")
    return {
        "x": x * inv.m11 + y * inv.m12 + inv.t1,
        "y": x * inv.m21 + y * inv.m22 + inv.t2,
    }


def _as_affine(T) -> AffineMap:
    if isinstance(T, Isometry):
        return T.as_affine()
    if isinstance(T, AffineMap):
        return T
    raise InputError(f"not an affine map: {T!r}")


def apply_to_poly(T, f: MPoly) -> MPoly:
    """Defining polynomial of T(Z(f)), i.e. f composed with T^-1."""
    inv = _as_affine(T).inverse()
    return f.subst(_images(inv))


def fixes_curve(T, curve: PlaneCurve) -> bool:
    """True iff f(T^-1(x,y)) is a nonzero scalar multiple of f."""
    f = curve.f
    g = apply_to_poly(T, f)
    exp, fc = f.leading()
    lam = g.coefficient(exp) * fc.inverse()
    if not lam:
        return False
    return g == f * lam


def isometry_from_point_pairs(pi, pk, pj, pl) -> Isometry:
    """The unique direct isometry taking pi -> pj and pk -> pl; requires
    |pi pk| = |pj pl| and pi != pk."""
    pi, pk, pj, pl = _pt(pi), _pt(pk), _pt(pj), _pt(pl)
    ux, uy = pk[0] - pi[0], pk[1] - pi[1]
    vx, vy = pl[0] - pj[0], pl[1] - pj[1]
    n = ux * ux + uy * uy
    if not n:
        raise PreconditionError("source points coincide")
    if n != vx * vx + vy * vy:
        raise PreconditionError("segment lengths differ")
    inv = n.inverse()
    c = (ux * vx + uy * vy) * inv
    s = (ux * vy - uy * vx) * inv
    t1 = pj[0] - (c * pi[0] - s * pi[1])
    t2 = pj[1] - (s * pi[0] + c * pi[1])
    return Isometry(c, s, 1, t1, t2)


def reflection_across_line(p, q) -> Isometry:
    """Reflection in the line through two distinct points."""
    p, q = _pt(p), _pt(q)
    ux, uy = q[0] - p[0], q[1] - p[1]
    n = ux * ux + uy * uy
    if not n:
        raise PreconditionError("need two distinct points for a line")
    inv = n.inverse()
    c = (ux * ux - uy * uy) * inv
    s = (2 * ux * uy) * inv
    return Isometry.reflection(c, s, through=p)


# ---------------------------------------------------------------------------
# Conic stabilizer families (three normal forms)


def _stab_hyperbola(f: MPoly, r) -> AffineMap:
    # y^2 + s*x*y - t with s, t != 0, up to scalar
    r = Scalar.coerce(r)
    if not r:
        raise InputError("parameter r must be nonzero")
    lead = f.coefficient((0, 2))
    if not lead:
        raise NormalFormError("expected y^2 + s*x*y = t")
    inv = lead.inverse()
    s = f.coefficient((1, 1)) * inv
    t = -f.coefficient((0, 0)) * inv
    others = [(2, 0), (1, 0), (0, 1)]
    if not s or not t or any(f.coefficient(e) for e in others):
        raise NormalFormError("expected y^2 + s*x*y = t with s, t nonzero")
    r2 = r * r
    return AffineMap.create(((r, (r2 - 1) / (r * s)), (0, r.inverse())))


def _stab_ellipse(f: MPoly, angle, sign: int) -> AffineMap:
    # s^2 x^2 + t^2 y^2 = 1, up to scalar
    co, si = Scalar.coerce(angle[0]), Scalar.coerce(angle[1])
    if co * co + si * si != Scalar(1):
        raise InputError("angle must satisfy cos^2 + sin^2 = 1 exactly")
    konst = f.coefficient((0, 0))
    if not konst:
        raise NormalFormError("expected s^2 x^2 + t^2 y^2 = 1")
    inv = -konst.inverse()
    s2 = f.coefficient((2, 0)) * inv
    t2 = f.coefficient((0, 2)) * inv
    bad = [(1, 1), (1, 0), (0, 1)]
    if s2.sign() <= 0 or t2.sign() <= 0 or any(f.coefficient(e) for e in bad):
        raise NormalFormError("expected s^2 x^2 + t^2 y^2 = 1 with positive coefficients")
    try:
        ts = (t2 / s2).sqrt()  # t/s
    except Exception as e:
        raise NormalFormError(f"axis ratio sqrt not representable: {e}")
    st = ts.inverse()  # s/t
    if sign >= 0:
        return AffineMap.create(((co, ts * si), (st * si, -co)))
    return AffineMap.create(((co, -(ts * si)), (st * si, co)))


def _stab_parabola(f: MPoly, c, sign: int) -> AffineMap:
    # y = s x^2, up to scalar
    cc = Scalar.coerce(c)
    ylead = f.coefficient((0, 1))
    if not ylead:
        raise NormalFormError("expected y = s*x^2")
    inv = ylead.inverse()
    s = -f.coefficient((2, 0)) * inv
    bad = [(0, 2), (1, 1), (1, 0), (0, 0)]
    if not s or any(f.coefficient(e) for e in bad):
        raise NormalFormError("expected y = s*x^2")
    pm = Scalar(1 if sign >= 0 else -1)
    return AffineMap.create(
        ((pm, Scalar(0)), (pm * 2 * s * cc, Scalar(1))),
        (cc, s * cc * cc),
    )


def conic_stabilizer(curve: PlaneCurve, param, sign: int = 1) -> AffineMap:
    """A member of the affine stabilizer family of a conic in normal form.

    Normal forms and parameters: y^2 + s*x*y = t takes a nonzero scalar r;
    s^2 x^2 + t^2 y^2 = 1 takes a rational Pythagorean pair (cos, sin) plus a
    sign; y = s*x^2 takes a shift c plus a sign."""
    f = curve.f
    if f.total_degree() != 2:
        raise NormalFormError("conic_stabilizer needs a degree-2 curve")
    if f.coefficient((0, 2)) and f.coefficient((1, 1)):
        T = _stab_hyperbola(f, param)
    elif isinstance(param, (tuple, list)) and len(param) == 2:
        T = _stab_ellipse(f, param, sign)
    else:
        T = _stab_parabola(f, param, sign)
    assert fixes_curve(T, curve), "stabilizer member must fix the curve"
    return T
