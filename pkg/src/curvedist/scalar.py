"""Exact scalars: rationals and quadratic extensions Q(sqrt k).

A Scalar is a + b*sqrt(k) with Fraction a, b and square-free integer k > 1,
canonicalized so that rationals always carry b = 0, k = 0.  A computation
mixes at most one k; combining different extensions raises
QuadraticFieldMismatch instead of silently building a tower.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Union

from .errors import QuadraticFieldMismatch, SqrtUnrepresentable, UnsupportedScalar

RationalLike = Union[int, Fraction, "Scalar"]

_TRIAL_LIMIT = 100_000
_SQUAREFREE_TRUST = 10_000_000_000  # residues below this are square-free after trial division


def square_free_decompose(n: int) -> tuple[int, int]:
    """n = s*s*k with k square-free, for n > 0.  Returns (s, k)."""
    if n <= 0:
        raise ValueError("need a positive integer")
    s, k, m = 1, 1, n
    d = 2
    while d * d <= m and d <= _TRIAL_LIMIT:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            s *= d ** (e // 2)
            if e % 2:
                k *= d
        d += 1 if d == 2 else 2
    if m > 1:
        r = isqrt(m)
        if r * r == m:
            s *= r
        elif m < _SQUAREFREE_TRUST:
            # all prime factors of m exceed the trial limit, so a square
            # factor would push m past the trust bound
            k *= m
        else:
            raise SqrtUnrepresentable(f"cannot certify square-free part of {n}")
    return s, k


class Scalar:
    __slots__ = ("a", "b", "k")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0, k: int = 0):
        if isinstance(a, Scalar):
            if b != 0 or k != 0:
                raise ValueError("cannot re-wrap a Scalar with extra parts")
            self.a, self.b, self.k = a.a, a.b, a.k
            return
        a = Fraction(a)
        b = Fraction(b)
        if b == 0:
            k = 0
        elif k <= 1:
            raise ValueError("sqrt part needs square-free k > 1")
        self.a, self.b, self.k = a, b, k

    # --- construction helpers -------------------------------------------

    @staticmethod
    def coerce(x: RationalLike) -> "Scalar":
        return x if isinstance(x, Scalar) else Scalar(Fraction(x))

    @staticmethod
    def parse(text: str) -> "Scalar":
        """Parse 'p/q' or 'p' into a rational Scalar."""
        return Scalar(Fraction(text.strip()))

    # --- field bookkeeping ----------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b != 0:
            raise UnsupportedScalar(f"{self} is irrational; a rational Scalar is required")
        return self.a

    def _join_k(self, other: "Scalar") -> int:
        if self.b == 0:
            return other.k
        if other.b == 0:
            return self.k
        if self.k != other.k:
            raise QuadraticFieldMismatch(f"sqrt({self.k}) vs sqrt({other.k})")
        return self.k

    # --- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = Scalar.coerce(other)
        k = self._join_k(other)
        return Scalar(self.a + other.a, self.b + other.b, k)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.a, -self.b, self.k)

    def __sub__(self, other):
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other):
        return Scalar.coerce(other) + (-self)

    def __mul__(self, other):
        other = Scalar.coerce(other)
        k = self._join_k(other)
        a = self.a * other.a + self.b * other.b * k
        b = self.a * other.b + self.b * other.a
        return Scalar(a, b, k)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.b == 0:
            if self.a == 0:
                raise ZeroDivisionError("Scalar division by zero")
            return Scalar(1 / self.a)
        norm = self.a * self.a - self.b * self.b * self.k
        # norm = 0 would make sqrt(k) rational, impossible for square-free k>1
        return Scalar(self.a / norm, -self.b / norm, self.k)

    def __truediv__(self, other):
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = Scalar(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # --- order ------------------------------------------------------------

    def sign(self) -> int:
        a, b, k = self.a, self.b, self.k
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 k
        lhs, rhs = a * a, b * b * k
        if a > 0:  # b < 0
            return 1 if lhs > rhs else -1 if lhs < rhs else 0
        return 1 if rhs > lhs else -1 if rhs < lhs else 0

    def __eq__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        other = Scalar.coerce(other)
        if self.b == 0 and other.b == 0:
            return self.a == other.a
        try:
            k = self._join_k(other)
        except QuadraticFieldMismatch:
            # sqrt(k1) and sqrt(k2) fields meet only in Q
            return False
        del k
        return self.a == other.a and self.b == other.b and (self.b == 0 or self.k == other.k)

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.k))

    def __lt__(self, other):
        return (self - Scalar.coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - Scalar.coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - Scalar.coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - Scalar.coerce(other)).sign() >= 0

    def __bool__(self):
        return self.a != 0 or self.b != 0

    # --- roots and approximation ------------------------------------------

    def sqrt(self) -> "Scalar":
        """Exact square root of a nonnegative rational Scalar."""
        if self.b != 0:
            raise SqrtUnrepresentable("nested radicals are not supported")
        if self.a < 0:
            raise ValueError("sqrt of a negative Scalar")
        if self.a == 0:
            return Scalar(0)
        p, q = self.a.numerator, self.a.denominator
        s, k = square_free_decompose(p * q)
        if k == 1:
            return Scalar(Fraction(s, q))
        return Scalar(0, Fraction(s, q), k)

    def sqrt_in_field(self) -> "Scalar | None":
        """Square root staying inside this Scalar's own field, or None.

        For a + b*sqrt(k) tries p + q*sqrt(k); used when solving quadratics
        over Q(sqrt k) without leaving the field.
        """
        if self.sign() < 0:
            return None
        if self.b == 0:
            try:
                r = self.sqrt()
            except SqrtUnrepresentable:
                return None
            return r if r.b == 0 or self.k in (0, r.k) else r
        # (p + q sqrt k)^2 = p^2 + q^2 k + 2pq sqrt k
        # p^2 solves z^2 - a z + b^2 k /4 = 0
        disc = self.a * self.a - self.b * self.b * self.k
        if disc < 0:
            return None
        rd = Scalar(disc).sqrt()
        if not rd.is_rational:
            return None
        for p2 in ((self.a + rd.a) / 2, (self.a - rd.a) / 2):
            if p2 < 0:
                continue
            rp = Scalar(p2).sqrt()
            if not rp.is_rational:
                continue
            p = rp.a
            if p == 0:
                continue
            q = self.b / (2 * p)
            cand = Scalar(p, q, self.k)
            if cand * cand == self and cand.sign() >= 0:
                return cand
        return None

    def bounds(self, scale: int = 64) -> tuple[Fraction, Fraction]:
        """Rational lo <= value <= hi with width about 2^-scale."""
        if self.b == 0:
            return self.a, self.a
        shift = 1 << scale
        num = self.k * shift * shift
        r = isqrt(num)
        lo_rt, hi_rt = Fraction(r, shift), Fraction(r + 1, shift)
        if self.b > 0:
            return self.a + self.b * lo_rt, self.a + self.b * hi_rt
        return self.a + self.b * hi_rt, self.a + self.b * lo_rt

    def __float__(self):
        lo, hi = self.bounds()
        return float((lo + hi) / 2)

    # --- presentation -------------------------------------------------------

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        parts = []
        if self.a != 0:
            parts.append(str(self.a))
        coef = "" if abs(self.b) == 1 else f"{abs(self.b)}*"
        term = f"{coef}sqrt({self.k})"
        if self.b < 0:
            term = "-" + term
        elif parts:
            term = "+" + term
        parts.append(term)
        return "".join(parts)

    def __repr__(self):
        return f"Scalar({self})"

    # --- JSON ---------------------------------------------------------------

    def to_json(self):
        if self.b == 0:
            return str(self.a)
        return {"a": str(self.a), "b": str(self.b), "k": self.k}

    @staticmethod
    def from_json(data) -> "Scalar":
        if isinstance(data, str):
            return Scalar(Fraction(data))
        if isinstance(data, int):
            return Scalar(data)
        if isinstance(data, dict):
            return Scalar(Fraction(data["a"]), Fraction(data.get("b", 0)), int(data.get("k", 0)))
        raise ValueError(f"cannot read Scalar from {data!r}")


ZERO = Scalar(0)
ONE = Scalar(1)
