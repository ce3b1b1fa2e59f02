"""Dense univariate polynomials over Scalar, Sturm sequences, and exact
real root isolation.

Roots come back either as exact rational Scalars or as RealAlgebraic
values: an isolating interval with rational endpoints plus the square-free
defining polynomial, refinable to any width.  RealAlgebraic also supplies
the exact predicates (sign of u(alpha), equality, ordering) that the curve
intersection and symmetry solvers build on.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Sequence, Union

from .errors import ZeroPolynomial
from .scalar import Scalar

RootValue = Union[Scalar, "RealAlgebraic"]

_FACTOR_TRIAL = 100_000
_CANDIDATE_CAP = 20_000


class UPoly:
    """Coefficients low to high; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Scalar.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def zero() -> "UPoly":
        return UPoly()

    @staticmethod
    def const(c) -> "UPoly":
        return UPoly([c])

    @staticmethod
    def x(power: int = 1) -> "UPoly":
        return UPoly([0] * power + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Scalar:
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, UPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly(out)

    def __neg__(self):
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            s = Scalar.coerce(other)
            return UPoly([c * s for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return UPoly()
        out = [Scalar(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out, base = UPoly.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "UPoly"):
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dd, dv = len(rem) - 1, other.degree
        if dd < dv:
            return UPoly(), self
        inv = other.lc().inverse()
        quot = [Scalar(0)] * (dd - dv + 1)
        for i in range(dd, dv - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = c * inv
            quot[i - dv] = q
            for j, b in enumerate(other.coeffs):
                rem[i - dv + j] = rem[i - dv + j] - q * b
        return UPoly(quot), UPoly(rem[:dv])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self) -> "UPoly":
        return UPoly([c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x) -> Scalar:
        acc = Scalar(0)
        xv = Scalar.coerce(x)
        for c in reversed(self.coeffs):
            acc = acc * xv + c
        return acc

    def eval_interval(self, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
        """Sound rational enclosure of the image of [lo, hi]."""
        accLo, accHi = Fraction(0), Fraction(0)
        for c in reversed(self.coeffs):
            cl, ch = c.bounds()
            prods = (accLo * lo, accLo * hi, accHi * lo, accHi * hi)
            accLo, accHi = min(prods) + cl, max(prods) + ch
        return accLo, accHi

    def compose_affine(self, a, b) -> "UPoly":
        """p(a*x + b), exact."""
        lin = UPoly([b, a])
        acc = UPoly()
        for c in reversed(self.coeffs):
            acc = acc * lin + UPoly.const(c)
        return acc

    def compose(self, inner: "UPoly") -> "UPoly":
        acc = UPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + UPoly.const(c)
        return acc

    def monic(self) -> "UPoly":
        if self.is_zero:
            return self
        inv = self.lc().inverse()
        return UPoly([c * inv for c in self.coeffs])

    def primitive_signed(self) -> "UPoly":
        """Scale by a positive rational so rational coefficients become
        coprime integers.  Sign pattern is preserved; irrational
        coefficients pass through untouched."""
        if self.is_zero or any(not c.is_rational for c in self.coeffs):
            return self
        from math import gcd, lcm

        den = lcm(*(c.a.denominator for c in self.coeffs))
        ints = [c.a.numerator * (den // c.a.denominator) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        return UPoly([Fraction(v, g) for v in ints])

    def is_rational(self) -> bool:
        return all(c.is_rational for c in self.coeffs)

    def gcd(self, other: "UPoly") -> "UPoly":
        """Monic gcd over the coefficient field."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
            b = b.primitive_signed()
        return a.monic() if not a.is_zero else a

    def squarefree_part(self) -> "UPoly":
        if self.degree < 1:
            return self.monic()
        g = self.gcd(self.derivative())
        if g.degree == 0:
            return self.monic()
        return (self // g).monic()

    def cauchy_bound(self) -> Fraction:
        """Strict bound B with every real root in (-B, B)."""
        lc = abs(self.lc())
        worst = Fraction(0)
        for c in self.coeffs[:-1]:
            hi = (abs(c) / lc).bounds()[1]
            if hi > worst:
                worst = hi
        return worst + 1

    def shift_var(self, k: int) -> "UPoly":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return UPoly([Scalar(0)] * k + list(self.coeffs))

    def to_string(self, var: str = "x") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            mag = abs(c)
            body = str(mag) if (not mono or mag != 1) else ""
            txt = body + ("*" if body and mono else "") + mono
            if not parts:
                parts.append(("-" if c.sign() < 0 else "") + txt)
            else:
                parts.append((" - " if c.sign() < 0 else " + ") + txt)
        return "".join(parts)

    def __repr__(self):
        return f"UPoly({self.to_string()})"


# ---------------------------------------------------------------------------
# Sturm machinery


def sturm_chain(p: UPoly) -> list[UPoly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero and chain[-1].degree >= 1:
        rem = chain[-2] % chain[-1]
        if rem.is_zero:
            break
        chain.append((-rem).primitive_signed())
    if chain[-1].is_zero:
        chain.pop()
    return chain


def _variations(signs: Sequence[int]) -> int:
    out, prev = 0, 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            out += 1
        prev = s
    return out


def variations_at(chain: Sequence[UPoly], x: Fraction) -> int:
    return _variations([q(x).sign() for q in chain])


def count_roots_between(chain: Sequence[UPoly], lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in (lo, hi); endpoints must not be roots of chain[0]."""
    return variations_at(chain, lo) - variations_at(chain, hi)


# ---------------------------------------------------------------------------
# Rational root extraction (with a factoring budget)


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _divisors_bounded(n: int) -> list[int] | None:
    """All positive divisors of n, or None when n will not factor in budget."""
    n = abs(n)
    if n == 0:
        return None
    factors = {}
    d = 2
    while d * d <= n and d <= _FACTOR_TRIAL:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        if not _is_probable_prime(n):
            return None
        factors[n] = factors.get(n, 0) + 1
    divs = [1]
    for p, e in factors.items():
        divs = [v * p**i for v in divs for i in range(e + 1)]
        if len(divs) > _CANDIDATE_CAP:
            return None
    return sorted(divs)


def _rational_roots(q: UPoly) -> tuple[list[Fraction], UPoly]:
    """Deflate every rational root found within budget.  q must be
    square-free with rational coefficients."""
    roots: list[Fraction] = []
    if not q.is_rational():
        return roots, q
    q = q.primitive_signed()
    if q.degree >= 1 and not q.coeffs[0]:
        roots.append(Fraction(0))
        q = UPoly(q.coeffs[1:])
    if q.degree == 1:
        roots.append((-q.coeffs[0] / q.coeffs[1]).as_fraction())
        return roots, UPoly.const(1)
    if q.degree < 1:
        return roots, q
    num_divs = _divisors_bounded(q.coeffs[0].a.numerator)
    den_divs = _divisors_bounded(q.coeffs[-1].a.numerator)
    if num_divs is None or den_divs is None or len(num_divs) * len(den_divs) > _CANDIDATE_CAP:
        return roots, q
    seen = set()
    for top in num_divs:
        for bot in den_divs:
            cand = Fraction(top, bot)
            for val in (cand, -cand):
                if val in seen:
                    continue
                seen.add(val)
                if not q(val):
                    roots.append(val)
                    q = q // UPoly([-val, 1])
                    if q.degree == 1:
                        roots.append((-q.coeffs[0] / q.coeffs[1]).as_fraction())
                        return roots, UPoly.const(1)
    return roots, q


# ---------------------------------------------------------------------------
# Real algebraic numbers


class RealAlgebraic:
    """One real root of a square-free polynomial, isolated in (lo, hi).

    Invariants: poly(lo) != 0 != poly(hi), poly has exactly one root in the
    open interval, and poly(lo)*poly(hi) < 0 so plain bisection refines.
    """

    __slots__ = ("poly", "lo", "hi", "_chain")

    def __init__(self, poly: UPoly, lo: Fraction, hi: Fraction):
        self.poly = poly
        self.lo = lo
        self.hi = hi
        self._chain = None

    def chain(self):
        if self._chain is None:
            self._chain = sturm_chain(self.poly)
        return self._chain

    def refine(self, steps: int = 1) -> None:
        for _ in range(steps):
            mid = (self.lo + self.hi) / 2
            v = self.poly(mid)
            if not v:
                # the root is exactly mid; pinch the interval around it
                w = (self.hi - self.lo) / 8
                self.lo, self.hi = mid - w, mid + w
                continue
            if (v.sign() > 0) == (self.poly(self.hi).sign() > 0):
                self.hi = mid
            else:
                self.lo = mid

    def refine_below(self, width: Fraction) -> None:
        while self.hi - self.lo > width:
            self.refine()

    def width(self) -> Fraction:
        return self.hi - self.lo

    def exact_rational(self) -> Fraction | None:
        """Detect the (unlikely) case that the isolated root is a rational
        midpoint we have already landed on."""
        mid = (self.lo + self.hi) / 2
        if not self.poly(mid):
            return mid
        return None

    def sign_of(self, u: UPoly) -> int:
        """Exact sign of u(alpha)."""
        if u.is_zero:
            return 0
        g = self.poly.gcd(u)
        if g.degree >= 1 and self._contains_root_of(g):
            return 0
        while True:
            lo, hi = u.eval_interval(self.lo, self.hi)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            self.refine()

    def is_root_of(self, u: UPoly) -> bool:
        return self.sign_of(u) == 0

    def _contains_root_of(self, g: UPoly) -> bool:
        # g divides self.poly, so any root of g inside the interval IS alpha
        ch = sturm_chain(g)
        lo, hi = self.lo, self.hi
        # endpoints of the isolating interval are not roots of poly, but can
        # they be roots of g? g | poly, so no.
        return count_roots_between(ch, lo, hi) > 0

    # ordering against rationals and other algebraics ----------------------

    def compare_rational(self, c: Fraction) -> int:
        if c <= self.lo:
            # alpha > lo; equal only if alpha == c == lo, impossible (lo not a root)
            return 1
        if c >= self.hi:
            return -1
        if not self.poly(c):
            return 0
        while self.lo < c < self.hi:
            self.refine()
        return 1 if c <= self.lo else -1

    def compare(self, other: RootValue) -> int:
        if isinstance(other, Scalar):
            if other.is_rational:
                return self.compare_rational(other.as_fraction())
            if self.sign_of(_min_quadratic(other)) == 0:
                # alpha is a + b*sqrt(k) or its conjugate; same branch means
                # the same side of the rational midpoint a
                if (self.compare_rational(other.a) > 0) == (other.b > 0):
                    return 0
                # alpha is the conjugate: alpha - other = -2b*sqrt(k)
                return 1 if other.b < 0 else -1
            scale = 96
            while True:
                olo, ohi = other.bounds(scale)
                if self.lo > ohi:
                    return 1
                if self.hi < olo:
                    return -1
                self.refine(2)
                scale += 32
        g = self.poly.gcd(other.poly)
        if g.degree >= 1:
            a, b = max(self.lo, other.lo), min(self.hi, other.hi)
            # roots of g are roots of both polynomials, so neither interval
            # endpoint can be one of them
            if a < b and count_roots_between(sturm_chain(g), a, b) > 0:
                # that root lies in both isolating intervals: it is alpha
                # and beta at once
                return 0
        while True:
            if self.lo >= other.hi:
                return 1
            if self.hi <= other.lo:
                return -1
            self.refine()
            other.refine()

    def __float__(self):
        self.refine_below(Fraction(1, 1 << 40))
        return float((self.lo + self.hi) / 2)

    def __repr__(self):
        return f"RealAlgebraic({self.poly.to_string()} in ({self.lo}, {self.hi}))"


def _min_quadratic(s: Scalar) -> UPoly:
    """A rational polynomial vanishing at a + b*sqrt(k)."""
    if s.is_rational:
        return UPoly([-s.a, 1])
    # (x - a)^2 = b^2 k
    return UPoly([s.a * s.a - s.b * s.b * s.k, -2 * s.a, 1])


def root_sign(v: RootValue) -> int:
    if isinstance(v, Scalar):
        return v.sign()
    return v.compare_rational(Fraction(0))


def root_bounds(v: RootValue, width: Fraction | None = None) -> tuple[Fraction, Fraction]:
    if isinstance(v, Scalar):
        if width is None:
            return v.bounds(96)
        scale = 8
        lo, hi = v.bounds(scale)
        while hi - lo > width:
            scale += 32
            lo, hi = v.bounds(scale)
        return lo, hi
    if width is not None:
        v.refine_below(width)
    return v.lo, v.hi


def compare_roots(a: RootValue, b: RootValue) -> int:
    if isinstance(a, Scalar) and isinstance(b, Scalar):
        return (a - b).sign()
    if isinstance(a, Scalar):
        return -b.compare(a)
    return a.compare(b)


# ---------------------------------------------------------------------------
# Isolation


def isolate_real_roots(p: UPoly) -> list[RootValue]:
    """All distinct real roots of p, exact rationals where the budget finds
    them, isolating intervals otherwise, in increasing order."""
    if p.is_zero:
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    if p.degree < 1:
        return []
    q = p.squarefree_part()
    found: list[RootValue] = []
    rat, q = _rational_roots(q)
    found.extend(Scalar(r) for r in rat)
    if q.degree >= 1:
        found.extend(_sturm_isolate(q))
    found.sort(key=cmp_to_key(compare_roots))
    return found


def _sturm_isolate(q: UPoly) -> list[RootValue]:
    """Isolate roots of square-free q by Sturm bisection from the Cauchy
    bound.  A bisection point that is itself a root is reported exactly and
    excised with a root-free guard gap around it."""
    out: list[RootValue] = []
    bound = q.cauchy_bound()
    chain = sturm_chain(q)
    var_cache: dict[Fraction, int] = {}

    def vat(x: Fraction) -> int:
        if x not in var_cache:
            var_cache[x] = variations_at(chain, x)
        return var_cache[x]

    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = vat(lo) - vat(hi)
        if n == 0:
            continue
        if n == 1:
            out.append(RealAlgebraic(q, lo, hi))
            continue
        mid = (lo + hi) / 2
        if not q(mid):
            out.append(Scalar(mid))
            delta = (hi - lo) / 4
            while q(mid - delta).sign() == 0 or q(mid + delta).sign() == 0 or (
                vat(mid - delta) - vat(mid + delta) != 1
            ):
                delta /= 2
            stack.append((lo, mid - delta))
            stack.append((mid + delta, hi))
            continue
        stack.append((lo, mid))
        stack.append((mid, hi))
    return out
