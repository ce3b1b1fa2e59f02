"""Sparse multivariate polynomials over Scalar.

Terms map exponent tuples (aligned with an explicit variable tuple) to
nonzero Scalars; graded-lex gives the deterministic term order used for
leading terms and printing.  Resultants run the fraction-free subresultant
remainder sequence; the Sylvester matrix is exposed separately so tests can
check the resultant against an independent determinant.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd, lcm as int_lcm
from typing import Iterable, Mapping, Sequence

from .errors import DegreeError, ZeroPolynomial
from .scalar import Scalar
from .upoly import UPoly


def _grlex_key(exp: tuple[int, ...]):
    return (sum(exp), exp)


class MPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple[int, ...], object] | None = None):
        self.vars = tuple(vars)
        clean: dict[tuple[int, ...], Scalar] = {}
        if terms:
            n = len(self.vars)
            for exp, c in terms.items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != n or any(e < 0 for e in exp):
                    raise ValueError(f"bad exponent {exp} for vars {self.vars}")
                c = Scalar.coerce(c)
                if c:
                    clean[exp] = clean.get(exp, Scalar(0)) + c
                    if not clean[exp]:
                        del clean[exp]
        self.terms = clean

    # --- constructors -----------------------------------------------------

    @staticmethod
    def zero(vars: Sequence[str]) -> "MPoly":
        return MPoly(vars)

    @staticmethod
    def const(vars: Sequence[str], c) -> "MPoly":
        return MPoly(vars, {(0,) * len(vars): c})

    @staticmethod
    def var(vars: Sequence[str], name: str) -> "MPoly":
        i = tuple(vars).index(name)
        exp = [0] * len(vars)
        exp[i] = 1
        return MPoly(vars, {tuple(exp): 1})

    @staticmethod
    def from_upoly(p: UPoly, vars: Sequence[str], name: str) -> "MPoly":
        i = tuple(vars).index(name)
        terms = {}
        for e, c in enumerate(p.coeffs):
            if c:
                exp = [0] * len(vars)
                exp[i] = e
                terms[tuple(exp)] = c
        return MPoly(vars, terms)

    # --- basic queries ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Scalar:
        if self.is_zero:
            return Scalar(0)
        if not self.is_constant:
            raise DegreeError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if self.is_zero:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        if self.is_zero:
            return -1
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def leading(self) -> tuple[tuple[int, ...], Scalar]:
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no leading term")
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def coefficient(self, exp: tuple[int, ...]) -> Scalar:
        return self.terms.get(tuple(exp), Scalar(0))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Scalar]]:
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def _check_ring(self, other: "MPoly") -> None:
        if self.vars != other.vars:
            raise ValueError(f"mixed rings {self.vars} vs {other.vars}")

    def is_rational(self) -> bool:
        return all(c.is_rational for c in self.terms.values())

    # --- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = MPoly.const(self.vars, other)
        self._check_ring(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, Scalar(0)) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        r = MPoly(self.vars)
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = MPoly(self.vars)
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = MPoly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            s = Scalar.coerce(other)
            r = MPoly(self.vars)
            if s:
                r.terms = {e: c * s for e, c in self.terms.items()}
            return r
        self._check_ring(other)
        out: dict[tuple[int, ...], Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Scalar(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        r = MPoly(self.vars)
        r.terms = out
        return r

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = MPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, MPoly) and self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # --- substitution and views ------------------------------------------------

    def evaluate(self, values: Mapping[str, object]) -> Scalar:
        missing = [v for v in self.vars if v not in values]
        if missing:
            raise ValueError(f"missing values for {missing}")
        vals = [Scalar.coerce(values[v]) for v in self.vars]
        acc = Scalar(0)
        for exp, c in self.terms.items():
            t = c
            for v, e in zip(vals, exp):
                if e:
                    t = t * v**e
            acc = acc + t
        return acc

    def partial_eval(self, values: Mapping[str, object]) -> "MPoly":
        idx = {self.vars.index(v): Scalar.coerce(x) for v, x in values.items()}
        out: dict[tuple[int, ...], Scalar] = {}
        for exp, c in self.terms.items():
            t = c
            new = list(exp)
            for i, x in idx.items():
                if exp[i]:
                    t = t * x ** exp[i]
                new[i] = 0
            if t:
                e = tuple(new)
                s = out.get(e, Scalar(0)) + t
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        r = MPoly(self.vars)
        r.terms = out
        return r

    def subst(self, images: Mapping[str, "MPoly"]) -> "MPoly":
        """Simultaneous substitution var -> polynomial (same ring)."""
        for img in images.values():
            self._check_ring(img)
        cache: dict[tuple[int, int], MPoly] = {}

        def power(i: int, e: int) -> MPoly:
            key = (i, e)
            if key not in cache:
                name = self.vars[i]
                base = images.get(name, MPoly.var(self.vars, name))
                cache[key] = base**e
            return cache[key]

        acc = MPoly.zero(self.vars)
        for exp, c in self.terms.items():
            t = MPoly.const(self.vars, c)
            for i, e in enumerate(exp):
                if e:
                    t = t * power(i, e)
            acc = acc + t
        return acc

    def drop_var(self, var: str) -> "MPoly":
        i = self.vars.index(var)
        if self.degree_in(var) > 0:
            raise DegreeError(f"{var} still occurs")
        newvars = self.vars[:i] + self.vars[i + 1 :]
        r = MPoly(newvars)
        r.terms = {e[:i] + e[i + 1 :]: c for e, c in self.terms.items()}
        return r

    def with_vars(self, newvars: Sequence[str]) -> "MPoly":
        """Reinterpret in a larger/reordered ring containing all current vars."""
        newvars = tuple(newvars)
        pos = [newvars.index(v) for v in self.vars]
        out: dict[tuple[int, ...], Scalar] = {}
        for exp, c in self.terms.items():
            e = [0] * len(newvars)
            for p, v in zip(pos, exp):
                e[p] = v
            out[tuple(e)] = c
        r = MPoly(newvars)
        r.terms = out
        return r

    def rename_vars(self, mapping: Mapping[str, str]) -> "MPoly":
        newvars = tuple(mapping.get(v, v) for v in self.vars)
        if len(set(newvars)) != len(newvars):
            raise ValueError("renaming collides")
        r = MPoly(newvars)
        r.terms = dict(self.terms)
        return r

    def coeffs_in(self, var: str) -> list["MPoly"]:
        """Dense coefficient list in var; entries live in the ring without var."""
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1 :]
        d = self.degree_in(var)
        if self.is_zero:
            return []
        buckets: list[dict] = [dict() for _ in range(d + 1)]
        for exp, c in self.terms.items():
            buckets[exp[i]][exp[:i] + exp[i + 1 :]] = c
        out = []
        for b in buckets:
            p = MPoly(rest)
            p.terms = b
            out.append(p)
        return out

    @staticmethod
    def from_coeff_list(coeffs: Sequence["MPoly"], var: str, position: int | None = None) -> "MPoly":
        """Inverse of coeffs_in: rebuild with var inserted (appended by default)."""
        if not coeffs:
            raise ValueError("empty coefficient list")
        rest = coeffs[0].vars
        pos = len(rest) if position is None else position
        newvars = rest[:pos] + (var,) + rest[pos:]
        out: dict[tuple[int, ...], Scalar] = {}
        for e, p in enumerate(coeffs):
            for exp, c in p.terms.items():
                out[exp[:pos] + (e,) + exp[pos:]] = c
        r = MPoly(newvars)
        r.terms = out
        return r

    def as_upoly(self, var: str) -> UPoly:
        i = self.vars.index(var)
        d = self.degree_in(var)
        coeffs = [Scalar(0)] * (d + 1) if d >= 0 else []
        for exp, c in self.terms.items():
            if any(e and j != i for j, e in enumerate(exp)):
                raise DegreeError("polynomial is not univariate in " + var)
            coeffs[exp[i]] = c
        return UPoly(coeffs)

    def derivative(self, var: str) -> "MPoly":
        i = self.vars.index(var)
        out: dict[tuple[int, ...], Scalar] = {}
        for exp, c in self.terms.items():
            if exp[i]:
                e = list(exp)
                e[i] -= 1
                out[tuple(e)] = c * exp[i]
        r = MPoly(self.vars)
        r.terms = out
        return r

    def homogeneous_part(self, d: int) -> "MPoly":
        r = MPoly(self.vars)
        r.terms = {e: c for e, c in self.terms.items() if sum(e) == d}
        return r

    def collect(self, group_vars: Sequence[str]) -> dict[tuple[int, ...], "MPoly"]:
        """Group terms by their exponents in group_vars; values are
        coefficient polynomials in the remaining variables."""
        gidx = [self.vars.index(v) for v in group_vars]
        rest = tuple(v for v in self.vars if v not in group_vars)
        ridx = [self.vars.index(v) for v in rest]
        out: dict[tuple[int, ...], MPoly] = {}
        for exp, c in self.terms.items():
            key = tuple(exp[i] for i in gidx)
            rexp = tuple(exp[i] for i in ridx)
            if key not in out:
                out[key] = MPoly(rest)
            out[key].terms[rexp] = c
        return out

    # --- printing ---------------------------------------------------------------

    def to_string(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.vars, exp) if e
            )
            neg = c.sign() < 0
            mag = abs(c)
            if mag.is_rational:
                body = str(mag.as_fraction())
            else:
                body = f"({mag})"
            if mono and mag == 1 and mag.is_rational:
                text = mono
            elif mono:
                text = f"{body}*{mono}"
            else:
                text = body
            if not parts:
                parts.append(("-" if neg else "") + text)
            else:
                parts.append((" - " if neg else " + ") + text)
        return "".join(parts)

    def __repr__(self):
        return f"MPoly[{','.join(self.vars)}]({self.to_string()})"


# ---------------------------------------------------------------------------
# Exact division, content, gcd


def exact_div(a: MPoly, b: MPoly) -> MPoly:
    """a / b when the division is exact; raises DegreeError otherwise."""
    a._check_ring(b)
    if b.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero:
        return a
    if b.is_constant:
        return a * b.constant_value().inverse()
    quot = MPoly.zero(a.vars)
    rem = a
    bexp, bc = b.leading()
    binv = bc.inverse()
    while not rem.is_zero:
        rexp, rc = rem.leading()
        qexp = tuple(r - s for r, s in zip(rexp, bexp))
        if any(e < 0 for e in qexp):
            raise DegreeError("division is not exact")
        t = MPoly(a.vars, {qexp: rc * binv})
        quot = quot + t
        rem = rem - t * b
        if not rem.is_zero and _grlex_key(rem.leading()[0]) >= _grlex_key(rexp):
            raise DegreeError("division is not exact")
    return quot


def try_exact_div(a: MPoly, b: MPoly) -> MPoly | None:
    try:
        return exact_div(a, b)
    except DegreeError:
        return None


def gcd_many(polys: Iterable[MPoly]) -> MPoly:
    acc: MPoly | None = None
    for p in polys:
        acc = p if acc is None else poly_gcd(acc, p)
        if acc is not None and acc.is_constant and not acc.is_zero:
            break
    if acc is None:
        raise ValueError("gcd of empty collection")
    return acc


def normalize_primitive(p: MPoly) -> MPoly:
    """Primitive integer coefficients with positive grlex-leading sign for
    rational polynomials; monic leading coefficient otherwise."""
    if p.is_zero:
        return p
    if p.is_rational():
        den = int_lcm(*(c.a.denominator for c in p.terms.values()))
        nums = [c.a.numerator * (den // c.a.denominator) for c in p.terms.values()]
        g = 0
        for v in nums:
            g = int_gcd(g, abs(v))
        scaled = p * Fraction(den, g)
        if scaled.leading()[1].sign() < 0:
            scaled = -scaled
        return scaled
    return p * p.leading()[1].inverse()


def poly_gcd(f: MPoly, g: MPoly) -> MPoly:
    """gcd over the rationals, canonicalized by normalize_primitive.
    gcd(f, 0) is normalized f; gcd(0, 0) is 0."""
    f._check_ring(g)
    if f.is_zero:
        return normalize_primitive(g)
    if g.is_zero:
        return normalize_primitive(f)
    return normalize_primitive(_gcd_rec(f, g))


def _gcd_rec(f: MPoly, g: MPoly) -> MPoly:
    if f.is_zero:
        return g
    if g.is_zero:
        return f
    main = None
    for v in f.vars:
        if f.degree_in(v) > 0 or g.degree_in(v) > 0:
            main = v
            break
    if main is None:
        return MPoly.const(f.vars, 1)
    df, dg = f.degree_in(main), g.degree_in(main)
    if df == 0:
        return _gcd_rec(f, _content_in(g, main))
    if dg == 0:
        return _gcd_rec(_content_in(f, main), g)
    cf, cg = _content_in(f, main), _content_in(g, main)
    c = _gcd_rec(cf, cg)
    # keep every term of the chain primitive over Z as well, or pseudo
    # remainders double their coefficient size at each step
    A = normalize_primitive(exact_div(f, cf))
    B = normalize_primitive(exact_div(g, cg))
    if A.degree_in(main) < B.degree_in(main):
        A, B = B, A
    while B.degree_in(main) >= 1:
        R = _prem_mpoly(A, B, main)
        if R.is_zero:
            return c * exact_div(B, _content_in(B, main))
        A, B = B, normalize_primitive(exact_div(R, _content_in(R, main)))
    # remainder chain bottomed out in a nonzero constant (in main)
    return c

def _content_in(p: MPoly, var: str) -> MPoly:
    """gcd of the coefficients of p viewed in var; lives in the full ring."""
    coeffs = [q for q in p.coeffs_in(var) if not q.is_zero]
    acc = None
    for q in coeffs:
        acc = q if acc is None else _gcd_rec(acc, q)
        if acc.is_constant:
            break
    assert acc is not None
    return acc.with_vars(p.vars)


def _prem_mpoly(A: MPoly, B: MPoly, var: str) -> MPoly:
    """Pseudo-remainder of A by B in var: lc(B)^(dA-dB+1) A = QB + R."""
    dA, dB = A.degree_in(var), B.degree_in(var)
    if dA < dB:
        raise DegreeError("pseudo-division needs deg A >= deg B")
    a = A.coeffs_in(var)
    b = B.coeffs_in(var)
    r = _prem_lists(a, b)
    if not r:
        return MPoly.zero(A.vars)
    return MPoly.from_coeff_list(r, var, A.vars.index(var)).with_vars(A.vars)


def _trim(xs: list) -> list:
    while xs and xs[-1].is_zero:
        xs.pop()
    return xs


def _prem_lists(A: list, B: list) -> list:
    """Pseudo-remainder over any exact ring given dense coefficient lists."""
    A = _trim(list(A))
    B = _trim(list(B))
    dA, dB = len(A) - 1, len(B) - 1
    lb = B[-1]
    e = dA - dB + 1
    R = A
    while R and len(R) - 1 >= dB:
        s = R[-1]
        R = [c * lb for c in R]
        shift = len(R) - 1 - dB
        for j in range(dB + 1):
            R[shift + j] = R[shift + j] - s * B[j]
        R = _trim(R[: len(R) - 1])
        e -= 1
    if e > 0:
        scale = lb**e
        R = [c * scale for c in R]
    return R


def squarefree_part(p: MPoly) -> MPoly:
    """Product of the distinct irreducible factors, primitively normalized."""
    if p.is_zero:
        raise ZeroPolynomial("squarefree part of zero")
    g = p
    for v in p.vars:
        g = poly_gcd(g, p.derivative(v))
        if g.is_constant:
            return normalize_primitive(p)
    return normalize_primitive(exact_div(p, g))


# ---------------------------------------------------------------------------
# Resultants: subresultant PRS (fraction-free), Sylvester oracle


def resultant(f: MPoly, g: MPoly, var: str) -> MPoly:
    """res_var(f, g) as a polynomial in the remaining variables, with the
    Sylvester-determinant sign convention."""
    f._check_ring(g)
    if f.is_zero or g.is_zero:
        out = MPoly.zero(f.vars)
        return out.drop_var(var)
    df, dg = f.degree_in(var), g.degree_in(var)
    if df == 0 and dg == 0:
        raise DegreeError(f"neither argument involves {var}")
    if df == 0:
        return (f**dg).drop_var(var)
    if dg == 0:
        return (g**df).drop_var(var)
    A = f.coeffs_in(var)
    B = g.coeffs_in(var)
    sign = 1
    if df < dg:
        A, B = B, A
        if (df * dg) % 2 == 1:
            sign = -sign
    res = _resultant_lists(A, B, sign)
    return res


def _resultant_lists(A: list, B: list, sign: int) -> MPoly:
    ring_vars = A[0].vars
    one = MPoly.const(ring_vars, 1)
    g = h = one
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        delta = dA - dB
        if dA % 2 == 1 and dB % 2 == 1:
            sign = -sign
        R = _prem_lists(A, B)
        A = B
        denom = g * h**delta
        B = [exact_div(c, denom) for c in R]
        B = _trim(B)
        if not B:
            return MPoly.zero(ring_vars)
        g = A[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = exact_div(g**delta, h ** (delta - 1))
        if len(B) - 1 == 0:
            break
    dA = len(A) - 1
    last = B[0]
    if dA == 1:
        final = last
    else:
        final = exact_div(last**dA, h ** (dA - 1))
    return final if sign == 1 else -final


def sylvester_matrix(f: MPoly, g: MPoly, var: str) -> list[list[MPoly]]:
    """Rows of f-coefficients (deg g of them) above rows of g-coefficients
    (deg f), coefficients listed from the leading power down."""
    f._check_ring(g)
    df, dg = f.degree_in(var), g.degree_in(var)
    if df < 1 or dg < 1:
        raise DegreeError("sylvester_matrix needs positive degrees in " + var)
    fc = f.coeffs_in(var)[::-1]
    gc = g.coeffs_in(var)[::-1]
    n = df + dg
    ring = fc[0].vars
    zero = MPoly.zero(ring)
    rows = []
    for i in range(dg):
        rows.append([zero] * i + fc + [zero] * (n - i - len(fc)))
    for i in range(df):
        rows.append([zero] * i + gc + [zero] * (n - i - len(gc)))
    return rows


def det_bareiss(rows: list[list[MPoly]]) -> MPoly:
    """Fraction-free determinant over the polynomial ring."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    ring = rows[0][0].vars
    m = [row[:] for row in rows]
    sign = 1
    prev = MPoly.const(ring, 1)
    for k in range(n - 1):
        if m[k][k].is_zero:
            for i in range(k + 1, n):
                if not m[i][k].is_zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return MPoly.zero(ring)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = exact_div(num, prev)
            m[i][k] = MPoly.zero(ring)
        prev = m[k][k]
    out = m[n - 1][n - 1]
    return -out if sign < 0 else out


def subresultant(f: MPoly, g: MPoly, var: str, j: int) -> MPoly:
    """The j-th subresultant polynomial S_j (determinant definition),
    degree <= j in var.  S_0 is the resultant."""
    f._check_ring(g)
    p, q = f.degree_in(var), g.degree_in(var)
    if p < q:
        f, g = g, f
        p, q = q, p
    if j < 0 or j >= q:
        raise DegreeError(f"subresultant index {j} out of range for degrees {p},{q}")
    fc = f.coeffs_in(var)
    gc = g.coeffs_in(var)
    ring = fc[0].vars
    zero = MPoly.zero(ring)

    def coeff(cs, d):
        return cs[d] if 0 <= d < len(cs) else zero

    n = p + q - 2 * j
    top = p + q - j - 1
    rows = []
    for i in range(q - j):  # rows x^(q-j-1-i) * f
        shift = q - j - 1 - i
        rows.append([coeff(fc, d - shift) for d in range(top, j, -1)] + [shift, fc])
    for i in range(p - j):
        shift = p - j - 1 - i
        rows.append([coeff(gc, d - shift) for d in range(top, j, -1)] + [shift, gc])
    out = MPoly.zero(f.vars)
    xv = MPoly.var(f.vars, var)
    for ell in range(j, -1, -1):
        mat = []
        for r in rows:
            shift, cs = r[-2], r[-1]
            mat.append(r[: n - 1] + [coeff(cs, ell - shift)])
        out = out + det_bareiss(mat).with_vars(f.vars) * xv**ell
    return out
