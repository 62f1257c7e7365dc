"""Computable field scalars and the contexts that tie them together.

Three kinds of scalar are supported:

* :class:`RatFunc` -- reduced rational functions in the Laurent ring, the
  scalars of :class:`RationalFunctionField`;
* :class:`CyclotomicNumber` -- elements of Q[t]/Phi_N(t), the scalars of
  :class:`Cyclotomic`;
* plain ``complex`` -- the scalars of :class:`ApproxComplex`, where zero
  tests use the context tolerance and all results count as approximate.

Every scalar type implements the usual arithmetic operators, so generic
code (the linear algebra in particular) only consults the context for
``is_zero``, ``invert``, ``eq`` and ``conjugate``.
"""

from __future__ import annotations

import cmath
import os
from fractions import Fraction

from .errors import UsageError
from .laurent import (
    LaurentPoly,
    _cyclotomic_coeffs,
    euler_phi,
    exact_div,
    poly_gcd,
)

DEFAULT_TOLERANCE = 1e-10


def default_tolerance():
    """The numeric zero tolerance, overridable via SLOPELAB_TOL."""
    raw = os.environ.get("SLOPELAB_TOL")
    if raw is None:
        return DEFAULT_TOLERANCE
    try:
        tol = float(raw)
    except ValueError as exc:
        raise UsageError(f"SLOPELAB_TOL is not a float: {raw!r}") from exc
    if tol <= 0:
        raise UsageError("SLOPELAB_TOL must be positive")
    return tol


# -- rational functions --------------------------------------------------------


class RatFunc:
    """A reduced rational function num/den of Laurent polynomials.

    The stored form is canonical: gcd(num, den) is a unit and the
    denominator's lex-leading term is the constant 1, so structural
    equality decides equality of rational functions.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = LaurentPoly.one(num.num_vars)
        num, den = _reduce_fraction(num, den)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p):
        out = cls.__new__(cls)
        out.num = p
        out.den = LaurentPoly.one(p.num_vars)
        return out

    @classmethod
    def const(cls, num_vars, c):
        return cls.from_poly(LaurentPoly.const(num_vars, c))

    @property
    def num_vars(self):
        return self.num.num_vars

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den == LaurentPoly.one(self.num_vars)

    def __bool__(self):
        return not self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, LaurentPoly):
            return RatFunc.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(self.num_vars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_polynomial() and other.is_polynomial():
            return RatFunc.from_poly(self.num + other.num)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = RatFunc.__new__(RatFunc)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_polynomial() and other.is_polynomial():
            return RatFunc.from_poly(self.num * other.num)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def invert(self):
        if self.is_zero():
            raise ZeroDivisionError("the zero rational function has no inverse")
        return RatFunc(self.den, self.num)

    def __pow__(self, exponent):
        exponent = int(exponent)
        if exponent < 0:
            return self.invert() ** (-exponent)
        result = RatFunc.const(self.num_vars, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def subst_inverse(self):
        """The formal involution substituting every variable by its inverse."""
        return RatFunc(self.num.subst_inverse(), self.den.subst_inverse())

    def evaluate(self, values, zero=Fraction(0)):
        num = self.num.evaluate(values, zero)
        den = self.den.evaluate(values, zero)
        return num / den

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def render(self, names=None, prefix="w", start=1):
        num = self.num.render(names, prefix, start)
        if self.is_polynomial():
            return num
        return f"({num})/({self.den.render(names, prefix, start)})"

    def __repr__(self):
        return f"RatFunc({self.render()!r})"


def _reduce_fraction(num, den):
    if not isinstance(num, LaurentPoly) or not isinstance(den, LaurentPoly):
        raise UsageError("RatFunc expects LaurentPoly numerator and denominator")
    num._check_same(den)
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return LaurentPoly.zero(num.num_vars), LaurentPoly.one(num.num_vars)
    g = poly_gcd(num, den)
    if not g.is_constant():
        num = exact_div(num, g)
        den = exact_div(den, g)
    # unit-normalize: make the denominator's lex-leading term the constant 1
    e, c = den.lex_leading()
    unit = LaurentPoly.monomial(num.num_vars, tuple(-x for x in e), Fraction(1) / c)
    return num * unit, den * unit


def ratfunc_reduce(num, den):
    """Reduced canonical fraction num/den."""
    return RatFunc(num, den)


# -- cyclotomic numbers --------------------------------------------------------


def _phi_poly(conductor):
    return _cyclotomic_coeffs(conductor)


def _reduce_mod_phi(coeffs, conductor):
    """Remainder of a dense rational coefficient list modulo Phi_N."""
    phi = _phi_poly(conductor)
    deg = len(phi) - 1
    coeffs = list(coeffs)
    for i in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[i]
        if c:
            for j in range(deg + 1):
                coeffs[i - deg + j] -= c * phi[j]
    coeffs = coeffs[:deg]
    coeffs += [Fraction(0)] * (deg - len(coeffs))
    return tuple(Fraction(c) for c in coeffs)


class CyclotomicNumber:
    """An element of the cyclotomic field Q(zeta_N), N the conductor.

    Coordinates are rationals on the power basis 1, t, ..., t^(phi(N)-1)
    of Q[t]/Phi_N(t); the complex embedding sends t to exp(2*pi*i/N).
    """

    __slots__ = ("conductor", "coords")

    def __init__(self, conductor, coords):
        conductor = int(conductor)
        if conductor < 1:
            raise UsageError("conductor must be a positive integer")
        deg = euler_phi(conductor)
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != deg:
            raise UsageError(f"expected {deg} coordinates for conductor {conductor}")
        self.conductor = conductor
        self.coords = coords

    @classmethod
    def zero(cls, conductor):
        return cls.from_fraction(conductor, 0)

    @classmethod
    def one(cls, conductor):
        return cls.from_fraction(conductor, 1)

    @classmethod
    def from_fraction(cls, conductor, q):
        deg = euler_phi(conductor)
        coords = [Fraction(q)] + [Fraction(0)] * (deg - 1)
        return cls(conductor, _reduce_mod_phi(coords, conductor) if deg else coords)

    @classmethod
    def zeta_pow(cls, conductor, k):
        """The root-of-unity power zeta_N^k."""
        k = int(k) % conductor
        coeffs = [Fraction(0)] * (k + 1)
        coeffs[k] = Fraction(1)
        return cls(conductor, _reduce_mod_phi(coeffs, conductor))

    def _check_same(self, other):
        if self.conductor != other.conductor:
            raise UsageError(
                f"mixed conductors: {self.conductor} vs {other.conductor}"
            )

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __bool__(self):
        return not self.is_zero()

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            self._check_same(other)
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_fraction(self.conductor, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber(
            self.conductor, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.conductor, tuple(-c for c in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CyclotomicNumber(self.conductor, tuple(c * q for c in self.coords))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = len(self.coords)
        prod = [Fraction(0)] * (2 * n - 1) if n else []
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(other.coords):
                if b:
                    prod[i + j] += a * b
        return CyclotomicNumber(self.conductor, _reduce_mod_phi(prod, self.conductor))

    __rmul__ = __mul__

    def invert(self):
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        g, u, _ = _list_xgcd(list(self.coords), [Fraction(c) for c in _phi_poly(self.conductor)])
        # Phi_N is irreducible, so the gcd is a nonzero constant
        scale = Fraction(1) / g[0]
        inv = [c * scale for c in u]
        return CyclotomicNumber(self.conductor, _reduce_mod_phi(inv, self.conductor))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.invert()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.invert()

    def __pow__(self, exponent):
        exponent = int(exponent)
        if exponent < 0:
            return self.invert() ** (-exponent)
        result = CyclotomicNumber.one(self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def galois(self, k):
        """Apply the substitution t -> t^k (k coprime to the conductor)."""
        n = self.conductor
        coeffs = [Fraction(0)] * n
        for j, c in enumerate(self.coords):
            if c:
                coeffs[(j * k) % n] += c
        return CyclotomicNumber(n, _reduce_mod_phi(coeffs, n))

    def conjugate(self):
        if self.conductor == 1:
            return self
        return self.galois(self.conductor - 1)

    def to_complex(self):
        zeta = cmath.exp(2j * cmath.pi / self.conductor)
        total = 0j
        for c in reversed(self.coords):
            total = total * zeta + complex(c)
        return total

    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])

    def rational_value(self):
        if not self.is_rational():
            raise UsageError("value is not rational")
        return self.coords[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.from_fraction(self.conductor, other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self.conductor == other.conductor and self.coords == other.coords

    def __hash__(self):
        return hash((self.conductor, self.coords))

    def render(self, varname="z"):
        poly = LaurentPoly(1, {(i,): c for i, c in enumerate(self.coords) if c})
        return poly.render(names=[varname])

    def __repr__(self):
        return f"CyclotomicNumber(N={self.conductor}, {self.render()!r})"


def _list_xgcd(a, b):
    """Extended gcd of dense rational coefficient lists (low to high)."""

    def trim(x):
        while x and not x[-1]:
            x.pop()
        return x

    def sub_scaled(x, y, f, off):
        for i, c in enumerate(y):
            idx = i + off
            while len(x) <= idx:
                x.append(Fraction(0))
            x[idx] -= f * c
        return trim(x)

    r0, r1 = trim(list(a)), trim(list(b))
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        # one long-division step of r0 by r1
        q = []
        r = list(r0)
        while len(r) >= len(r1) and r:
            f = r[-1] / r1[-1]
            off = len(r) - len(r1)
            while len(q) <= off:
                q.append(Fraction(0))
            q[off] += f
            r = sub_scaled(r, r1, f, off)
        new_s = list(s0)
        new_t = list(t0)
        for off, f in enumerate(q):
            if f:
                new_s = sub_scaled(new_s, s1, f, off)
                new_t = sub_scaled(new_t, t1, f, off)
        r0, r1 = r1, trim(r)
        s0, s1 = s1, new_s
        t0, t1 = t1, new_t
    return r0, s0, t0


# -- field contexts ------------------------------------------------------------


class RationalFunctionField:
    """The field of rational functions in num_vars Laurent variables."""

    is_exact = True
    kind = "rational_function_field"

    def __init__(self, num_vars, prefix="w", start=1):
        self.num_vars = int(num_vars)
        self.prefix = prefix
        self.start = start
        self.zero = RatFunc.const(self.num_vars, 0)
        self.one = RatFunc.const(self.num_vars, 1)

    def variables(self):
        return [
            RatFunc.from_poly(LaurentPoly.var(self.num_vars, i))
            for i in range(self.num_vars)
        ]

    def from_int(self, k):
        return RatFunc.const(self.num_vars, k)

    def from_fraction(self, q):
        return RatFunc.const(self.num_vars, q)

    def is_zero(self, x):
        return x.is_zero()

    def invert(self, x):
        return x.invert()

    def eq(self, a, b):
        return a == b

    def conjugate(self, x):
        # formal involution w -> w^-1, the adjoint-side substitution
        return x.subst_inverse()

    def render_scalar(self, x):
        return x.render(prefix=self.prefix, start=self.start)

    def describe(self):
        return {"kind": self.kind, "num_vars": self.num_vars}

    def __repr__(self):
        return f"RationalFunctionField(mu={self.num_vars})"


class Cyclotomic:
    """The cyclotomic field Q(zeta_N); N = 1 gives plain rationals."""

    is_exact = True
    kind = "cyclotomic"

    def __init__(self, conductor):
        self.conductor = int(conductor)
        if self.conductor < 1:
            raise UsageError("conductor must be a positive integer")
        self.zero = CyclotomicNumber.zero(self.conductor)
        self.one = CyclotomicNumber.one(self.conductor)

    def zeta(self, k=1):
        return CyclotomicNumber.zeta_pow(self.conductor, k)

    def from_int(self, k):
        return CyclotomicNumber.from_fraction(self.conductor, k)

    def from_fraction(self, q):
        return CyclotomicNumber.from_fraction(self.conductor, q)

    def is_zero(self, x):
        return x.is_zero()

    def invert(self, x):
        return x.invert()

    def eq(self, a, b):
        return a == b

    def conjugate(self, x):
        return x.conjugate()

    def render_scalar(self, x):
        return x.render()

    def describe(self):
        return {"kind": self.kind, "conductor": self.conductor}

    def __repr__(self):
        return f"Cyclotomic(N={self.conductor})"


class ApproxComplex:
    """Double-precision complex numbers with an explicit zero tolerance.

    Every rank or membership decision taken in this context is flagged
    approximate by downstream code.
    """

    is_exact = False
    kind = "approx_complex"

    def __init__(self, tol=None):
        self.tol = default_tolerance() if tol is None else float(tol)
        if self.tol <= 0:
            raise UsageError("tolerance must be positive")
        self.zero = 0j
        self.one = 1 + 0j

    def from_int(self, k):
        return complex(k)

    def from_fraction(self, q):
        return complex(Fraction(q))

    def is_zero(self, x):
        return abs(x) <= self.tol

    def invert(self, x):
        if self.is_zero(x):
            raise ZeroDivisionError("inverting a numerically zero value")
        return 1 / x

    def eq(self, a, b):
        return abs(a - b) <= self.tol

    def conjugate(self, x):
        return x.conjugate()

    def render_scalar(self, x):
        return format_complex(x)

    def describe(self):
        return {"kind": self.kind, "tolerance": self.tol}

    def __repr__(self):
        return f"ApproxComplex(tol={self.tol})"


def format_complex(z):
    re, im = z.real, z.imag
    if im == 0:
        return f"{re:.12g}"
    sign = "+" if im >= 0 else "-"
    return f"{re:.12g}{sign}{abs(im):.12g}i"
