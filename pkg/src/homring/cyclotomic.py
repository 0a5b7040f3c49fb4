"""Exact arithmetic in cyclotomic fields Q(w_m).

A value is stored as its coefficient vector over the power basis
1, w, ..., w^(phi(m)-1) of Q(w_m), where w = w_m is a primitive m-th root of
unity and phi is Euler's totient.  All coefficients are exact rationals
(`fractions.Fraction`), and every representation is kept reduced modulo the
m-th cyclotomic polynomial, so equality of vectors is equality of values.

This is enough machinery to evaluate character sums over finite rings without
ever touching floating point: sums of roots of unity are assembled as exponent
histograms, reduced once modulo Phi_m, and converted to a plain rational when
all non-constant coefficients vanish.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import InvalidParameter, NotRational

# The package-wide exact rational type.  Arbitrary-precision, always reduced,
# hashable; division by zero raises (ZeroDivisionError) as expected.
Rational = Fraction


def _divisors(m: int) -> list[int]:
    out = [d for d in range(1, m + 1) if m % d == 0]
    return out


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Divide integer polynomials (constant term first); remainder must be 0."""
    num = list(num)
    dn = len(den) - 1
    assert den[-1] == 1, "divisor must be monic"
    out = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        out[k - dn] = c
        if c:
            for i, d in enumerate(den):
                num[k - dn + i] -= c * d
    if any(num):
        raise InvalidParameter("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, constant term first.

    Computed by exact division of x^m - 1 by the cyclotomic polynomials of all
    proper divisors of m.  The result is monic with integer coefficients.
    """
    if m < 1:
        raise InvalidParameter(f"cyclotomic polynomial needs m >= 1, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m):
        if d < m:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _basis_reduction(m: int) -> tuple[tuple[int, ...], ...]:
    """Reduction of x^e modulo Phi_m for e = 0..m-1, as integer vectors."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rows: list[tuple[int, ...]] = []
    # x^deg == -(phi minus leading term), used to fold shift overflow back in
    top = [-c for c in phi[:-1]]
    cur = [0] * deg
    for e in range(m):
        if e < deg:
            row = [0] * deg
            row[e] = 1
            rows.append(tuple(row))
            cur = row
        else:
            overflow = cur[-1]
            nxt = [0] + list(cur[:-1])
            if overflow:
                nxt = [a + overflow * t for a, t in zip(nxt, top)]
            rows.append(tuple(nxt))
            cur = nxt
    return tuple(rows)


def _reduce_int_poly(m: int, coeffs: list) -> list:
    """Reduce a polynomial in w_m (any degree, Fraction or int coeffs)."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    coeffs = list(coeffs)
    for k in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[k]
        if c:
            for i, d in enumerate(phi):
                coeffs[k - deg + i] -= c * d
    out = coeffs[:deg]
    while len(out) < deg:
        out.append(0)
    return out


class Cyclotomic:
    """An element of Q(w_m), reduced modulo Phi_m."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        if conductor < 1:
            raise InvalidParameter("conductor must be >= 1")
        deg = len(cyclotomic_polynomial(conductor)) - 1
        cs = [Fraction(c) for c in coeffs]
        if len(cs) != deg:
            raise InvalidParameter(
                f"conductor {conductor} needs {deg} coefficients, got {len(cs)}"
            )
        self.conductor = conductor
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rational(value) -> "Cyclotomic":
        return Cyclotomic(1, [Fraction(value)])

    @staticmethod
    def root(m: int, e: int) -> "Cyclotomic":
        """w_m^e, reduced."""
        if m < 1:
            raise InvalidParameter("root of unity order must be >= 1")
        return Cyclotomic(m, _basis_reduction(m)[e % m])

    @staticmethod
    def from_exponent_counts(m: int, counts) -> "Cyclotomic":
        """sum over e of counts[e] * w_m^e, where counts is either a
        sequence indexed by exponent or a mapping exponent -> count."""
        rows = _basis_reduction(m)
        deg = len(rows[0])
        acc = [0] * deg
        pairs = counts.items() if hasattr(counts, "items") else enumerate(counts)
        for e, c in pairs:
            if c:
                row = rows[e % m]
                for i in range(deg):
                    acc[i] += c * row[i]
        return Cyclotomic(m, acc)

    # -- coercion ----------------------------------------------------------

    def to_conductor(self, big: int) -> "Cyclotomic":
        if big % self.conductor != 0:
            raise InvalidParameter(
                f"cannot coerce conductor {self.conductor} into {big}"
            )
        if big == self.conductor:
            return self
        step = big // self.conductor
        rows = _basis_reduction(big)
        deg = len(rows[0])
        acc = [Fraction(0)] * deg
        for i, c in enumerate(self.coeffs):
            if c:
                row = rows[(i * step) % big]
                for j in range(deg):
                    acc[j] += c * row[j]
        return Cyclotomic(big, acc)

    @staticmethod
    def _common(a: "Cyclotomic", b: "Cyclotomic"):
        m = a.conductor * b.conductor // gcd(a.conductor, b.conductor)
        return a.to_conductor(m), b.to_conductor(m)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        a, b = Cyclotomic._common(self, other)
        return Cyclotomic(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        a, b = Cyclotomic._common(self, other)
        n = len(a.coeffs)
        prod = [Fraction(0)] * (2 * n - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(a.conductor, _reduce_int_poly(a.conductor, prod))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        other = _coerce(other)
        a, b = Cyclotomic._common(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash((self.conductor, self.coeffs))

    # -- predicates and conversion ----------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_rational(self) -> Fraction:
        """Exact rational value; raises NotRational if root terms remain."""
        if not self.is_rational():
            raise NotRational(self.coeffs, self.conductor)
        return self.coeffs[0]

    def __repr__(self):
        return f"Cyclotomic(m={self.conductor}, {list(self.coeffs)})"


def _coerce(value) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        return value
    return Cyclotomic.rational(value)


def cyc_add(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return _coerce(a) + _coerce(b)


def cyc_mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return _coerce(a) * _coerce(b)


def root_power(m: int, e: int) -> Cyclotomic:
    return Cyclotomic.root(m, e)


def cyc_to_rational(a: Cyclotomic) -> Fraction:
    return _coerce(a).to_rational()


def rational_str(value) -> str:
    """Render a rational as ``num/den`` with the denominator always present."""
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"
