"""Exact arithmetic in the cyclotomic field Q(zeta_e).

An element is a rational polynomial in zeta of degree below phi(e), kept
reduced modulo the e-th cyclotomic polynomial.  Polynomial arithmetic uses
``flint.fmpq_poly``; the cyclotomic polynomial and field inverses are
computed here.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from flint import fmpq, fmpq_poly

Scalar = Union[int, Fraction, fmpq, "Cyclotomic"]

_X = fmpq_poly([0, 1])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> fmpq_poly:
    """Phi_e, by dividing x^e - 1 by Phi_d for every proper divisor d of e."""
    if e < 1:
        raise ValueError("e must be positive")
    poly = _X**e - 1
    for d in range(1, e):
        if e % d == 0:
            quo, rem = divmod(poly, cyclotomic_polynomial(d))
            if not rem.is_zero():
                raise ArithmeticError(f"inexact division building Phi_{e}")
            poly = quo
    return poly


def _poly_inverse_mod(a: fmpq_poly, m: fmpq_poly) -> fmpq_poly:
    """Inverse of a modulo m by the extended Euclidean algorithm."""
    r0, r1 = m, a % m
    s0, s1 = fmpq_poly([0]), fmpq_poly([1])
    while not r1.is_zero():
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
    if r0.degree() != 0:
        raise ZeroDivisionError("element is not invertible modulo the cyclotomic polynomial")
    return (s0 * fmpq_poly([1 / r0.coeffs()[0]])) % m


class CyclotomicField:
    """The field Q(zeta_e) with a fixed primitive e-th root of unity zeta."""

    def __init__(self, e: int):
        if e < 1:
            raise ValueError("e must be positive")
        self.e = e
        self.modulus = cyclotomic_polynomial(e)
        self.degree = self.modulus.degree()

    def __repr__(self) -> str:
        return f"CyclotomicField({self.e})"

    def __reduce__(self):
        return (field, (self.e,))

    def __call__(self, value: Scalar) -> "Cyclotomic":
        if isinstance(value, Cyclotomic):
            if value.field is not self:
                raise ValueError("elements of different cyclotomic fields")
            return value
        if isinstance(value, Fraction):
            value = fmpq(value.numerator, value.denominator)
        return Cyclotomic(self, fmpq_poly([value]))

    def from_coeffs(self, coeffs: Sequence) -> "Cyclotomic":
        cs = [fmpq(c.numerator, c.denominator) if isinstance(c, Fraction) else c for c in coeffs]
        return Cyclotomic(self, fmpq_poly(cs) % self.modulus)

    @property
    def zero(self) -> "Cyclotomic":
        return self(0)

    @property
    def one(self) -> "Cyclotomic":
        return self(1)

    @property
    def zeta(self) -> "Cyclotomic":
        return Cyclotomic(self, _X % self.modulus)

    def zeta_power(self, k: int) -> "Cyclotomic":
        return Cyclotomic(self, (_X ** (k % self.e)) % self.modulus)

    def is_primitive_root(self, z: "Cyclotomic") -> bool:
        """True iff z^e = 1 and z^k != 1 for 0 < k < e."""
        p = self.one
        for k in range(1, self.e + 1):
            p = p * z
            if p.is_one():
                return k == self.e
        return False


@lru_cache(maxsize=None)
def field(e: int) -> CyclotomicField:
    """The shared field instance for a given e."""
    return CyclotomicField(e)


class Cyclotomic:
    """An element of Q(zeta_e)."""

    __slots__ = ("field", "poly")

    def __init__(self, fld: CyclotomicField, poly: fmpq_poly):
        self.field = fld
        self.poly = poly

    def _coerce(self, other) -> "Cyclotomic | None":
        if isinstance(other, Cyclotomic):
            if other.field is not self.field:
                raise ValueError("elements of different cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction, fmpq)):
            return self.field(other)
        return None

    def coeffs(self) -> list[fmpq]:
        """Coordinates in the basis 1, zeta, ..., zeta^(phi-1), zero padded."""
        cs = list(self.poly.coeffs())
        return cs + [fmpq(0)] * (self.field.degree - len(cs))

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def is_one(self) -> bool:
        return self.poly.is_one()

    def is_rational(self) -> bool:
        return self.poly.degree() <= 0

    def __bool__(self) -> bool:
        return not self.poly.is_zero()

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        return o is not None and self.poly == o.poly

    def __hash__(self) -> int:
        return hash((self.field.e, tuple(str(c) for c in self.poly.coeffs())))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.field, self.poly + o.poly)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.field, -self.poly)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.field, self.poly - o.poly)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.field, o.poly - self.poly)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.field, (self.poly * o.poly) % self.field.modulus)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return Cyclotomic(self.field, _poly_inverse_mod(self.poly, self.field.modulus))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "Cyclotomic":
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs()]

    @classmethod
    def from_json(cls, fld: CyclotomicField, data: Sequence[str]) -> "Cyclotomic":
        return fld.from_coeffs([fmpq(Fraction(s).numerator, Fraction(s).denominator) for s in data])

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs()):
            if c == 0:
                continue
            mon = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mon:
                terms.append(str(c))
            elif c == 1:
                terms.append(mon)
            elif c == -1:
                terms.append("-" + mon)
            else:
                terms.append(f"{c}*{mon}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"
