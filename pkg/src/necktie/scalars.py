"""Exact scalars: canonical rationals and elements of a large prime field.

Rationals are :class:`fractions.Fraction`, which already keeps values in
lowest terms with a positive denominator.  Geometry code never carries
scalar objects in its hot paths; coordinates are plain integers and a field
is identified by its modulus (``0`` for the rationals).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Union

Rational = Fraction

MERSENNE_61 = (1 << 61) - 1
"""Default prime-field modulus."""

_SCALAR_RE = re.compile(r"-?[0-9]+(?:/[0-9]+)?")


class DivisionByZero(ZeroDivisionError):
    pass


class ParseError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class PrimeFieldElement:
    """Residue class modulo a prime, stored in ``[0, modulus)``."""

    residue: int
    modulus: int = MERSENNE_61

    def __post_init__(self):
        if not 0 <= self.residue < self.modulus:
            object.__setattr__(self, "residue", self.residue % self.modulus)

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise ValueError("cannot mix prime fields with different moduli")
            return other.residue
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement((self.residue + o) % self.modulus, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement((self.residue - o) % self.modulus, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement((o - self.residue) % self.modulus, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.residue * o % self.modulus, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.residue % self.modulus, self.modulus)

    def inverse(self) -> PrimeFieldElement:
        if self.residue == 0:
            raise DivisionByZero("inverse of zero")
        return PrimeFieldElement(pow(self.residue, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * PrimeFieldElement(o, self.modulus).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.inverse() * o

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.modulus == other.modulus and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __bool__(self):
        return self.residue != 0

    def __str__(self):
        return str(self.residue)


Scalar = Union[Fraction, PrimeFieldElement]


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_neg(a: Scalar) -> Scalar:
    return -a


def scalar_inv(a: Scalar) -> Scalar:
    if isinstance(a, PrimeFieldElement):
        return a.inverse()
    if a == 0:
        raise DivisionByZero("inverse of zero")
    return 1 / Fraction(a)


def parse_scalar(text: str) -> Fraction:
    """Parse ``[-]digits[/digits]`` into a canonical rational."""
    if not isinstance(text, str) or not _SCALAR_RE.fullmatch(text):
        raise ParseError(f"malformed scalar {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise DivisionByZero(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_scalar(x) -> str:
    """Canonical text of a scalar (``n`` or ``n/d``; residues print as integers)."""
    if isinstance(x, PrimeFieldElement):
        return str(x.residue)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def field_element(num: int, den: int = 1, p: int = 0) -> Scalar:
    """The value ``num/den`` in the rationals (``p == 0``) or in GF(p)."""
    if den == 0:
        raise DivisionByZero("zero denominator")
    if p:
        return PrimeFieldElement(num * pow(den, -1, p) % p, p)
    return Fraction(num, den)


def clear_denominators(values) -> tuple[int, ...]:
    """Integer vector proportional to a vector of rationals."""
    fr = [Fraction(v) for v in values]
    m = lcm(*(f.denominator for f in fr))
    return tuple(int(f * m) for f in fr)
