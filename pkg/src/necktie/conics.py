"""Point conics, line conics and the six-element coconicity certificates.

A conic is stored as twice its symmetric matrix so that fitting from the
Veronese kernel stays integral.  Degenerate conics (line pairs, double lines)
are ordinary values here; only tangency refuses them.
"""
from __future__ import annotations

from typing import Sequence

from . import kernels as _k
from .errors import DegenerateConic, NonUniqueConic
from .projective import Line, Point, _check_field, join, proportional


def _matrix_from_coefficients(c, p):
    # coefficients of x^2, y^2, z^2, xy, xz, yz
    m = (
        2 * c[0], c[3], c[4],
        c[3], 2 * c[1], c[5],
        c[4], c[5], 2 * c[2],
    )
    if p:
        return tuple(x % p for x in m)
    return m


class _QuadraticForm:
    __slots__ = ("m", "p")

    def __init__(self, m: Sequence[int], p: int = 0):
        m = tuple(m)
        if len(m) != 9:
            raise ValueError("a quadratic form needs a 3x3 matrix")
        if p:
            m = tuple(x % p for x in m)
        if m[1] != m[3] or m[2] != m[6] or m[5] != m[7]:
            raise ValueError("matrix must be symmetric")
        if not any(m):
            raise ValueError("the zero form is not a conic")
        self.m = m
        self.p = p

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int], p: int = 0):
        """Form ``c0 x^2 + c1 y^2 + c2 z^2 + c3 xy + c4 xz + c5 yz``."""
        return cls(_matrix_from_coefficients(tuple(coeffs), p), p)

    def coefficients(self) -> tuple[int, ...]:
        """Integer coefficients in Veronese order, up to a common factor."""
        m = self.m
        return (m[0], m[4], m[8], 2 * m[1], 2 * m[2], 2 * m[5])

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.p == other.p and proportional(self.m, other.m, self.p)

    __hash__ = None

    def __repr__(self):
        return f"{type(self).__name__}({self.m})"

    def determinant(self) -> int:
        m = self.m
        return _k.det3(m[0:3], m[3:6], m[6:9], self.p)

    def is_degenerate(self) -> bool:
        return self.determinant() == 0

    def adjugate(self) -> tuple[int, ...]:
        a, b, c, d, e, f, g, h, i = self.m
        adj = (
            e * i - f * h, c * h - b * i, b * f - c * e,
            f * g - d * i, a * i - c * g, c * d - a * f,
            d * h - e * g, b * g - a * h, a * e - b * d,
        )
        if self.p:
            return tuple(x % self.p for x in adj)
        return adj

    def value(self, v) -> int:
        return _k.quad(self.m, v.v, self.p)


class Conic(_QuadraticForm):
    """Locus of points P with P^T m P = 0."""

    __slots__ = ()

    def dual(self) -> DualConic:
        """Envelope of tangent lines (adjugate); requires a non-degenerate conic."""
        if self.is_degenerate():
            raise DegenerateConic("degenerate conic has no tangent envelope")
        return DualConic(self.adjugate(), self.p)


class DualConic(_QuadraticForm):
    """Set of lines l with l^T d l = 0."""

    __slots__ = ()

    def dual(self) -> Conic:
        if self.is_degenerate():
            raise DegenerateConic("degenerate line conic")
        return Conic(self.adjugate(), self.p)


def _fit(elements, cls):
    if len(elements) != 5:
        raise ValueError("five elements determine a conic")
    p = elements[0].p
    for e in elements[1:]:
        _check_field(elements[0], e)
    rows = [_k.veronese(e.v, p) for e in elements]
    coeffs = _k.kernel5(rows, p)
    if not any(coeffs):
        raise NonUniqueConic("Veronese rank below 5: the conic is not unique")
    return cls.from_coefficients(coeffs, p)


def conic_through(*points: Point) -> Conic:
    """The unique point conic through five points."""
    return _fit(points, Conic)


def dual_conic_through(*lines: Line) -> DualConic:
    """The unique line conic containing five lines."""
    return _fit(lines, DualConic)


def on_conic(c: Conic, P: Point) -> bool:
    _check_field(c, P)
    return c.value(P) == 0


def line_on_dual_conic(d: DualConic, l: Line) -> bool:
    _check_field(d, l)
    return d.value(l) == 0


def veronese_det(elements: Sequence) -> int:
    """6x6 determinant of the Veronese rows; zero iff the six share a conic."""
    if len(elements) != 6:
        raise ValueError("six elements are needed")
    p = elements[0].p
    for e in elements[1:]:
        _check_field(elements[0], e)
    return _k.det6_veronese([e.v for e in elements], p)


def six_on_conic(*points: Point) -> bool:
    return veronese_det(points) == 0


def six_lines_on_dual_conic(*lines: Line) -> bool:
    return veronese_det(lines) == 0


def conic_is_degenerate(c: Conic) -> bool:
    return c.is_degenerate()


def tangent_line(c: Conic, l: Line) -> bool:
    """True iff ``l`` touches the non-degenerate conic ``c``."""
    _check_field(c, l)
    if c.is_degenerate():
        raise DegenerateConic("tangency is undefined for a degenerate conic")
    return _k.quad(c.adjugate(), l.v, c.p) == 0


def hexagon_sides(*vertices: Point) -> list[Line]:
    """Side lines V0V1, V1V2, ..., V5V0 of a hexagon."""
    n = len(vertices)
    return [join(vertices[i], vertices[(i + 1) % n]) for i in range(n)]
