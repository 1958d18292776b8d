"""Points, lines and collineations of the projective plane over Q or GF(p).

Coordinates are integer triples.  Over the rationals a triple is stored with
its content divided out after each join or meet, so integer growth stays
linear in construction depth; over GF(p) residues are stored as-is.  Equality
is always scale-invariant.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from . import kernels as _k
from .errors import (
    CenterOnTarget,
    CoincidentLines,
    CoincidentPoints,
    DegenerateFrame,
    DegenerateQuadruple,
    NotCollinear,
    NotConcurrent,
    PointAtInfinity,
)
from .scalars import PrimeFieldElement, Scalar, clear_denominators, field_element


class _Infinity:
    __slots__ = ()

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"


INFINITY = _Infinity()
"""Cross-ratio value when the denominator bracket vanishes."""


def _lift(values, p):
    """Integer triple for a sequence of rationals/ints in field ``p``."""
    if all(isinstance(v, int) for v in values):
        ints = tuple(values)
    elif p:
        ints = tuple(
            v.residue if isinstance(v, PrimeFieldElement)
            else Fraction(v).numerator * pow(Fraction(v).denominator, -1, p)
            for v in values
        )
    else:
        ints = clear_denominators(values)
    if p:
        return tuple(x % p for x in ints)
    return ints


class _Triple:
    __slots__ = ("v", "p")

    def __init__(self, v: Sequence[int], p: int = 0):
        v = tuple(v)
        if len(v) != 3:
            raise ValueError("homogeneous coordinates need three entries")
        if p:
            v = (v[0] % p, v[1] % p, v[2] % p)
        if v == (0, 0, 0):
            raise ValueError("the zero triple is not a projective element")
        self.v = v
        self.p = p

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        _check_field(self, other)
        return _k.minors_vanish(self.v, other.v, self.p)

    def __hash__(self):
        return hash((type(self).__name__, self.canonical()))

    def __iter__(self):
        return iter(self.v)

    def __repr__(self):
        body = ", ".join(str(c) for c in self.v)
        suffix = f", p={self.p}" if self.p else ""
        return f"{type(self).__name__}(({body}){suffix})"

    def canonical(self) -> tuple[Scalar, Scalar, Scalar]:
        """Coordinates scaled so that the last nonzero entry is 1."""
        x, y, z = self.v
        d = z or y or x
        p = self.p
        return (field_element(x, d, p), field_element(y, d, p), field_element(z, d, p))

    def scaled(self, k: int) -> _Triple:
        return type(self)(tuple(k * c for c in self.v), self.p)


class Point(_Triple):
    __slots__ = ()

    def affine(self) -> tuple[Scalar, Scalar]:
        x, y, z = self.v
        if (z % self.p if self.p else z) == 0:
            raise PointAtInfinity(f"{self!r} has no affine image in the z = 1 chart")
        return field_element(x, z, self.p), field_element(y, z, self.p)


class Line(_Triple):
    __slots__ = ()


def point(*coords, p: int = 0) -> Point:
    """Point from an affine pair ``(x, y)`` or a homogeneous triple of rationals."""
    if len(coords) == 2:
        coords = (coords[0], coords[1], 1)
    return Point(_lift(coords, p), p)


def line(a, b, c, p: int = 0) -> Line:
    return Line(_lift((a, b, c), p), p)


def _check_field(a, b):
    if a.p != b.p:
        raise ValueError("cannot mix scalar models within one computation")


def join(P: Point, Q: Point) -> Line:
    _check_field(P, Q)
    v = _k.cross(P.v, Q.v, P.p)
    if v == (0, 0, 0):
        raise CoincidentPoints(f"{P!r} and {Q!r} coincide")
    return Line(v, P.p)


def meet(l: Line, m: Line) -> Point:
    _check_field(l, m)
    v = _k.cross(l.v, m.v, l.p)
    if v == (0, 0, 0):
        raise CoincidentLines(f"{l!r} and {m!r} coincide")
    return Point(v, l.p)


def incident(P: Point, l: Line) -> bool:
    _check_field(P, l)
    return _k.dot(P.v, l.v, P.p) == 0


def det3(a: _Triple, b: _Triple, c: _Triple) -> int:
    """Determinant of three coordinate triples (reduced mod p in a prime field)."""
    _check_field(a, b)
    _check_field(a, c)
    return _k.det3(a.v, b.v, c.v, a.p)


def collinear(P: Point, Q: Point, R: Point) -> bool:
    return det3(P, Q, R) == 0


def concurrent(l: Line, m: Line, n: Line) -> bool:
    return det3(l, m, n) == 0


def _bracket_origin(a: _Triple, b: _Triple) -> tuple[int, int, int]:
    """A standard basis vector not incident with the join/meet of ``a`` and ``b``."""
    axis = _k.cross(a.v, b.v, a.p)
    for i in range(3):
        if axis[i]:
            return tuple(1 if j == i else 0 for j in range(3))
    raise DegenerateQuadruple("first two elements coincide")


def _cross_ratio(items, p):
    a, b, c, d = items
    o = _bracket_origin(a, b)

    def br(u, w):
        return _k.det3(u.v, w.v, o, p)

    num = br(a, c) * br(b, d)
    den = br(a, d) * br(b, c)
    if p:
        num %= p
        den %= p
    if den == 0:
        if num == 0:
            raise DegenerateQuadruple("cross-ratio is 0/0")
        return INFINITY
    return field_element(num, den, p)


def cross_ratio_points(P1: Point, P2: Point, P3: Point, P4: Point):
    """Cross-ratio (P1, P2; P3, P4) = (d13 d24) / (d14 d23); may be ``INFINITY``."""
    pts = (P1, P2, P3, P4)
    for q in pts[1:]:
        _check_field(P1, q)
    if P1 == P2:
        raise DegenerateQuadruple("first two points coincide")
    l = join(P1, P2)
    if not (incident(P3, l) and incident(P4, l)):
        raise NotCollinear("cross-ratio needs four collinear points")
    return _cross_ratio(pts, P1.p)


def cross_ratio_lines(l1: Line, l2: Line, l3: Line, l4: Line):
    """Cross-ratio of four concurrent lines, dual to :func:`cross_ratio_points`."""
    ls = (l1, l2, l3, l4)
    for m in ls[1:]:
        _check_field(l1, m)
    if l1 == l2:
        raise DegenerateQuadruple("first two lines coincide")
    vertex = meet(l1, l2)
    if not (incident(vertex, l3) and incident(vertex, l4)):
        raise NotConcurrent("cross-ratio needs four concurrent lines")
    return _cross_ratio(ls, l1.p)


class ProjectiveMap:
    """Invertible 3x3 matrix acting on points, modulo scale."""

    __slots__ = ("m", "p")

    def __init__(self, m: Sequence[int], p: int = 0):
        m = tuple(m)
        if len(m) != 9:
            raise ValueError("a projective map needs nine entries")
        if p:
            m = tuple(x % p for x in m)
        self.m = m
        self.p = p
        if _k.det3(m[0:3], m[3:6], m[6:9], p) == 0:
            raise DegenerateFrame("singular matrix")

    @classmethod
    def from_rows(cls, rows, p: int = 0) -> ProjectiveMap:
        return cls(_lift([x for r in rows for x in r], p), p)

    def __eq__(self, other):
        if not isinstance(other, ProjectiveMap):
            return NotImplemented
        return proportional(self.m, other.m, self.p)

    __hash__ = None

    def __repr__(self):
        return f"ProjectiveMap({self.m})"

    def adjugate(self) -> tuple[int, ...]:
        return _adjugate(self.m, self.p)

    def compose(self, other: ProjectiveMap) -> ProjectiveMap:
        """``self`` after ``other``."""
        return ProjectiveMap(_matmul(self.m, other.m, self.p), self.p)

    def inverse(self) -> ProjectiveMap:
        return ProjectiveMap(self.adjugate(), self.p)


def proportional(a: Sequence[int], b: Sequence[int], p: int = 0) -> bool:
    """True iff two nonzero integer vectors agree up to a nonzero scalar."""
    i = next(j for j in range(len(a)) if (a[j] % p if p else a[j]))
    if p:
        return all((x * b[i] - y * a[i]) % p == 0 for x, y in zip(a, b))
    return all(x * b[i] == y * a[i] for x, y in zip(a, b))


def _matmul(a, b, p):
    out = []
    for i in range(3):
        for j in range(3):
            s = a[3 * i] * b[j] + a[3 * i + 1] * b[3 + j] + a[3 * i + 2] * b[6 + j]
            out.append(s % p if p else s)
    if not p:
        g = 0
        for x in out:
            g = gcd(g, x)
        if g > 1:
            out = [x // g for x in out]
    return tuple(out)


def _adjugate(m, p):
    a, b, c, d, e, f, g, h, i = m
    adj = (
        e * i - f * h, c * h - b * i, b * f - c * e,
        f * g - d * i, a * i - c * g, c * d - a * f,
        d * h - e * g, b * g - a * h, a * e - b * d,
    )
    if p:
        return tuple(x % p for x in adj)
    return adj


def _transpose(m):
    return (m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8])


def identity_map(p: int = 0) -> ProjectiveMap:
    return ProjectiveMap((1, 0, 0, 0, 1, 0, 0, 0, 1), p)


def map_from_frame(A: Point, B: Point, C: Point, D: Point) -> ProjectiveMap:
    """The map sending (1:0:0), (0:1:0), (0:0:1), (1:1:1) to A, B, C, D."""
    p = A.p
    for q in (B, C, D):
        _check_field(A, q)
    a, b, c, d = A.v, B.v, C.v, D.v
    # Cramer's rule for D = la*A + lb*B + lc*C, common denominator dropped
    la = _k.det3(d, b, c, p)
    lb = _k.det3(a, d, c, p)
    lc = _k.det3(a, b, d, p)
    if _k.det3(a, b, c, p) == 0 or la == 0 or lb == 0 or lc == 0:
        raise DegenerateFrame("three of the four frame points are collinear")
    cols = ([la * x for x in a], [lb * x for x in b], [lc * x for x in c])
    m = [cols[j][i] for i in range(3) for j in range(3)]
    return ProjectiveMap(m, p)


def map_between_quads(src: Sequence[Point], dst: Sequence[Point]) -> ProjectiveMap:
    """The unique map sending ``src[i]`` to ``dst[i]`` for i = 0..3."""
    fs = map_from_frame(*src)
    fd = map_from_frame(*dst)
    return fd.compose(fs.inverse())


def apply_map(M: ProjectiveMap, P: Point) -> Point:
    _check_field(M, P)
    return Point(_k.matvec(M.m, P.v, M.p), M.p)


def apply_map_line(M: ProjectiveMap, l: Line) -> Line:
    """Image of a line: inverse-transpose action, so incidence is preserved."""
    _check_field(M, l)
    return Line(_k.matvec(_transpose(M.adjugate()), l.v, M.p), M.p)


def project_through(center: Point, P: Point, target: Line) -> Point:
    """Central projection of ``P`` from ``center`` onto ``target``."""
    if incident(center, target):
        raise CenterOnTarget("projection center lies on the target line")
    return meet(join(center, P), target)


def perturbed(P: Point) -> Point:
    """Unit shift in the first affine coordinate; scale-covariant, so it names
    the same point in every representative and in every scalar model."""
    x, y, z = P.v
    if P.p:
        z %= P.p
    if z:
        return Point((x + z, y, z), P.p)
    return Point((x, y, x if x else y), P.p)
