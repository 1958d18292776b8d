"""Named constructions on a triangle ABC with a point P and points on its cevians.

Every join and meet is tagged with the name of the construction step, so a
degenerate input is reported as ``DegenerateConfiguration("W_C: ...")``
instead of a bare coincidence error.  Points over the rationals and over
GF(p) go through the same code.
"""
from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Optional

from .errors import DegenerateConfiguration, DegenerateQuadruple, DegenerateTrace, GeometryError, InvariantError
from .projective import (
    Line,
    Point,
    ProjectiveMap,
    apply_map,
    collinear,
    incident,
    join,
    map_between_quads,
    meet,
    _lift,
)
from . import kernels as _k
from .scalars import field_element


def _join(P, Q, step):
    try:
        return join(P, Q)
    except GeometryError as exc:
        raise DegenerateConfiguration(step, exc) from exc


def _meet(l, m, step):
    try:
        return meet(l, m)
    except GeometryError as exc:
        raise DegenerateConfiguration(step, exc) from exc


def _x(a, b, c, d, step):
    """meet(join(a, b), join(c, d))"""
    return _meet(_join(a, b, step), _join(c, d, step), step)


def on_cevian(V: Point, P: Point, alpha, beta) -> Point:
    """alpha*V + beta*P, using representatives whose last nonzero coordinate is 1."""
    p = V.p
    a, b = _scalar(alpha, p), _scalar(beta, p)
    if not a and not b:
        raise InvariantError("cevian parameter (0:0) is not a point")
    coords = [a * x + b * y for x, y in zip(V.canonical(), P.canonical())]
    try:
        return Point(_lift(coords, p), p)
    except ValueError as exc:
        raise InvariantError("cevian parameters give the zero vector") from exc


def _scalar(x, p):
    x = Fraction(x)
    return field_element(x.numerator, x.denominator, p)


@dataclass(frozen=True)
class Configuration:
    """Triangle ABC, point P, points A1, B1, C1 on AP, BP, CP, optional Q and A'_P."""

    A: Point
    B: Point
    C: Point
    P: Point
    A1: Point
    B1: Point
    C1: Point
    Q: Optional[Point] = None
    APrime: Optional[Point] = None

    @property
    def p(self) -> int:
        return self.A.p

    @classmethod
    def from_params(cls, A, B, C, P, a1, b1, c1, Q=None, aprime=None) -> Configuration:
        """Build from cevian parameters: A1 = a1[0]*A + a1[1]*P, etc."""
        return cls(
            A, B, C, P,
            on_cevian(A, P, *a1),
            on_cevian(B, P, *b1),
            on_cevian(C, P, *c1),
            Q,
            on_cevian(A, P, *aprime) if aprime is not None else None,
        )

    def points(self) -> dict[str, Point]:
        return {f.name: getattr(self, f.name) for f in fields(self) if getattr(self, f.name) is not None}

    def mapped(self, M: ProjectiveMap) -> Configuration:
        return Configuration(**{k: apply_map(M, v) for k, v in self.points().items()})

    def with_q(self, Q: Optional[Point]) -> Configuration:
        return Configuration(**{**self.points(), "Q": Q})

    def validate(self) -> None:
        """Raise :class:`InvariantError` naming the first violated invariant."""
        A, B, C, P = self.A, self.B, self.C, self.P
        ps = {A.p, B.p, C.p, P.p, self.A1.p, self.B1.p, self.C1.p}
        if self.Q is not None:
            ps.add(self.Q.p)
        if self.APrime is not None:
            ps.add(self.APrime.p)
        if len(ps) != 1:
            raise InvariantError("points use different scalar models")
        if collinear(A, B, C):
            raise InvariantError("A, B, C collinear")
        for name, (U, V) in {"BC": (B, C), "AC": (A, C), "AB": (A, B)}.items():
            if collinear(U, V, P):
                raise InvariantError(f"P on side {name}")
        sides = {"BC": join(B, C), "AC": join(A, C), "AB": join(A, B)}
        feet = {
            "A": meet(join(A, P), sides["BC"]),
            "B": meet(join(B, P), sides["AC"]),
            "C": meet(join(C, P), sides["AB"]),
        }
        verts = {"A": A, "B": B, "C": C}
        others = {"A": (B, C), "B": (A, C), "C": (A, B)}
        for v, X in (("A", self.A1), ("B", self.B1), ("C", self.C1)):
            if not collinear(verts[v], P, X):
                raise InvariantError(f"{v}1 not on line {v}P")
            if X == feet[v]:
                raise InvariantError(f"{v}1 coincides with {v}_P")
            if X in others[v]:
                raise InvariantError(f"{v}1 coincides with a vertex")
        if self.APrime is not None:
            if not collinear(A, P, self.APrime):
                raise InvariantError("A'_P not on line AP")
            if self.APrime == self.A1:
                raise InvariantError("A'_P coincides with A1")
        Q = self.Q
        if Q is not None:
            for name, side in sides.items():
                if incident(Q, side):
                    raise InvariantError(f"Q on side {name}")
            cev = (self.A1, self.B1, self.C1)
            if Q in cev:
                raise InvariantError("Q coincides with one of A1, B1, C1")
            for (n1, X), (n2, Y) in ((("B1", cev[1]), ("C1", cev[2])),
                                     (("C1", cev[2]), ("A1", cev[0])),
                                     (("A1", cev[0]), ("B1", cev[1]))):
                if X != Y and collinear(X, Y, Q):
                    raise InvariantError(f"Q on line {n1}{n2}")


def _as_dict(obj) -> dict[str, Point]:
    return {f.name: getattr(obj, f.name) for f in fields(obj)}


@dataclass(frozen=True)
class NecktieFrame:
    A_P: Point
    B_P: Point
    C_P: Point
    A1: Point
    B1: Point
    C1: Point
    W_A: Point
    W_B: Point
    W_C: Point
    W: Point
    J_A: Point
    J_B: Point
    J_C: Point

    def as_dict(self):
        return _as_dict(self)


@dataclass(frozen=True)
class TPoints:
    T_A: Point
    T_B: Point
    T_C: Point
    T: Point

    def as_dict(self):
        return _as_dict(self)


@dataclass(frozen=True)
class GPoints:
    G_A: Point
    G_B: Point
    G_C: Point
    G: Point
    R: Point

    def as_dict(self):
        return _as_dict(self)


@dataclass(frozen=True)
class PrimedPoints:
    APrime_P: Point
    WPrime_B: Point
    WPrime_C: Point
    N: Point

    def as_dict(self):
        return _as_dict(self)


@dataclass(frozen=True)
class QPoints:
    A_Q: Point
    B_Q: Point
    C_Q: Point
    V_A: Point
    V_B: Point
    V_C: Point

    def as_dict(self):
        return _as_dict(self)


def cevian_feet(cfg: Configuration) -> tuple[Point, Point, Point]:
    A, B, C, P = cfg.A, cfg.B, cfg.C, cfg.P
    return (
        _x(A, P, B, C, "A_P"),
        _x(B, P, A, C, "B_P"),
        _x(C, P, A, B, "C_P"),
    )


def necktie_points(cfg: Configuration) -> NecktieFrame:
    A, B, C = cfg.A, cfg.B, cfg.C
    A1, B1, C1 = cfg.A1, cfg.B1, cfg.C1
    A_P, B_P, C_P = cevian_feet(cfg)
    W_C = _x(A1, B_P, B1, A_P, "W_C")
    W_A = _x(B1, C_P, C1, B_P, "W_A")
    W_B = _x(C1, A_P, A1, C_P, "W_B")
    W = _x(A, W_A, B, W_B, "W")
    J_C = _x(A, B1, B, A1, "J_C")
    J_A = _x(B, C1, C, B1, "J_A")
    J_B = _x(C, A1, A, C1, "J_B")
    return NecktieFrame(A_P, B_P, C_P, A1, B1, C1, W_A, W_B, W_C, W, J_A, J_B, J_C)


def t_points(cfg: Configuration, frame: NecktieFrame) -> TPoints:
    A, B, C, W = cfg.A, cfg.B, cfg.C, frame.W
    T_A = _x(W, cfg.A1, B, C, "T_A")
    T_B = _x(W, cfg.B1, A, C, "T_B")
    T_C = _x(W, cfg.C1, A, B, "T_C")
    T = _x(A, T_A, B, T_B, "T")
    return TPoints(T_A, T_B, T_C, T)


def g_points(cfg: Configuration, frame: NecktieFrame) -> GPoints:
    A, B, C, P = cfg.A, cfg.B, cfg.C, cfg.P
    G_A = _x(frame.W_A, P, B, C, "G_A")
    G_B = _x(frame.W_B, P, A, C, "G_B")
    G_C = _x(frame.W_C, P, A, B, "G_C")
    G = _x(A, G_A, B, G_B, "G")
    R = _x(frame.W_A, frame.A_P, frame.W_B, frame.B_P, "R")
    return GPoints(G_A, G_B, G_C, G, R)


def primed_points(cfg: Configuration, frame: NecktieFrame | None = None, *, pairing: str = "necktie") -> PrimedPoints:
    """W'_B, W'_C and N = BW'_B meet CW'_C for the point A'_P on AP.

    ``pairing="necktie"`` (default) puts W'_B on A1C_P and W'_C on A1B_P, so
    that A'_P = A_P reproduces W_B, W_C and N = W.  ``pairing="literal"``
    swaps them (W'_B on A1B_P), which is not coconic in general.
    """
    if cfg.APrime is None:
        raise ValueError("configuration has no A'_P")
    if frame is None:
        _, B_P, C_P = cevian_feet(cfg)
    else:
        B_P, C_P = frame.B_P, frame.C_P
    Ap = cfg.APrime
    on_ab = _x(cfg.A1, B_P, cfg.B1, Ap, "A1B_P^B1A'_P")
    on_ac = _x(cfg.A1, C_P, cfg.C1, Ap, "A1C_P^C1A'_P")
    if pairing == "necktie":
        WB, WC = on_ac, on_ab
    elif pairing == "literal":
        WB, WC = on_ab, on_ac
    else:
        raise ValueError(f"unknown pairing {pairing!r}")
    N = _x(cfg.B, WB, cfg.C, WC, "N")
    return PrimedPoints(Ap, WB, WC, N)


def q_points(cfg: Configuration) -> QPoints:
    if cfg.Q is None:
        raise ValueError("configuration has no Q")
    A, B, C, Q = cfg.A, cfg.B, cfg.C, cfg.Q
    A1, B1, C1 = cfg.A1, cfg.B1, cfg.C1
    A_Q = _x(Q, A1, B, C, "A_Q")
    B_Q = _x(Q, B1, A, C, "B_Q")
    C_Q = _x(Q, C1, A, B, "C_Q")
    V_C = _x(A_Q, B1, B_Q, A1, "V_C")
    V_A = _x(B_Q, C1, C_Q, B1, "V_A")
    V_B = _x(C_Q, A1, A_Q, C1, "V_B")
    return QPoints(A_Q, B_Q, C_Q, V_A, V_B, V_C)


@dataclass(frozen=True)
class Lemma1Instance:
    """Points A..E, lines l1, l2, l3 through E, and sample positions of P on l3."""

    A: Point
    B: Point
    C: Point
    D: Point
    E: Point
    l1: Line
    l2: Line
    l3: Line
    samples: tuple[Point, ...] = ()

    def validate(self) -> None:
        E = self.E
        for name, l in (("l1", self.l1), ("l2", self.l2), ("l3", self.l3)):
            if not incident(E, l):
                raise InvariantError(f"{name} does not pass through E")
            for pname in "ABCD":
                if incident(getattr(self, pname), l):
                    raise InvariantError(f"{name} passes through {pname}")
        if self.l1 == self.l2 or self.l2 == self.l3 or self.l1 == self.l3:
            raise InvariantError("lines l1, l2, l3 must be distinct")
        for i, S in enumerate(self.samples):
            if not incident(S, self.l3):
                raise InvariantError(f"sample {i} not on l3")


def lemma1_instance(A, B, C, D, E, l1, l2, l3, P) -> Point:
    """X = AA' meet BB' with A' = CP meet l1 and B' = DP meet l2."""
    return lemma1_parts(A, B, C, D, l1, l2, P)[2]


def lemma1_parts(A, B, C, D, l1, l2, P) -> tuple[Point, Point, Point]:
    for name, l in (("l1", l1), ("l2", l2)):
        for pname, X in (("A", A), ("B", B), ("C", C), ("D", D)):
            if incident(X, l):
                raise DegenerateConfiguration(f"{name} through {pname}")
    Ap = _meet(_join(C, P, "A'"), l1, "A'")
    Bp = _meet(_join(D, P, "B'"), l2, "B'")
    X = _x(A, Ap, B, Bp, "X")
    return Ap, Bp, X


def lemma1_map(inst: Lemma1Instance, P: Point) -> ProjectiveMap:
    """Composite collineation f with f(A) = B carrying line AA'(P) to BB'(P).

    Built from three central collineations, each fixed by four points:
    projection of l1 onto l3 from C, of l3 onto l2 from D (both fixing A and
    E), then the involution swapping A and B that fixes l2 pointwise.
    """
    A, B, C, D, E = inst.A, inst.B, inst.C, inst.D, inst.E
    Ap, Bp, _ = lemma1_parts(A, B, C, D, inst.l1, inst.l2, P)
    try:
        h1 = map_between_quads((A, E, C, Ap), (A, E, C, P))
        h2 = map_between_quads((A, E, D, P), (A, E, D, Bp))
        h3 = map_between_quads((E, Bp, A, B), (E, Bp, B, A))
    except GeometryError as exc:
        raise DegenerateConfiguration("f", exc) from exc
    return h3.compose(h2).compose(h1)


@dataclass(frozen=True)
class Lemma2Points:
    A_B: Point
    B_A: Point
    B_C: Point
    C_B: Point
    A_C: Point
    C_A: Point

    def as_dict(self):
        return _as_dict(self)


def lemma2_points(A: Point, B: Point, C: Point, P: Point, Q: Point) -> Lemma2Points:
    pts = {"A": A, "B": B, "C": C, "P": P, "Q": Q}
    names = list(pts)
    for i in range(5):
        for j in range(i + 1, 5):
            for k in range(j + 1, 5):
                if collinear(pts[names[i]], pts[names[j]], pts[names[k]]):
                    raise DegenerateConfiguration(
                        f"general position ({names[i]}, {names[j]}, {names[k]} collinear)"
                    )
    return Lemma2Points(
        _x(A, P, B, Q, "A_B"),
        _x(A, Q, B, P, "B_A"),
        _x(B, P, C, Q, "B_C"),
        _x(B, Q, C, P, "C_B"),
        _x(A, P, C, Q, "A_C"),
        _x(A, Q, C, P, "C_A"),
    )


def _cr_parts(a, b, c, d) -> tuple[int, int]:
    """Numerator and denominator brackets of (a, b; c, d).

    Works for four collinear points and, dually, four concurrent lines.
    """
    p = a.p
    if a == b:
        raise DegenerateQuadruple("first two points coincide")
    axis = _k.cross(a.v, b.v, p)
    if _k.dot(axis, c.v, p) or _k.dot(axis, d.v, p):
        raise DegenerateQuadruple("quadruple not collinear or not concurrent")
    i = next(j for j in range(3) if axis[j])
    o = tuple(1 if j == i else 0 for j in range(3))

    def br(u, w):
        return _k.det3(u.v, w.v, o, p)

    num = br(a, c) * br(b, d)
    den = br(a, d) * br(b, c)
    if p:
        num %= p
        den %= p
    if num == 0 and den == 0:
        raise DegenerateQuadruple("cross-ratio is 0/0")
    return num, den


def _distinct(points) -> int:
    reps: list[Point] = []
    for q in points:
        if not any(q == r for r in reps):
            reps.append(q)
    return len(reps)


@dataclass(frozen=True)
class TraceRecord:
    """Auxiliary points and cross-ratios along the chain of projections for 1.5."""

    T_A_via_J: Point
    T_C_via_J: Point
    C_U: Point
    A_U: Point
    C_B_star: Point
    A_B_star: Point
    quadruples: dict  # name -> tuple of four point names
    ratios: dict  # name -> (numerator, denominator) brackets
    line_ratios: tuple  # pencils (AB, AG, AP, AT) and (CB, CG, CP, CT)

    def points(self) -> dict[str, Point]:
        return {
            "T_A_via_J": self.T_A_via_J,
            "T_C_via_J": self.T_C_via_J,
            "C_U": self.C_U,
            "A_U": self.A_U,
            "C_B*": self.C_B_star,
            "A_B*": self.A_B_star,
        }


TRACE_CHAIN = (
    ("(B,G_A,A_P,T_A)", ("B", "G_A", "A_P", "T_A")),
    ("(A_B*,W_A,A,J_A)", ("A_B*", "W_A", "A", "J_A")),
    ("(B,C_P,A,C_U)", ("B", "C_P", "A", "C_U")),
    ("(B,A_P,C,A_U)", ("B", "A_P", "C", "A_U")),
    ("(C_B*,W_C,C,J_C)", ("C_B*", "W_C", "C", "J_C")),
    ("(B,G_C,C_P,T_C)", ("B", "G_C", "C_P", "T_C")),
)


def theorem_1_5_trace(cfg: Configuration, frame: NecktieFrame, t: TPoints, g: GPoints) -> TraceRecord:
    A, B, C, P = cfg.A, cfg.B, cfg.C, cfg.P
    for name, quad in (("(B,G_A,A_P,T_A)", (B, g.G_A, frame.A_P, t.T_A)),
                       ("(B,G_C,C_P,T_C)", (B, g.G_C, frame.C_P, t.T_C))):
        if _distinct(quad) < 3:
            raise DegenerateTrace(f"{name} has fewer than three distinct points")
    try:
        BC, BA = join(B, C), join(B, A)
        BP = join(B, P)
        T_A_via_J = meet(join(P, frame.J_A), BC)
        T_C_via_J = meet(join(P, frame.J_C), BA)
        C_U = meet(join(cfg.B1, C), BA)
        A_U = meet(join(cfg.B1, A), BC)
        C_B_star = meet(BP, join(C, frame.W))
        A_B_star = meet(BP, join(A, frame.W))
    except GeometryError as exc:
        raise DegenerateTrace(f"auxiliary point undefined: {exc}") from exc
    named = {
        "A": A, "B": B, "C": C, "P": P,
        "A_P": frame.A_P, "C_P": frame.C_P, "W_A": frame.W_A, "W_C": frame.W_C,
        "J_A": frame.J_A, "J_C": frame.J_C, "T_A": t.T_A, "T_C": t.T_C,
        "G_A": g.G_A, "G_C": g.G_C, "C_U": C_U, "A_U": A_U,
        "C_B*": C_B_star, "A_B*": A_B_star,
    }
    ratios = {}
    try:
        for name, quad in TRACE_CHAIN:
            ratios[name] = _cr_parts(*(named[q] for q in quad))
        line_ratios = (
            _cr_parts(*(join(A, X) for X in (B, g.G, P, t.T))),
            _cr_parts(*(join(C, X) for X in (B, g.G, P, t.T))),
        )
    except GeometryError as exc:
        raise DegenerateTrace(str(exc)) from exc
    return TraceRecord(
        T_A_via_J, T_C_via_J, C_U, A_U, C_B_star, A_B_star,
        dict(TRACE_CHAIN), ratios, line_ratios,
    )
