"""Executable verification of every claim, with certificates and negative controls.

Each ``verify_*`` function returns a :class:`Verdict` whose ``determinants``
map holds every exact quantity the claim needs to vanish.  A claim holds iff
all of them are zero; a construction that degenerates yields a ``DEGENERATE``
verdict instead of raising.  Passing ``perturb=True`` shifts one constructed
point before the final test, which must then produce ``VIOLATED``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional

from . import kernels as _k
from .conics import conic_through, hexagon_sides, veronese_det
from .constructions import (
    Configuration,
    Lemma1Instance,
    TRACE_CHAIN,
    _cr_parts,
    g_points,
    lemma1_map,
    lemma1_parts,
    lemma2_points,
    necktie_points,
    primed_points,
    q_points,
    t_points,
    theorem_1_5_trace,
)
from .errors import GeometryError, NonUniqueConic
from .projective import Point, ProjectiveMap, apply_map, apply_map_line, det3, join, meet, perturbed

CLAIMS = (
    "1.1", "1.2", "1.3", "1.4", "1.4-corollary", "1.5", "1.5-trace",
    "1.6", "1.6-brianchon", "lemma1", "lemma2", "pappus-cert", "brianchon-cert",
)


class Status(str, enum.Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    DEGENERATE = "degenerate"


@dataclass
class Verdict:
    claim: str
    status: Status
    determinants: dict[str, int] = field(default_factory=dict)
    points: dict[str, Point] = field(default_factory=dict)
    flags: dict[str, object] = field(default_factory=dict)
    reason: Optional[str] = None


def _judge(claim, dets, points, flags=None) -> Verdict:
    status = Status.HOLDS if all(v == 0 for v in dets.values()) else Status.VIOLATED
    return Verdict(claim, status, dets, points, flags or {})


def _degenerate(claim, exc) -> Verdict:
    return Verdict(claim, Status.DEGENERATE, reason=f"{type(exc).__name__}: {exc}")


def _eq_det(r, s, p):
    """Cross-multiplied difference of two cross-ratios given as (num, den)."""
    d = r[0] * s[1] - s[0] * r[1]
    return d % p if p else d


class Context:
    """Lazily built constructions of one configuration, shared across claims."""

    def __init__(self, cfg: Configuration):
        self.cfg = cfg

    @cached_property
    def frame(self):
        return necktie_points(self.cfg)

    @cached_property
    def t(self):
        return t_points(self.cfg, self.frame)

    @cached_property
    def g(self):
        return g_points(self.cfg, self.frame)

    @cached_property
    def primed(self):
        return primed_points(self.cfg, self.frame)

    @cached_property
    def q(self):
        return q_points(self.cfg)

    def build_all(self) -> None:
        """Force every construction (raises on the first degenerate step)."""
        self.frame, self.t, self.g
        if self.cfg.APrime is not None:
            self.primed
        if self.cfg.Q is not None:
            self.q


def _ctx(cfg, ctx):
    return ctx if ctx is not None and ctx.cfg is cfg else Context(cfg)


def _pappus(cfg, f):
    return {
        "C,W_C,J_C": det3(cfg.C, f.W_C, f.J_C),
        "A,W_A,J_A": det3(cfg.A, f.W_A, f.J_A),
        "B,W_B,J_B": det3(cfg.B, f.W_B, f.J_B),
    }


def verify_1_1(cfg: Configuration, *, perturb: bool = False, ctx: Context | None = None) -> Verdict:
    ctx = _ctx(cfg, ctx)
    try:
        f = ctx.frame
        W_C = perturbed(f.W_C) if perturb else f.W_C
        dets = {"C,W_C,W": det3(cfg.C, W_C, f.W), **_pappus(cfg, f)}
    except GeometryError as exc:
        return _degenerate("1.1", exc)
    return _judge("1.1", dets, f.as_dict())


def _fit_flag(*pts):
    try:
        return conic_through(*pts).is_degenerate()
    except NonUniqueConic:
        return None


def verify_1_2(cfg: Configuration, *, perturb: bool = False, ctx: Context | None = None) -> Verdict:
    if cfg.APrime is None:
        raise ValueError("claim 1.2 needs A'_P")
    ctx = _ctx(cfg, ctx)
    try:
        f, pr = ctx.frame, ctx.primed
        N = perturbed(pr.N) if perturb else pr.N
        dets = {"A,B,C,W,A1,N": veronese_det((cfg.A, cfg.B, cfg.C, f.W, cfg.A1, N))}
    except GeometryError as exc:
        return _degenerate("1.2", exc)
    flags = {"conic_degenerate": _fit_flag(cfg.A, cfg.B, cfg.C, f.W, cfg.A1)}
    pts = {"W": f.W, "A1": cfg.A1, **pr.as_dict(), "N": N}
    return _judge("1.2", dets, pts, flags)


def verify_1_3(cfg: Configuration, *, perturb: bool = False, ctx: Context | None = None) -> Verdict:
    ctx = _ctx(cfg, ctx)
    A, B, C, P = cfg.A, cfg.B, cfg.C, cfg.P
    try:
        f, t = ctx.frame, ctx.t
        T_A = perturbed(t.T_A) if perturb else t.T_A
        dets = {
            "AT_A,BT_B,CT_C": det3(join(A, T_A), join(B, t.T_B), join(C, t.T_C)),
            "T,W,P": det3(t.T, f.W, P),
            "C,W,J_C": det3(C, f.W, f.J_C),
        }
    except GeometryError as exc:
        return _degenerate("1.3", exc)
    return _judge("1.3", dets, {"W": f.W, **t.as_dict(), "T_A": T_A})


def verify_1_4(cfg: Configuration, *, perturb: bool = False, ctx: Context | None = None) -> Verdict:
    ctx = _ctx(cfg, ctx)
    A, B, C, P = cfg.A, cfg.B, cfg.C, cfg.P
    try:
        f, g = ctx.frame, ctx.g
        G_B = perturbed(g.G_B) if perturb else g.G_B
        dets = {
            "AG_A,BG_B,CG_C": det3(join(A, g.G_A), join(B, G_B), join(C, g.G_C)),
            "W_AA_P,W_BB_P,W_CC_P": det3(
                join(f.W_A, f.A_P), join(f.W_B, f.B_P), join(f.W_C, f.C_P)
            ),
            "A_P,G_A,B_P,G_B,C_P,G_C": veronese_det(
                (f.A_P, g.G_A, f.B_P, g.G_B, f.C_P, g.G_C)
            ),
        }
        RP = join(g.R, P)
        for name, (a, b, c, d) in {
            "A_PG_B^G_AB_P on RP": (f.A_P, g.G_B, g.G_A, f.B_P),
            "C_PG_B^G_CB_P on RP": (f.C_P, g.G_B, g.G_C, f.B_P),
            "A_PG_C^G_AC_P on RP": (f.A_P, g.G_C, g.G_A, f.C_P),
        }.items():
            X = meet(join(a, b), join(c, d))
            dets[name] = _k.dot(X.v, RP.v, P.p)
    except GeometryError as exc:
        return _degenerate("1.4", exc)
    return _judge("1.4", dets, {**g.as_dict(), "G_B": G_B})


def verify_1_4_corollary(cfg: Configuration, *, perturb: bool = False, ctx: Context | None = None) -> Verdict:
    ctx = _ctx(cfg, ctx)
    try:
        g = ctx.g
        R = perturbed(g.R) if perturb else g.R
        dets = {"G,R,P": det3(g.G, R, cfg.P)}
    except GeometryError as exc:
        return _degenerate("1.4-corollary", exc)
    return _judge("1.4-corollary", dets, {"G": g.G, "R": R, "P": cfg.P})


def verify_1_5(cfg: Configuration, *, perturb: bool = False, ctx: Context | None = None) -> Verdict:
    ctx = _ctx(cfg, ctx)
    A, B, C, P = cfg.A, cfg.B, cfg.C, cfg.P
    try:
        t, g = ctx.t, ctx.g
        T = perturbed(t.T) if perturb else t.T
        dets = {"A,B,C,P,G,T": veronese_det((A, B, C, P, g.G, T))}
    except GeometryError as exc:
        return _degenerate("1.5", exc)
    flags = {
        "conic_degenerate": _fit_flag(A, B, C, P, g.G),
        "trace": verify_1_5_trace(cfg, ctx=ctx).status.value,
    }
    return _judge("1.5", dets, {"G": g.G, "T": T}, flags)


def verify_1_5_trace(cfg: Configuration, *, perturb: bool = False, ctx: Context | None = None) -> Verdict:
    ctx = _ctx(cfg, ctx)
    p = cfg.p
    try:
        f, t, g = ctx.frame, ctx.t, ctx.g
        tr = theorem_1_5_trace(cfg, f, t, g)
        J_A = perturbed(f.J_A) if perturb else f.J_A
        dets = {
            "P,J_A,T_A": det3(cfg.P, J_A, t.T_A),
            "P,J_C,T_C": det3(cfg.P, f.J_C, t.T_C),
        }
        first = tr.ratios[TRACE_CHAIN[0][0]]
        for name, _ in TRACE_CHAIN[1:]:
            dets[f"{TRACE_CHAIN[0][0]}={name}"] = _eq_det(first, tr.ratios[name], p)
        at_a, at_c = tr.line_ratios
        dets["(AB,AG,AP,AT)=(CB,CG,CP,CT)"] = _eq_det(at_a, at_c, p)
        dets["(AB,AG,AP,AT)=(B,G_A,A_P,T_A)"] = _eq_det(at_a, first, p)
    except GeometryError as exc:
        return _degenerate("1.5-trace", exc)
    flags = {"ratios": dict(tr.ratios)}
    return _judge("1.5-trace", dets, tr.points(), flags)


def _v_point(cfg, q):
    return meet(join(cfg.A, q.V_A), join(cfg.B, q.V_B))


def verify_1_6(cfg: Configuration, *, perturb: bool = False, ctx: Context | None = None) -> Verdict:
    if cfg.Q is None:
        raise ValueError("claim 1.6 needs Q")
    ctx = _ctx(cfg, ctx)
    A, B, C = cfg.A, cfg.B, cfg.C
    try:
        q = ctx.q
        V_C = perturbed(q.V_C) if perturb else q.V_C
        V = _v_point(cfg, q)
        dets = {
            "C,V_C,V": det3(C, V_C, V),
            "AV_A,BV_B,CV_C": det3(join(A, q.V_A), join(B, q.V_B), join(C, V_C)),
        }
    except GeometryError as exc:
        return _degenerate("1.6", exc)
    return _judge("1.6", dets, {**q.as_dict(), "V_C": V_C, "V": V})


def verify_1_6_brianchon(cfg: Configuration, *, perturb: bool = False, ctx: Context | None = None) -> Verdict:
    if cfg.Q is None:
        raise ValueError("claim 1.6-brianchon needs Q")
    ctx = _ctx(cfg, ctx)
    A1, B1, C1 = cfg.A1, cfg.B1, cfg.C1
    try:
        q = ctx.q
        V_A = perturbed(q.V_A) if perturb else q.V_A
        dets = {
            "A1V_A,B1V_B,C1V_C": det3(join(A1, V_A), join(B1, q.V_B), join(C1, q.V_C)),
            "A1B_QC1A_QB1C_Q circumscribed": veronese_det(
                hexagon_sides(A1, q.B_Q, C1, q.A_Q, B1, q.C_Q)
            ),
        }
        pts = {**q.as_dict(), "V_A": V_A}
        pts["A1V_A^B1V_B"] = meet(join(A1, V_A), join(B1, q.V_B))
    except GeometryError as exc:
        return _degenerate("1.6-brianchon", exc)
    return _judge("1.6-brianchon", dets, pts)


def verify_pappus_cert(cfg: Configuration, *, perturb: bool = False, ctx: Context | None = None) -> Verdict:
    ctx = _ctx(cfg, ctx)
    try:
        f = ctx.frame
        dets = _pappus(cfg, f)
        if perturb:
            dets["C,W_C,J_C"] = det3(cfg.C, f.W_C, perturbed(f.J_C))
    except GeometryError as exc:
        return _degenerate("pappus-cert", exc)
    return _judge("pappus-cert", dets, {k: getattr(f, k) for k in ("W_A", "W_B", "W_C", "J_A", "J_B", "J_C")})


def verify_brianchon_cert(cfg: Configuration, *, perturb: bool = False, ctx: Context | None = None) -> Verdict:
    ctx = _ctx(cfg, ctx)
    A, B, C = cfg.A, cfg.B, cfg.C
    A1, B1, C1 = cfg.A1, cfg.B1, cfg.C1
    try:
        f = ctx.frame
        hexagons = {
            "A C1 B A1 C B1": (A, perturbed(C1) if perturb else C1, B, A1, C, B1),
            "A_P B1 C_P A1 B_P C1": (f.A_P, B1, f.C_P, A1, f.B_P, C1),
        }
        if cfg.Q is not None:
            q = ctx.q
            hexagons["A1 B_Q C1 A_Q B1 C_Q"] = (A1, q.B_Q, C1, q.A_Q, B1, q.C_Q)
        dets = {name: veronese_det(hexagon_sides(*h)) for name, h in hexagons.items()}
    except GeometryError as exc:
        return _degenerate("brianchon-cert", exc)
    return _judge("brianchon-cert", dets, {})


def l3_samples(inst: Lemma1Instance, count: int, params=None) -> tuple[Point, ...]:
    """``count`` points on l3: E + k*F for k = 1..count-1, then E itself.

    ``F`` is a fixed second point of l3; ``params`` overrides the multipliers.
    """
    E, l3 = inst.E, inst.l3
    p = E.p
    F = None
    for axis in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        v = _k.cross(l3.v, axis, p)
        if any(v) and not _k.minors_vanish(v, E.v, p):
            F = v
            break
    if F is None:
        raise GeometryError("l3 has no second point")
    ks = params if params is not None else range(1, count)
    pts = [Point(tuple(k * e + w for e, w in zip(E.v, F)), p) for k in ks]
    return tuple(pts) + (E,)


def verify_lemma1(inst: Lemma1Instance, sample_count: int | None = None, *, perturb: bool = False) -> Verdict:
    samples = inst.samples or l3_samples(inst, sample_count or 8)
    if len(samples) < 6:
        raise ValueError("lemma 1 needs at least six sample positions")
    A, B, C, D, E = inst.A, inst.B, inst.C, inst.D, inst.E
    try:
        inst.validate()
    except ValueError as exc:
        return _degenerate("lemma1", exc)
    try:
        parts = [lemma1_parts(A, B, C, D, inst.l1, inst.l2, S) for S in samples]
        xs = [x for _, _, x in parts]
        if perturb:
            xs[2] = perturbed(xs[2])
        conic = conic_through(A, B, E, xs[0], xs[1])
        f = lemma1_map(inst, samples[0])
        if apply_map(f, A) != B:
            raise GeometryError("f does not send A to B")
        dets = {}
        for i in range(2, len(xs)):
            dets[f"X{i} on conic"] = conic.value(xs[i])
        for i, (Ap, Bp, _) in enumerate(parts):
            dets[f"f(AA'{i}) through B'{i}"] = _k.dot(apply_map_line(f, join(A, Ap)).v, Bp.v, A.p)
    except GeometryError as exc:
        return _degenerate("lemma1", exc)
    pts = {f"X{i}": x for i, x in enumerate(xs)}
    return _judge("lemma1", dets, pts, {"conic_degenerate": conic.is_degenerate()})


def verify_lemma2(A: Point, B: Point, C: Point, P: Point, Q: Point, *, perturb: bool = False) -> Verdict:
    try:
        L = lemma2_points(A, B, C, P, Q)
        A_B = perturbed(L.A_B) if perturb else L.A_B
        l1 = join(A_B, L.B_A)
        l2 = join(L.A_C, L.C_A)
        l3 = join(L.B_C, L.C_B)
        dets = {"A_BB_A,A_CC_A,B_CC_B": det3(l1, l2, l3)}
        X = meet(l1, l2)
    except GeometryError as exc:
        return _degenerate("lemma2", exc)
    return _judge("lemma2", dets, {**L.as_dict(), "A_B": A_B, "X": X})


@dataclass
class Trial:
    """Everything one fuzz trial (or one scene) can be checked against."""

    cfg: Optional[Configuration] = None
    lemma1: Optional[Lemma1Instance] = None
    lemma2: Optional[tuple[Point, Point, Point, Point, Point]] = None
    lemma1_samples: int = 8
    ctx: Optional[Context] = None

    def context(self) -> Context:
        if self.ctx is None or self.ctx.cfg is not self.cfg:
            self.ctx = Context(self.cfg)
        return self.ctx

    def mapped(self, M: ProjectiveMap) -> Trial:
        lem1 = None
        if self.lemma1 is not None:
            L = self.lemma1
            lem1 = Lemma1Instance(
                *(apply_map(M, getattr(L, n)) for n in "ABCDE"),
                *(apply_map_line(M, getattr(L, n)) for n in ("l1", "l2", "l3")),
                tuple(apply_map(M, S) for S in (L.samples or l3_samples(L, self.lemma1_samples))),
            )
        return Trial(
            self.cfg.mapped(M) if self.cfg is not None else None,
            lem1,
            tuple(apply_map(M, X) for X in self.lemma2) if self.lemma2 is not None else None,
            self.lemma1_samples,
        )

    def applicable(self) -> tuple[str, ...]:
        out = []
        for c in CLAIMS:
            if c == "lemma1":
                ok = self.lemma1 is not None
            elif c == "lemma2":
                ok = self.lemma2 is not None
            elif c == "1.2":
                ok = self.cfg is not None and self.cfg.APrime is not None
            elif c in ("1.6", "1.6-brianchon"):
                ok = self.cfg is not None and self.cfg.Q is not None
            else:
                ok = self.cfg is not None
            if ok:
                out.append(c)
        return tuple(out)


_CFG_CLAIMS: dict[str, Callable[..., Verdict]] = {
    "1.1": verify_1_1,
    "1.2": verify_1_2,
    "1.3": verify_1_3,
    "1.4": verify_1_4,
    "1.4-corollary": verify_1_4_corollary,
    "1.5": verify_1_5,
    "1.5-trace": verify_1_5_trace,
    "1.6": verify_1_6,
    "1.6-brianchon": verify_1_6_brianchon,
    "pappus-cert": verify_pappus_cert,
    "brianchon-cert": verify_brianchon_cert,
}


def verify_claim(claim: str, trial: Trial, *, perturb: bool = False) -> Verdict:
    """Dispatch one claim id against a trial; ValueError if the trial lacks its inputs."""
    if claim not in CLAIMS:
        raise ValueError(f"unknown claim {claim!r}")
    if claim not in trial.applicable():
        raise ValueError(f"claim {claim} is not applicable to this input")
    if claim == "lemma1":
        return verify_lemma1(trial.lemma1, trial.lemma1_samples, perturb=perturb)
    if claim == "lemma2":
        return verify_lemma2(*trial.lemma2, perturb=perturb)
    return _CFG_CLAIMS[claim](trial.cfg, perturb=perturb, ctx=trial.context())
