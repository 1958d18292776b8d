"""Deterministic SVG drawings of a configuration.

Verification never touches this module's numbers.  Coordinates stay exact
(Fractions) up to the final formatting step, which rounds half-to-even at six
decimals, so the output bytes do not depend on the platform's float printing.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional
from xml.sax.saxutils import escape

from .conics import conic_through
from .constructions import Configuration, cevian_feet
from .errors import GeometryError, PointAtInfinity
from .projective import Point, ProjectiveMap, apply_map, map_between_quads
from .theorems import Context

LAYERS = ("triangle", "cevians", "necktie", "j", "t", "g", "r", "v", "conic")
DEFAULT_LAYERS = ("triangle", "cevians", "necktie")

_CHARTS = {"z": (0, 1, 2), "x": (1, 2, 0), "y": (0, 2, 1)}  # (u, v, w): draw (u/w, v/w)

_STYLE = {
    "triangle": ("#000000", "1.5"),
    "cevians": ("#777777", "1"),
    "necktie": ("#c0392b", "1"),
    "j": ("#2874a6", "1"),
    "t": ("#1e8449", "1"),
    "g": ("#7d3c98", "1"),
    "r": ("#7d3c98", "1"),
    "v": ("#b9770e", "1"),
    "conic": ("#1e8449", "1"),
}


@dataclass(frozen=True)
class FigureSpec:
    layers: tuple[str, ...] = DEFAULT_LAYERS
    chart: str = "z"
    width: int = 800
    height: int = 800
    margin: Fraction = Fraction(1, 10)
    normalize: bool = False
    conic_samples: int = 96

    def __post_init__(self):
        unknown = set(self.layers) - set(LAYERS)
        if unknown:
            raise ValueError(f"unknown layers: {sorted(unknown)}")
        if self.chart not in _CHARTS:
            raise ValueError(f"unknown chart {self.chart!r}")
        if self.width <= 0 or self.height <= 0:
            raise ValueError("canvas size must be positive")
        if not 0 <= self.margin < Fraction(1, 2):
            raise ValueError("margin fraction must lie in [0, 1/2)")


def _fmt(x: Fraction) -> str:
    n = round(Fraction(x) * 10**6)  # Fraction.__round__ is half-to-even
    sign = "-" if n < 0 else ""
    q, r = divmod(abs(n), 10**6)
    return f"{sign}{q}.{r:06d}"


def _chart_xy(name: str, P: Point, chart: str) -> tuple[Fraction, Fraction]:
    u, v, w = _CHARTS[chart]
    c = P.canonical()
    if c[w] == 0:
        raise PointAtInfinity(
            f"point {name} lies on the {chart}=0 line of the chart; choose another chart or use --normalize"
        )
    return Fraction(c[u]) / Fraction(c[w]), Fraction(c[v]) / Fraction(c[w])


def normalizing_map(cfg: Configuration) -> ProjectiveMap:
    """Map sending A, B, C, P to (0,0), (1,0), (0,1) and the centroid."""
    p = cfg.p
    frame = (Point((0, 0, 1), p), Point((1, 0, 1), p), Point((0, 1, 1), p), Point((1, 1, 3), p))
    return map_between_quads((cfg.A, cfg.B, cfg.C, cfg.P), frame)


def _layer_content(cfg: Configuration, layer: str, ctx: Context):
    """(points, segments-as-point-name-pairs) contributed by one layer."""
    f = ctx.frame
    if layer == "triangle":
        return {"A": cfg.A, "B": cfg.B, "C": cfg.C}, [("A", "B"), ("B", "C"), ("C", "A")]
    if layer == "cevians":
        A_P, B_P, C_P = cevian_feet(cfg)
        pts = {"P": cfg.P, "A_P": A_P, "B_P": B_P, "C_P": C_P, "A1": cfg.A1, "B1": cfg.B1, "C1": cfg.C1}
        return pts, [("A", "A_P"), ("B", "B_P"), ("C", "C_P")]
    if layer == "necktie":
        pts = {"W_A": f.W_A, "W_B": f.W_B, "W_C": f.W_C, "W": f.W}
        return pts, [("A", "W_A"), ("B", "W_B"), ("C", "W_C")]
    if layer == "j":
        pts = {"J_A": f.J_A, "J_B": f.J_B, "J_C": f.J_C}
        return pts, [("A", "J_A"), ("B", "J_B"), ("C", "J_C")]
    if layer == "t":
        t = ctx.t
        pts = {"T_A": t.T_A, "T_B": t.T_B, "T_C": t.T_C, "T": t.T}
        return pts, [("A", "T_A"), ("B", "T_B"), ("C", "T_C")]
    if layer == "g":
        g = ctx.g
        pts = {"G_A": g.G_A, "G_B": g.G_B, "G_C": g.G_C, "G": g.G}
        return pts, [("A", "G_A"), ("B", "G_B"), ("C", "G_C")]
    if layer == "r":
        g = ctx.g
        return {"R": g.R}, [("W_A", "A_P"), ("W_B", "B_P"), ("W_C", "C_P")]
    if layer == "v":
        if cfg.Q is None:
            raise ValueError("layer 'v' needs Q in the scene")
        q = ctx.q
        pts = {"Q": cfg.Q, "V_A": q.V_A, "V_B": q.V_B, "V_C": q.V_C}
        return pts, [("A", "V_A"), ("B", "V_B"), ("C", "V_C")]
    return {}, []


def _conic_points(cfg: Configuration, ctx: Context, count: int, chart: str) -> list[tuple[Fraction, Fraction]]:
    """Samples of the conic through A, B, C, P, G by second intersection of lines through A.

    Floating point is confined to choosing directions; each sample is then
    rounded to an exact Fraction before anything else happens to it.
    """
    conic = conic_through(cfg.A, cfg.B, cfg.C, cfg.P, ctx.g.G)
    u, v, w = _CHARTS[chart]
    m = [float(x) for x in conic.m]
    X0 = [float(x) for x in cfg.A.canonical()]
    ax, ay = _chart_xy("A", cfg.A, chart)
    out = []
    for k in range(count):
        th = math.pi * k / count
        Y = [0.0, 0.0, 0.0]
        Y[u], Y[v], Y[w] = float(ax) + math.cos(th), float(ay) + math.sin(th), 1.0
        My = [sum(m[3 * i + j] * Y[j] for j in range(3)) for i in range(3)]
        yy = sum(Y[i] * My[i] for i in range(3))
        xy = sum(X0[i] * My[i] for i in range(3))
        S = [yy * X0[i] - 2 * xy * Y[i] for i in range(3)]
        if abs(S[w]) < 1e-12 * max(1.0, max(abs(s) for s in S)):
            continue
        out.append(tuple(Fraction(round(S[i] / S[w] * 10**6), 10**6) for i in (u, v)))
    return out


def _clip(a, b, c, box):
    """Segment of the line a*x + b*y + c = 0 inside the box, or None."""
    x0, y0, x1, y1 = box
    hits = []
    if b:
        for x in (x0, x1):
            y = -(a * x + c) / b
            if y0 <= y <= y1:
                hits.append((x, y))
    if a:
        for y in (y0, y1):
            x = -(b * y + c) / a
            if x0 <= x <= x1:
                hits.append((x, y))
    hits = sorted(set(hits))
    if len(hits) < 2:
        return None
    return hits[0], hits[-1]


def render_svg(
    cfg: Configuration,
    spec: FigureSpec = FigureSpec(),
    derived_points: Optional[dict[str, Point]] = None,
) -> bytes:
    """SVG 1.1 figure of ``cfg``; ``derived_points`` adds extra labeled points."""
    if cfg.p:
        raise ValueError("figures are drawn from rational configurations only")
    derived_points = dict(derived_points or {})
    if spec.normalize:
        H = normalizing_map(cfg)
        cfg = cfg.mapped(H)
        derived_points = {n: apply_map(H, P) for n, P in derived_points.items()}
    ctx = Context(cfg)
    names: dict[str, Point] = {}
    segments: list[tuple[str, str, str]] = []
    for layer in LAYERS:
        if layer not in spec.layers or layer == "conic":
            continue
        try:
            pts, segs = _layer_content(cfg, layer, ctx)
        except GeometryError as exc:
            raise GeometryError(f"layer {layer!r} cannot be constructed: {exc}") from exc
        names.update(pts)
        segments.extend((layer, a, b) for a, b in segs)
    names.update(sorted(derived_points.items()))
    known = {**cfg.points(), **ctx.frame.as_dict()}
    for _, a, b in segments:
        for n in (a, b):
            if n not in names:
                names[n] = known[n]

    xy = {n: _chart_xy(n, P, spec.chart) for n, P in names.items()}
    conic_xy = []
    if "conic" in spec.layers:
        try:
            conic_xy = _conic_points(cfg, ctx, spec.conic_samples, spec.chart)
        except GeometryError:
            pass

    xs = [x for x, _ in xy.values()]
    ys = [y for _, y in xy.values()]
    xmin, xmax, ymin, ymax = min(xs), max(xs), min(ys), max(ys)
    dx, dy = xmax - xmin or Fraction(1), ymax - ymin or Fraction(1)
    W, Hh = Fraction(spec.width), Fraction(spec.height)
    scale = min(W * (1 - 2 * spec.margin) / dx, Hh * (1 - 2 * spec.margin) / dy)
    cx, cy = (xmin + xmax) / 2, (ymin + ymax) / 2
    box = (cx - W / (2 * scale), cy - Hh / (2 * scale), cx + W / (2 * scale), cy + Hh / (2 * scale))

    def px(x, y):
        return W / 2 + (x - cx) * scale, Hh / 2 - (y - cy) * scale

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
        f'<rect x="0" y="0" width="{spec.width}" height="{spec.height}" fill="#ffffff"/>',
        '<g id="lines" fill="none">',
    ]
    for layer, a, b in segments:
        (x1, y1), (x2, y2) = xy[a], xy[b]
        la, lb, lc = y1 - y2, x2 - x1, x1 * y2 - x2 * y1
        seg = _clip(la, lb, lc, box)
        if seg is None:
            continue
        (sx, sy), (tx, ty) = (px(*q) for q in seg)
        colour, width = _STYLE[layer]
        out.append(
            f'<line class="{layer}" data-through="{a} {b}" x1="{_fmt(sx)}" y1="{_fmt(sy)}" '
            f'x2="{_fmt(tx)}" y2="{_fmt(ty)}" stroke="{colour}" stroke-width="{width}"/>'
        )
    out.append("</g>")
    if conic_xy:
        colour, _ = _STYLE["conic"]
        out.append(f'<g id="conic" fill="{colour}">')
        for x, y in conic_xy:
            if box[0] <= x <= box[2] and box[1] <= y <= box[3]:
                sx, sy = px(x, y)
                out.append(f'<circle cx="{_fmt(sx)}" cy="{_fmt(sy)}" r="1.5"/>')
        out.append("</g>")
    out.append('<g id="points" font-family="sans-serif" font-size="14">')
    for n, (x, y) in xy.items():
        sx, sy = px(x, y)
        out.append(f'<circle cx="{_fmt(sx)}" cy="{_fmt(sy)}" r="3" fill="#000000"/>')
        out.append(f'<text x="{_fmt(sx + 5)}" y="{_fmt(sy - 5)}">{escape(n)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("ascii")
