"""Exact verification of the necktie theorem and its companions."""
from .conics import (
    Conic,
    DualConic,
    conic_through,
    dual_conic_through,
    on_conic,
    six_lines_on_dual_conic,
    six_on_conic,
    tangent_line,
)
from .constructions import (
    Configuration,
    Lemma1Instance,
    cevian_feet,
    g_points,
    lemma1_map,
    lemma2_points,
    necktie_points,
    primed_points,
    q_points,
    t_points,
    theorem_1_5_trace,
)
from .errors import *  # noqa: F401,F403
from .fuzz import FuzzPlan, Report, fuzz, random_configuration
from .kernels import available_backends, use_backend
from .projective import (
    INFINITY,
    Line,
    Point,
    ProjectiveMap,
    apply_map,
    apply_map_line,
    collinear,
    concurrent,
    cross_ratio_lines,
    cross_ratio_points,
    incident,
    join,
    line,
    map_between_quads,
    map_from_frame,
    meet,
    point,
    project_through,
)
from .render import FigureSpec, render_svg
from .scalars import MERSENNE_61, PrimeFieldElement, Rational, format_scalar, parse_scalar
from .scene_io import SceneFile, emit_report, emit_scene, parse_scene, verify_scene
from .theorems import CLAIMS, Status, Trial, Verdict, verify_claim

__version__ = "0.1.0"
