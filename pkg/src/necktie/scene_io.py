"""Scene files in, canonical JSON reports out.

Scalars always travel as strings in ``[-]digits[/digits]`` form; a two-entry
coordinate array is an affine point, a three-entry array homogeneous.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Optional

from .constructions import Configuration, Lemma1Instance, on_cevian
from .errors import InvariantError
from .fuzz import ClaimTally, Report
from .projective import INFINITY, Line, Point, _lift, join, point
from .scalars import DivisionByZero, ParseError, field_element, format_scalar, parse_scalar
from .theorems import Trial, Verdict, verify_claim


@dataclass
class SceneFile:
    cfg: Optional[Configuration] = None
    lemma1: Optional[Lemma1Instance] = None
    lemma2: Optional[tuple[Point, ...]] = None
    lemma1_samples: int = 8

    def trial(self) -> Trial:
        return Trial(self.cfg, self.lemma1, self.lemma2, self.lemma1_samples)


def _scalars(value, path, sizes=(2, 3)):
    if not isinstance(value, list) or len(value) not in sizes:
        raise ParseError(f"{path}: expected an array of {' or '.join(map(str, sizes))} scalars")
    out = []
    for i, text in enumerate(value):
        try:
            out.append(parse_scalar(text))
        except (ParseError, DivisionByZero) as exc:
            raise type(exc)(f"{path}[{i}]: {exc}") from exc
    return out


def _point(value, path) -> Point:
    coords = _scalars(value, path)
    try:
        return point(*coords)
    except ValueError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _pair(value, path):
    return tuple(_scalars(value, path, sizes=(2,)))


def _obj(value, path) -> dict:
    if not isinstance(value, dict):
        raise ParseError(f"{path}: expected an object")
    return value


def _require(d, key, path):
    if key not in d:
        raise ParseError(f"{path}.{key}: missing")
    return d[key]


def _configuration(doc) -> Optional[Configuration]:
    pts = _obj(doc.get("points", {}), "points")
    if not pts:
        return None
    core = {n: _point(_require(pts, n, "points"), f"points.{n}") for n in "ABCP"}
    A, P = core["A"], core["P"]
    params = _obj(doc.get("cevian_params", {}), "cevian_params")
    cev = {}
    for name, base in (("A1", core["A"]), ("B1", core["B"]), ("C1", core["C"])):
        if name in params:
            a, b = _pair(params[name], f"cevian_params.{name}")
            cev[name] = on_cevian(base, P, a, b)
        elif name in pts:
            cev[name] = _point(pts[name], f"points.{name}")
        else:
            raise ParseError(f"cevian_params.{name}: missing")
    Q = _point(doc["Q"], "Q") if "Q" in doc else None
    aprime = None
    if "APrime" in doc:
        a, b = _pair(doc["APrime"], "APrime")
        aprime = on_cevian(A, P, a, b)
    elif "APrime" in pts:
        aprime = _point(pts["APrime"], "points.APrime")
    cfg = Configuration(core["A"], core["B"], core["C"], P, cev["A1"], cev["B1"], cev["C1"], Q, aprime)
    cfg.validate()
    return cfg


def _line(value, names, path) -> Line:
    if isinstance(value, list) and len(value) == 2 and all(isinstance(v, str) and v in names for v in value):
        if names[value[0]] == names[value[1]]:
            raise InvariantError(f"{path}: the two points coincide")
        return join(names[value[0]], names[value[1]])
    coeffs = _scalars(value, path, sizes=(3,))
    if not any(coeffs):
        raise ParseError(f"{path}: zero line")
    return Line(_lift(coeffs, 0))


def _lemma1(block) -> tuple[Lemma1Instance, int]:
    block = _obj(block, "lemma1")
    pts = _obj(_require(block, "points", "lemma1"), "lemma1.points")
    named = {n: _point(v, f"lemma1.points.{n}") for n, v in sorted(pts.items())}
    for n in "ABCDE":
        if n not in named:
            raise ParseError(f"lemma1.points.{n}: missing")
    lines = _obj(_require(block, "lines", "lemma1"), "lemma1.lines")
    ls = [_line(_require(lines, n, "lemma1.lines"), named, f"lemma1.lines.{n}") for n in ("l1", "l2", "l3")]
    samples = tuple(_point(v, f"lemma1.samples[{i}]") for i, v in enumerate(block.get("samples", [])))
    count = block.get("sample_count", max(8, len(samples)))
    if not isinstance(count, int) or count < 6:
        raise ParseError("lemma1.sample_count: expected an integer >= 6")
    if samples and len(samples) < 6:
        raise ParseError("lemma1.samples: at least six positions are needed")
    inst = Lemma1Instance(*(named[n] for n in "ABCDE"), *ls, samples)
    inst.validate()
    return inst, count


def _lemma2(block) -> tuple[Point, ...]:
    block = _obj(block, "lemma2")
    pts = _obj(_require(block, "points", "lemma2"), "lemma2.points")
    return tuple(_point(_require(pts, n, "lemma2.points"), f"lemma2.points.{n}") for n in "ABCPQ")


def parse_scene(data: bytes | str) -> SceneFile:
    """Parse and validate a scene document.

    Raises ParseError (with the path of the offending field) for malformed
    input and InvariantError for geometrically invalid configurations.
    """
    try:
        doc = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"not a JSON document: {exc}") from exc
    doc = _obj(doc, "$")
    scene = SceneFile()
    scene.cfg = _configuration(doc)
    if "lemma1" in doc:
        scene.lemma1, scene.lemma1_samples = _lemma1(doc["lemma1"])
    if "lemma2" in doc:
        scene.lemma2 = _lemma2(doc["lemma2"])
    if scene.cfg is None and scene.lemma1 is None and scene.lemma2 is None:
        raise ParseError("$: scene defines nothing to verify")
    return scene


def point_text(P: Point) -> list[str]:
    return [format_scalar(c) for c in P.canonical()]


def line_text(l: Line) -> list[str]:
    return [format_scalar(c) for c in l.canonical()]


def scene_dict(scene: SceneFile | Trial) -> dict:
    """JSON-ready scene; every point explicit, so it re-parses to equal content."""
    out: dict[str, Any] = {}
    cfg = scene.cfg
    if cfg is not None:
        pts = {n: point_text(getattr(cfg, n)) for n in ("A", "B", "C", "P", "A1", "B1", "C1")}
        if cfg.APrime is not None:
            pts["APrime"] = point_text(cfg.APrime)
        out["points"] = pts
        if cfg.Q is not None:
            out["Q"] = point_text(cfg.Q)
    if scene.lemma1 is not None:
        L = scene.lemma1
        block = {
            "points": {n: point_text(getattr(L, n)) for n in "ABCDE"},
            "lines": {n: line_text(getattr(L, n)) for n in ("l1", "l2", "l3")},
            "sample_count": scene.lemma1_samples,
        }
        if L.samples:
            block["samples"] = [point_text(S) for S in L.samples]
        out["lemma1"] = block
    if scene.lemma2 is not None:
        out["lemma2"] = {"points": {n: point_text(X) for n, X in zip("ABCPQ", scene.lemma2)}}
    return out


def emit_scene(scene: SceneFile | Trial) -> bytes:
    return _dump(scene_dict(scene))


def _scalar_json(x, p):
    if x is INFINITY:
        return "inf"
    if isinstance(x, int):
        return format_scalar(x % p if p else x)
    return format_scalar(x)


def _flag_json(value, p):
    if isinstance(value, dict):
        return {str(k): _flag_json(v, p) for k, v in value.items()}
    if isinstance(value, tuple) and len(value) == 2 and all(isinstance(v, int) for v in value):
        num, den = value
        if den % p == 0 if p else den == 0:
            return "inf"
        return format_scalar(field_element(num, den, p))
    if value is None or isinstance(value, (bool, str)):
        return value
    return str(value)


def verdict_dict(v: Verdict, p: int = 0) -> dict:
    d = {
        "claim": v.claim,
        "status": v.status.value,
        "determinants": {k: _scalar_json(x, p) for k, x in v.determinants.items()},
        "points": {k: point_text(X) for k, X in v.points.items()},
        "flags": {k: _flag_json(x, p) for k, x in v.flags.items()},
    }
    if v.reason is not None:
        d["reason"] = v.reason
    return d


def report_dict(report: Report) -> dict:
    p = report.plan.p if report.plan is not None else 0
    claims = {}
    for cid, tally in report.claims.items():
        witnesses = []
        for index, verdict, trial in tally.witnesses:
            w = {"trial": index, "verdict": verdict_dict(verdict, p)}
            if trial is not None:
                w["scene"] = scene_dict(trial)
            witnesses.append(w)
        claims[cid] = {
            "holds": tally.holds,
            "violated": tally.violated,
            "degenerate": tally.degenerate,
            "witnesses": witnesses,
        }
    return {
        "plan": report.plan.as_dict() if report.plan is not None else None,
        "claims": claims,
        "rejections": report.rejections,
        "rechecks": [
            {"trial": i, "claim": c, "prime": a, "rational": b} for i, c, a, b in report.rechecks
        ],
    }


def _dump(obj) -> bytes:
    return (json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True) + "\n").encode("ascii")


def emit_report(report: Report) -> bytes:
    """Canonical JSON: sorted keys, canonical scalar text, witnesses ordered by trial."""
    return _dump(report_dict(report))


def verify_scene(scene: SceneFile, claims="all") -> Report:
    """Check claims on one scene; every verdict is kept as a witness.

    ``"all"`` selects the claims the scene has data for; naming a claim the
    scene cannot support raises ValueError.
    """
    trial = scene.trial()
    if claims == "all":
        claims = trial.applicable()
    elif isinstance(claims, str):
        claims = (claims,)
    report = Report(None, {})
    for claim in claims:
        verdict = verify_claim(claim, trial)
        tally = report.claims.setdefault(claim, ClaimTally())
        tally.add(verdict.status)
        tally.witnesses.append((0, verdict, None))
    return report
