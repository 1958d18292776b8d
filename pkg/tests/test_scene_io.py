import json
from fractions import Fraction as F

import pytest
from hypothesis import given

from helpers import SCENES, k1
from necktie.errors import InvariantError
from necktie.fuzz import FuzzPlan, Report, draw_trial, fuzz
from necktie.scalars import DivisionByZero, ParseError
from necktie.scene_io import emit_report, emit_scene, parse_scene, verify_scene
from hypothesis import strategies as st


def _k1_doc():
    return json.loads((SCENES / "k1.json").read_text())


def test_k1_scene_round_trip():
    scene = parse_scene((SCENES / "k1.json").read_bytes())
    assert scene.cfg == k1()
    again = parse_scene(emit_scene(scene))
    assert again.cfg == scene.cfg and again.lemma2 == scene.lemma2
    assert emit_scene(again) == emit_scene(scene)


def test_explicit_points_and_homogeneous_coordinates():
    doc = _k1_doc()
    del doc["cevian_params"], doc["APrime"]
    doc["points"].update(A1=["6", "6", "2"], B1=["5/2", "1/2"], C1=["1/2", "5/2"], APrime=["4", "4"])
    assert parse_scene(json.dumps(doc)).cfg == k1()


@given(st.integers(0, 10**6))
def test_emitted_fuzz_scenes_round_trip(index):
    trial, _ = draw_trial(FuzzPlan(seed=2), index)
    text = emit_scene(trial)
    scene = parse_scene(text)
    assert scene.cfg == trial.cfg
    assert scene.lemma2 == trial.lemma2
    assert (scene.lemma1.A, scene.lemma1.l3) == (trial.lemma1.A, trial.lemma1.l3)
    assert emit_scene(scene) == text


def test_lemma1_scene():
    scene = parse_scene((SCENES / "lemma1.json").read_bytes())
    assert scene.cfg is None and scene.lemma1_samples == 8
    assert verify_scene(scene).claims["lemma1"].holds == 1


def test_invariant_violation_on_load():
    doc = _k1_doc()
    doc["points"]["P"] = ["2", "2"]
    with pytest.raises(InvariantError, match="P on side BC"):
        parse_scene(json.dumps(doc))


@pytest.mark.parametrize(
    "mutate, path",
    [
        (lambda d: d["points"].__setitem__("A", ["1//2", "0"]), r"points\.A\[0\]"),
        (lambda d: d["points"].__setitem__("B", ["1"]), r"points\.B"),
        (lambda d: d["points"].pop("C"), r"points\.C: missing"),
        (lambda d: d["cevian_params"].__setitem__("B1", ["1", "2", "3"]), r"cevian_params\.B1"),
        (lambda d: d["lemma2"]["points"].pop("Q"), r"lemma2\.points\.Q"),
        (lambda d: d.__setitem__("Q", "2,3"), r"^Q:"),
    ],
)
def test_parse_errors_name_the_field(mutate, path):
    doc = _k1_doc()
    mutate(doc)
    with pytest.raises(ParseError, match=path):
        parse_scene(json.dumps(doc))


def test_zero_denominator_and_garbage():
    doc = _k1_doc()
    doc["points"]["A"] = ["1/0", "0"]
    with pytest.raises(DivisionByZero):
        parse_scene(json.dumps(doc))
    with pytest.raises(ParseError):
        parse_scene(b"\xff\xfe")
    with pytest.raises(ParseError):
        parse_scene("{}")


def test_line_specs():
    doc = json.loads((SCENES / "lemma1.json").read_text())
    doc["lemma1"]["lines"]["l1"] = ["E", "E"]
    with pytest.raises(InvariantError):
        parse_scene(json.dumps(doc))
    doc["lemma1"]["lines"]["l1"] = ["0", "0", "0"]
    with pytest.raises(ParseError, match="zero line"):
        parse_scene(json.dumps(doc))
    doc["lemma1"]["lines"]["l1"] = ["12", "1", "-18"]  # E F1 as coefficients
    parse_scene(json.dumps(doc))


def test_empty_report_skeleton():
    assert emit_report(Report(None, {})) == b'{"claims":{},"plan":null,"rechecks":[],"rejections":0}\n'


def test_k1_verify_report():
    scene = parse_scene((SCENES / "k1.json").read_bytes())
    out = emit_report(verify_scene(scene, "1.1"))
    assert b'"status":"holds"' in out
    assert b'"W":["15/7","15/7","1"]' in out
    doc = json.loads(out)
    assert doc["claims"]["1.1"]["holds"] == 1
    assert list(doc) == sorted(doc)


def test_report_keeps_witness_scene_for_violations():
    report = fuzz("1.1", FuzzPlan(seed=1, trials=3), perturb=True)
    doc = json.loads(emit_report(report))
    w = doc["claims"]["1.1"]["witnesses"]
    assert [x["trial"] for x in w] == [0, 1, 2]
    assert parse_scene(json.dumps(w[0]["scene"])).cfg is not None
    assert doc["plan"]["seed"] == 1


def test_ratio_flags_serialize_as_scalars():
    trial, _ = draw_trial(FuzzPlan(seed=42), 0, ["1.5-trace"])
    from necktie.scene_io import SceneFile

    doc = json.loads(emit_report(verify_scene(SceneFile(cfg=trial.cfg), "1.5-trace")))
    ratios = doc["claims"]["1.5-trace"]["witnesses"][0]["verdict"]["flags"]["ratios"]
    assert len(ratios) == 6 and len(set(ratios.values())) == 1  # both chains meet in the pencil ratio
    assert all(isinstance(F(v), F) for v in ratios.values())
