from fractions import Fraction as F

import pytest

from helpers import FIELDS, affine_of, k1
from necktie import CLAIMS, Status, Trial, point, verify_claim
from necktie.fuzz import FuzzPlan, draw_trial
from necktie.projective import ProjectiveMap
from necktie.theorems import (
    verify_1_1,
    verify_1_2,
    verify_1_5,
    verify_1_5_trace,
    verify_1_6,
    verify_lemma2,
)

CFG_CLAIMS = [c for c in CLAIMS if not c.startswith("lemma")]


def _k1_trial(p=0):
    lemma2 = tuple(point(*xy, p=p) for xy in [(0, 0), (4, 0), (0, 4), (1, 1), (1, 2)])
    return Trial(k1(p), lemma2=lemma2)


@pytest.mark.parametrize("p", FIELDS)
@pytest.mark.parametrize("claim", [c for c in CLAIMS if c not in ("lemma1", "1.5-trace")])
def test_k1_claims_hold(p, claim):
    v = verify_claim(claim, _k1_trial(p))
    assert v.status is Status.HOLDS, v
    assert v.determinants and all(d == 0 for d in v.determinants.values())


@pytest.mark.parametrize("claim", [c for c in CLAIMS if c not in ("lemma1", "1.5-trace")])
def test_k1_controls_violate(claim):
    v = verify_claim(claim, _k1_trial(), perturb=True)
    assert v.status is Status.VIOLATED
    assert any(d != 0 for d in v.determinants.values())


def test_k1_trace_is_degenerate_not_violated():
    # T_A = G_A = A_P in this configuration, so the chain starts from a
    # quadruple with repeated points
    v = verify_1_5_trace(k1())
    assert v.status is Status.DEGENERATE
    assert "fewer than three distinct" in v.reason
    assert verify_1_5(k1()).flags["trace"] == "degenerate"


def test_witness_points():
    v = verify_1_1(k1())
    assert affine_of(v.points["W"]) == (F(15, 7), F(15, 7))
    v6 = verify_1_6(k1())
    assert affine_of(v6.points["V"]) == (F(20, 11), F(40, 33))
    v2 = verify_lemma2(*(point(*xy) for xy in [(0, 0), (4, 0), (0, 4), (1, 1), (1, 2)]))
    assert affine_of(v2.points["X"]) == (F(20, 17), F(24, 17))


def test_1_2_flags_degenerate_conic_in_k1():
    v = verify_1_2(k1())
    assert v.status is Status.HOLDS
    assert v.flags["conic_degenerate"] is True  # A, W, A1 all lie on y = x


def test_degenerate_configuration_reports_degenerate():
    v = verify_1_6(k1(Q=(1, 2)))
    assert v.status is Status.DEGENERATE
    assert "V_A" in v.reason


def test_q_equals_p_matches_1_1():
    cfg = k1(Q=(1, 1))
    a, b = verify_1_1(cfg), verify_1_6(cfg)
    assert a.status is b.status is Status.HOLDS
    assert b.points["V_C"] == a.points["W_C"] and b.points["V"] == a.points["W"]


def test_unknown_and_inapplicable_claims():
    with pytest.raises(ValueError):
        verify_claim("2.0", _k1_trial())
    with pytest.raises(ValueError):
        verify_claim("lemma1", _k1_trial())
    with pytest.raises(ValueError):
        verify_claim("1.6", Trial(k1(Q=None)))


def test_applicable_claims():
    assert Trial(k1(Q=None, aprime=None)).applicable() == tuple(
        c for c in CFG_CLAIMS if c not in ("1.2", "1.6", "1.6-brianchon")
    )
    assert set(_k1_trial().applicable()) == set(CLAIMS) - {"lemma1"}


@pytest.mark.parametrize("index", range(5))
def test_random_trials_hold_and_controls_fail(index):
    trial, _ = draw_trial(FuzzPlan(seed=11, bound=30), index)
    for claim in CLAIMS:
        assert verify_claim(claim, trial).status is Status.HOLDS, claim
        assert verify_claim(claim, trial, perturb=True).status is not Status.HOLDS, claim


@pytest.mark.parametrize("index", range(3))
def test_statuses_survive_a_projective_map(index):
    trial, _ = draw_trial(FuzzPlan(seed=12, bound=30), index)
    M = ProjectiveMap((2, 1, 0, -1, 3, 1, 1, 0, 5))
    moved = trial.mapped(M)
    for claim in CLAIMS:
        assert verify_claim(claim, moved).status is verify_claim(claim, trial).status, claim
