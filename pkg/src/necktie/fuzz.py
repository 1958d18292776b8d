"""Deterministic random configurations and the fuzz driver.

Each trial index owns an independent RNG stream seeded from
``(seed, index, purpose)``, so trials can be generated in any order or in
parallel and a plan always yields the same sequence of instances.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional

from .constructions import Configuration, Lemma1Instance, lemma1_parts, lemma2_points
from .conics import conic_through
from .errors import GenerationExhausted, GeometryError, InvariantError
from .projective import Point, join
from .scalars import MERSENNE_61
from .theorems import CLAIMS, Context, Status, Trial, Verdict, l3_samples, verify_claim

RETRY_BUDGET = 1024
DEFAULT_BOUND = 100


@dataclass(frozen=True)
class FuzzPlan:
    seed: int = 42
    trials: int = 1000
    bound: int = DEFAULT_BOUND
    field: str = "rational"  # or "prime"
    modulus: int = MERSENNE_61
    lemma1_samples: int = 8

    def __post_init__(self):
        if self.field not in ("rational", "prime"):
            raise ValueError(f"unknown scalar model {self.field!r}")
        if self.bound < 1:
            raise ValueError("coordinate bound must be positive")
        if self.lemma1_samples < 6:
            raise ValueError("lemma 1 needs at least six samples")

    @property
    def p(self) -> int:
        return self.modulus if self.field == "prime" else 0

    def as_dict(self) -> dict:
        d = {
            "seed": self.seed,
            "trials": self.trials,
            "bound": self.bound,
            "field": self.field,
            "lemma1_samples": self.lemma1_samples,
        }
        if self.field == "prime":
            d["modulus"] = self.modulus
        return d


def _rng(plan: FuzzPlan, index: int, purpose: str) -> random.Random:
    return random.Random(f"necktie:{plan.seed}:{index}:{purpose}")


def _pt(rng, bound, p):
    return Point((rng.randint(-bound, bound), rng.randint(-bound, bound), 1), p)


def _nonzero(rng, bound):
    while True:
        k = rng.randint(-bound, bound)
        if k:
            return k


def draw_configuration(plan: FuzzPlan, index: int) -> tuple[Configuration, int, Context]:
    """Configuration for trial ``index``, its rejection count and its built constructions.

    Draws are resampled until the configuration invariants hold and every
    construction the claims use is defined.
    """
    rng = _rng(plan, index, "cfg")
    p, bound = plan.p, plan.bound
    for attempt in range(RETRY_BUDGET):
        A, B, C, P, Q = (_pt(rng, bound, p) for _ in range(5))
        params = [(_nonzero(rng, bound), _nonzero(rng, bound)) for _ in range(4)]
        try:
            cfg = Configuration.from_params(A, B, C, P, *params[:3], Q=Q, aprime=params[3])
            cfg.validate()
            ctx = Context(cfg)
            ctx.build_all()
        except (GeometryError, InvariantError, ValueError):
            continue
        return cfg, attempt, ctx
    raise GenerationExhausted(f"no valid configuration after {RETRY_BUDGET} draws (index {index})")


def random_configuration(plan: FuzzPlan, index: int) -> Configuration:
    return draw_configuration(plan, index)[0]


def draw_lemma1(plan: FuzzPlan, index: int) -> tuple[Lemma1Instance, int]:
    rng = _rng(plan, index, "lemma1")
    p, bound = plan.p, plan.bound
    for attempt in range(RETRY_BUDGET):
        A, B, C, D, E, F1, F2, F3 = (_pt(rng, bound, p) for _ in range(8))
        ks = [_nonzero(rng, bound) for _ in range(plan.lemma1_samples - 1)]
        try:
            l1, l2, l3 = join(E, F1), join(E, F2), join(E, F3)
            inst = Lemma1Instance(A, B, C, D, E, l1, l2, l3)
            inst = replace(inst, samples=l3_samples(inst, plan.lemma1_samples, ks))
            inst.validate()
            if len(set(inst.samples)) != len(inst.samples):
                continue
            xs = [lemma1_parts(A, B, C, D, l1, l2, S)[2] for S in inst.samples]
            conic_through(A, B, E, xs[0], xs[1])
        except (GeometryError, InvariantError, ValueError):
            continue
        return inst, attempt
    raise GenerationExhausted(f"no valid lemma 1 instance after {RETRY_BUDGET} draws (index {index})")


def draw_lemma2(plan: FuzzPlan, index: int) -> tuple[tuple[Point, ...], int]:
    rng = _rng(plan, index, "lemma2")
    p, bound = plan.p, plan.bound
    for attempt in range(RETRY_BUDGET):
        pts = tuple(_pt(rng, bound, p) for _ in range(5))
        try:
            lemma2_points(*pts)
        except GeometryError:
            continue
        return pts, attempt
    raise GenerationExhausted(f"no valid lemma 2 instance after {RETRY_BUDGET} draws (index {index})")


def draw_trial(plan: FuzzPlan, index: int, claims: Iterable[str] = CLAIMS) -> tuple[Trial, int]:
    claims = set(claims)
    trial = Trial(lemma1_samples=plan.lemma1_samples)
    rejections = 0
    if claims - {"lemma1", "lemma2"}:
        trial.cfg, r, trial.ctx = draw_configuration(plan, index)
        rejections += r
    if "lemma1" in claims:
        trial.lemma1, r = draw_lemma1(plan, index)
        rejections += r
    if "lemma2" in claims:
        trial.lemma2, r = draw_lemma2(plan, index)
        rejections += r
    return trial, rejections


@dataclass
class ClaimTally:
    holds: int = 0
    violated: int = 0
    degenerate: int = 0
    witnesses: list = field(default_factory=list)  # (trial index, Verdict, Trial)

    def add(self, status: Status) -> None:
        setattr(self, status.value, getattr(self, status.value) + 1)


@dataclass
class Report:
    plan: Optional[FuzzPlan]
    claims: dict[str, ClaimTally]
    rejections: int = 0
    rechecks: list = field(default_factory=list)  # (trial index, claim, prime status, rational status)

    def count(self, status: Status) -> int:
        return sum(getattr(t, status.value) for t in self.claims.values())


def _run_trial(plan: FuzzPlan, index: int, claims: tuple[str, ...], perturb: bool):
    trial, rejections = draw_trial(plan, index, claims)
    results = []
    for claim in claims:
        verdict = verify_claim(claim, trial, perturb=perturb)
        recheck = None
        if plan.field == "prime" and verdict.status is Status.VIOLATED:
            exact_plan = replace(plan, field="rational")
            exact_trial, _ = draw_trial(exact_plan, index, (claim,))
            exact = verify_claim(claim, exact_trial, perturb=perturb)
            recheck = (verdict.status, exact.status)
            verdict, trial_for_witness = exact, exact_trial
        else:
            trial_for_witness = trial
        results.append((claim, verdict, trial_for_witness if verdict.status is Status.VIOLATED else None, recheck))
    return index, rejections, results


def _run_chunk(args):
    plan, indices, claims, perturb = args
    return [_run_trial(plan, i, claims, perturb) for i in indices]


def _normalize_claims(claims) -> tuple[str, ...]:
    if claims in ("all", None):
        return CLAIMS
    if isinstance(claims, str):
        claims = [claims]
    claims = set(claims)
    unknown = claims - set(CLAIMS)
    if unknown:
        raise ValueError(f"unknown claims: {sorted(unknown)}")
    return tuple(c for c in CLAIMS if c in claims)


def fuzz(claims, plan: FuzzPlan, *, perturb: bool = False, workers: int = 1) -> Report:
    """Verify ``claims`` over ``plan.trials`` random instances.

    ``perturb=True`` runs the built-in negative controls instead.  With
    ``workers > 1`` trials are spread over processes; the report is the same.
    """
    claims = _normalize_claims(claims)
    indices = list(range(plan.trials))
    if workers > 1 and plan.trials > 1:
        chunks = [indices[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = ex.map(_run_chunk, [(plan, c, claims, perturb) for c in chunks])
            outcomes = [o for part in parts for o in part]
    else:
        outcomes = [_run_trial(plan, i, claims, perturb) for i in indices]
    outcomes.sort(key=lambda o: o[0])
    report = Report(plan, {c: ClaimTally() for c in claims})
    for index, rejections, results in outcomes:
        report.rejections += rejections
        for claim, verdict, trial, recheck in results:
            tally = report.claims[claim]
            tally.add(verdict.status)
            if verdict.status is Status.VIOLATED:
                tally.witnesses.append((index, verdict, trial))
            if recheck is not None:
                report.rechecks.append((index, claim, recheck[0].value, recheck[1].value))
    return report
