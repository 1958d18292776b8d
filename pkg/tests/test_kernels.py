import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from necktie import _kernels_py as py
from necktie import kernels
from necktie.scalars import MERSENNE_61

needs_c = pytest.mark.skipif("cython" not in kernels.available_backends(), reason="extension not built")
big = st.integers(-(10**30), 10**30)
triple = st.tuples(big, big, big)


def _reduce(vs, p):
    return [tuple(x % p for x in v) for v in vs] if p else vs


@needs_c
@pytest.mark.parametrize("p", [0, MERSENNE_61, 7, 2**63 + 29])
@given(st.lists(triple, min_size=6, max_size=6))
def test_backends_agree(p, vs):
    from necktie import _kernels_c as c

    vs = _reduce(vs, p)
    assert c.cross(vs[0], vs[1], p) == py.cross(vs[0], vs[1], p)
    assert c.dot(vs[0], vs[1], p) == py.dot(vs[0], vs[1], p)
    assert c.det3(*vs[:3], p) == py.det3(*vs[:3], p)
    assert c.minors_vanish(vs[0], vs[1], p) == py.minors_vanish(vs[0], vs[1], p)
    assert c.det6_veronese(vs, p) == py.det6_veronese(vs, p)
    rows = [py.veronese(v, p) for v in vs[:5]]
    assert c.kernel5(rows, p) == py.kernel5(rows, p)


@pytest.mark.parametrize("p", [0, MERSENNE_61])
def test_determinant_against_leibniz(p):
    import itertools

    rng = random.Random(3)
    m = [[rng.randint(-50, 50) for _ in range(4)] for _ in range(4)]
    want = 0
    for perm in itertools.permutations(range(4)):
        sign = (-1) ** sum(perm[i] > perm[j] for i in range(4) for j in range(i + 1, 4))
        term = sign
        for i in range(4):
            term *= m[i][perm[i]]
        want += term
    rows = [[x % p for x in r] for r in m] if p else m
    assert kernels.det(rows, p) == (want % p if p else want)


def test_kernel5_spans_the_null_space():
    rng = random.Random(8)
    rows = [[rng.randint(-9, 9) for _ in range(6)] for _ in range(5)]
    k = kernels.kernel5(rows, 0)
    assert any(k)
    assert all(sum(a * b for a, b in zip(r, k)) == 0 for r in rows)


def test_use_backend_switches_and_restores():
    before = kernels.BACKEND
    prev = kernels.use_backend("python")
    try:
        assert prev == before and kernels.BACKEND == "python"
        assert kernels.cross((1, 0, 0), (0, 1, 0), 0) == (0, 0, 1)
    finally:
        kernels.use_backend(prev)
    assert kernels.BACKEND == before
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


@needs_c
@pytest.mark.parametrize("field", ["rational", "prime"])
def test_reports_identical_across_backends(field):
    from necktie.fuzz import FuzzPlan, fuzz
    from necktie.scene_io import emit_report

    plan = FuzzPlan(seed=17, trials=15, field=field)
    reports = []
    for name in ("python", "cython"):
        prev = kernels.use_backend(name)
        try:
            reports.append(emit_report(fuzz("all", plan)) + emit_report(fuzz("all", plan, perturb=True)))
        finally:
            kernels.use_backend(prev)
    assert reports[0] == reports[1]


def test_fallback_when_extension_missing():
    import subprocess
    import sys

    code = (
        "import sys; sys.modules['necktie._kernels_c'] = None\n"
        "from necktie import kernels, fuzz, FuzzPlan, Status\n"
        "assert kernels.BACKEND == 'python' and kernels.available_backends() == ['python']\n"
        "assert fuzz('all', FuzzPlan(trials=5)).count(Status.VIOLATED) == 0\n"
    )
    assert subprocess.run([sys.executable, "-c", code]).returncode == 0
