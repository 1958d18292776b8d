import itertools

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from helpers import FIELDS, affine
from necktie import (
    Conic,
    collinear,
    concurrent,
    conic_through,
    dual_conic_through,
    join,
    line,
    meet,
    on_conic,
    point,
    six_lines_on_dual_conic,
    six_on_conic,
    tangent_line,
)
from necktie.conics import conic_is_degenerate, hexagon_sides, line_on_dual_conic, veronese_det
from necktie.errors import DegenerateConic, NonUniqueConic

params = st.lists(st.integers(-12, 12), min_size=6, max_size=6, unique=True)


def parabola(t, p=0):
    return point(t, t * t, p=p)


def tangent(t, p=0):
    # gradient of x^2 - y z at (t, t^2, 1)
    return line(2 * t, -1, -t * t, p=p)


def test_unit_circle_fit():
    pts = [point(1, 0), point(0, 1), point(-1, 0), point(0, -1), point(3, 4, 5)]
    c = conic_through(*pts)
    assert c == Conic.from_coefficients((1, 1, -1, 0, 0, 0))
    assert on_conic(c, point(-3, 4, 5))
    assert not on_conic(c, point(1, 1))
    assert not c.is_degenerate()


def test_coefficients_round_trip():
    c = Conic.from_coefficients((1, 2, 3, 4, 5, 6))
    assert Conic.from_coefficients(c.coefficients()) == c


@pytest.mark.parametrize("p", FIELDS)
@given(params)
def test_six_points_on_parabola(p, ts):
    pts = [parabola(t, p) for t in ts]
    assert six_on_conic(*pts)
    c = conic_through(*pts[:5])
    assert on_conic(c, pts[5])


@given(st.lists(affine, min_size=6, max_size=6, unique=True))
def test_fit_then_test_agrees_with_determinant(xy):
    pts = [point(*q) for q in xy]
    try:
        c = conic_through(*pts[:5])
    except NonUniqueConic:
        assume(False)
    assert on_conic(c, pts[5]) == six_on_conic(*pts)


@given(st.lists(affine, min_size=6, max_size=6, unique=True), st.permutations(range(6)))
def test_veronese_determinant_permutation_symmetry(xy, perm):
    pts = [point(*q) for q in xy]
    d = veronese_det(pts)
    assert abs(veronese_det([pts[i] for i in perm])) == abs(d)


def test_non_unique_conic():
    pts = [point(0, 0), point(1, 0), point(2, 0), point(3, 0), point(0, 5)]
    with pytest.raises(NonUniqueConic):
        conic_through(*pts)


def test_degenerate_conic_is_a_value():
    # two lines y = x and x + y = 4 through five points
    pts = [point(0, 0), point(1, 1), point(3, 3), point(4, 0), point(0, 4)]
    c = conic_through(*pts)
    assert conic_is_degenerate(c)
    assert on_conic(c, point(2, 2)) and on_conic(c, point(5, -1))
    with pytest.raises(DegenerateConic):
        c.dual()
    with pytest.raises(DegenerateConic):
        tangent_line(c, line(1, 0, 0))


@pytest.mark.parametrize("p", FIELDS)
def test_tangency_and_duality(p):
    c = conic_through(*(parabola(t, p) for t in (0, 1, 2, 3, -1)))
    assert tangent_line(c, tangent(5, p))
    assert not tangent_line(c, join(parabola(1, p), parabola(2, p)))
    d = c.dual()
    assert line_on_dual_conic(d, tangent(-4, p))
    assert d.dual() == c


@pytest.mark.parametrize("p", FIELDS)
@given(params)
def test_brianchon_for_tangent_hexagon(p, ts):
    ls = [tangent(t, p) for t in ts]
    assert six_lines_on_dual_conic(*ls)
    d = dual_conic_through(*ls[:5])
    assert line_on_dual_conic(d, ls[5])
    # Brianchon: main diagonals of the circumscribed hexagon concur
    v = [meet(ls[i], ls[(i + 1) % 6]) for i in range(6)]
    assert concurrent(join(v[0], v[3]), join(v[1], v[4]), join(v[2], v[5]))


@given(params)
def test_pascal_line(ts):
    h = [parabola(t) for t in ts]
    s = hexagon_sides(*h)
    x = [meet(s[i], s[i + 3]) for i in range(3)]
    assert collinear(*x)


def test_generic_sixth_point_is_off_conic():
    pts = [parabola(t) for t in range(5)] + [point(1, 2)]
    assert not six_on_conic(*pts)
    lines = [tangent(t) for t in range(5)] + [line(1, 1, 1)]
    assert not six_lines_on_dual_conic(*lines)


def test_asymmetric_matrix_rejected():
    with pytest.raises(ValueError):
        Conic((1, 2, 0, 3, 1, 0, 0, 0, 1))


def test_hexagon_sides_closes_up():
    vs = [point(*q) for q in itertools.islice(((i, i * i) for i in range(6)), 6)]
    s = hexagon_sides(*vs)
    assert len(s) == 6 and s[5] == join(vs[5], vs[0])
