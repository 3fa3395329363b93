from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from motivic.polygons import Polygon, equals, hodge_polygon, lies_above, newton_polygon


def verts(p: Polygon):
    return [(x, y) for x, y in p.vertices]


def test_newton_examples():
    assert verts(newton_polygon([(0, 0), (1, 0), (2, 1)])) == [(0, 0), (1, 0), (2, 1)]
    assert verts(newton_polygon([(0, 0), (1, 5), (2, 1)])) == [(0, 0), (2, 1)]
    assert verts(newton_polygon([(0, 0), (1, math.inf), (2, 1)])) == [(0, 0), (2, 1)]
    assert verts(newton_polygon([(0, 0), (1, None), (2, 1)])) == [(0, 0), (2, 1)]
    # collinear interior points are not vertices
    assert verts(newton_polygon([(0, 0), (1, 1), (2, 2)])) == [(0, 0), (2, 2)]


def test_newton_errors():
    with pytest.raises(ValueError):
        newton_polygon([])
    with pytest.raises(ValueError):
        newton_polygon([(0, None), (1, 2)])
    with pytest.raises(ValueError):
        newton_polygon([(0, 1), (0, 2)])
    with pytest.raises(ValueError):
        newton_polygon([(0, None)])


def test_hodge_examples():
    assert verts(hodge_polygon([3, 3])) == [(0, 0), (3, 0), (6, 3)]
    assert verts(hodge_polygon([1, 20, 1])) == [(0, 0), (1, 0), (21, 20), (22, 22)]
    assert verts(hodge_polygon([1])) == [(0, 0), (1, 0)]
    assert verts(hodge_polygon([0, 2])) == [(0, 0), (2, 2)]
    with pytest.raises(ValueError):
        hodge_polygon([0, 0])


def test_comparison_examples():
    n = newton_polygon([(0, 0), (2, 1)])
    h = hodge_polygon([1, 1])
    assert lies_above(n, h) and not equals(n, h)
    assert lies_above(h, h) and equals(h, h)
    g2 = newton_polygon([(0, 0), (1, 0), (2, 0), (3, 1), (4, 2)])
    assert verts(g2) == [(0, 0), (2, 0), (4, 2)]
    assert equals(hodge_polygon([2, 2]), g2)
    with pytest.raises(ValueError):
        lies_above(hodge_polygon([1]), hodge_polygon([1, 1]))


def test_polygon_validation_and_json():
    with pytest.raises(ValueError):
        Polygon(((1, 0), (2, 1)))
    with pytest.raises(ValueError):
        Polygon(((0, 0), (1, 1), (2, 1)))
    p = newton_polygon([(0, 0), (3, Fraction(1, 2)), (4, 3)])
    d = p.to_dict()
    assert d == {"vertices": [[0, "0/1"], [3, "1/2"], [4, "3/1"]]}
    assert Polygon.from_dict(d) == p
    assert p(Fraction(3, 2)) == Fraction(1, 4)


def brute_force_lower_hull(points, x):
    """min over all chords (and points) spanning x: an independent description of the hull."""
    best = None
    for (x0, y0) in points:
        if x0 == x:
            best = y0 if best is None else min(best, y0)
    for (x0, y0), (x1, y1) in combinations(points, 2):
        if x0 > x1:
            (x0, y0), (x1, y1) = (x1, y1), (x0, y0)
        if x0 < x < x1:
            y = y0 + (y1 - y0) * Fraction(x - x0, x1 - x0)
            best = y if best is None else min(best, y)
    return best


point_sets = st.lists(
    st.one_of(st.none(), st.fractions(min_value=-5, max_value=5, max_denominator=4)),
    min_size=1,
    max_size=8,
).filter(lambda vs: vs[0] is not None)


@settings(max_examples=250, deadline=None)
@given(point_sets)
def test_hull_matches_brute_force_and_is_minimal(vals):
    points = [(i, v) for i, v in enumerate(vals)]
    finite = [(i, Fraction(v)) for i, v in points if v is not None]
    p = newton_polygon(points)
    lo, hi = p.x_range
    assert lo == 0 and hi == max(i for i, _ in finite)
    for x2 in range(0, 2 * hi + 1):
        x = Fraction(x2, 2)
        assert p(x) == brute_force_lower_hull(finite, x)
    # every vertex is an input point, and removing it changes the function
    assert set(p.vertices) <= set(finite)
    for k in range(1, len(p.vertices) - 1):
        (x0, y0), (x1, y1), (x2_, y2) = p.vertices[k - 1 : k + 2]
        chord = y0 + (y2 - y0) * Fraction(x1 - x0, x2_ - x0)
        assert chord > y1


hodge_lists = st.lists(st.integers(0, 3), min_size=1, max_size=4).filter(any)


@settings(max_examples=200, deadline=None)
@given(hodge_lists)
def test_hodge_rise_and_run(h):
    p = hodge_polygon(h)
    assert p.x_range == (0, sum(h))
    assert p.vertices[-1][1] == sum(j * hj for j, hj in enumerate(h))


def _random_polygon_on(width, vals):
    """Newton polygon over [0, width] from (0, 0), interior points vals[1..] and an endpoint."""
    interior = [(i, vals[i]) for i in range(1, width)]
    return newton_polygon([(0, 0), *interior, (width, vals[0])])


@settings(max_examples=200, deadline=None)
@given(
    st.integers(1, 5),
    st.lists(st.lists(st.integers(-2, 4), min_size=6, max_size=6), min_size=3, max_size=3),
)
def test_lies_above_is_a_partial_order(width, rows):
    p, q, r = (_random_polygon_on(width, row) for row in rows)
    assert lies_above(p, p) and equals(p, p)
    if lies_above(p, q) and lies_above(q, p):
        assert equals(p, q)
    if lies_above(p, q) and lies_above(q, r):
        assert lies_above(p, r)
    assert equals(p, q) == equals(q, p)
