"""Newton and Hodge polygons with exact rational vertices."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Polygon",
    "newton_polygon",
    "hodge_polygon",
    "lies_above",
    "equals",
]


def _is_inf(v) -> bool:
    return v is None or (isinstance(v, float) and math.isinf(v) and v > 0)


@dataclass(frozen=True)
class Polygon:
    """Graph of a convex piecewise-linear function, given by its vertices."""

    vertices: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        verts = tuple((int(x), Fraction(y)) for x, y in self.vertices)
        if not verts:
            raise ValueError("a polygon needs at least one vertex")
        if verts[0][0] != 0:
            raise ValueError("the first vertex must lie over x = 0")
        for (x0, _), (x1, _) in zip(verts, verts[1:]):
            if x1 <= x0:
                raise ValueError("vertex abscissae must be strictly increasing")
        slopes = self._slopes(verts)
        for s0, s1 in zip(slopes, slopes[1:]):
            if s1 <= s0:
                raise ValueError("slopes must strictly increase (convex, no redundant vertices)")
        object.__setattr__(self, "vertices", verts)

    @staticmethod
    def _slopes(verts):
        return [Fraction(y1 - y0, x1 - x0) for (x0, y0), (x1, y1) in zip(verts, verts[1:])]

    @property
    def slopes(self) -> list[Fraction]:
        return self._slopes(self.vertices)

    @property
    def x_range(self) -> tuple[int, int]:
        return self.vertices[0][0], self.vertices[-1][0]

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        lo, hi = self.x_range
        if not lo <= x <= hi:
            raise ValueError(f"x = {x} outside the polygon's range [{lo}, {hi}]")
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            if x0 <= x <= x1:
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        return self.vertices[0][1]

    def to_dict(self) -> dict:
        return {"vertices": [[x, f"{y.numerator}/{y.denominator}"] for x, y in self.vertices]}

    @classmethod
    def from_dict(cls, data) -> Polygon:
        return cls(tuple((int(x), Fraction(y)) for x, y in data["vertices"]))

    def __str__(self):
        return "[" + ", ".join(f"({x}, {y})" for x, y in self.vertices) + "]"


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(points: Iterable[tuple[int, object]]) -> Polygon:
    """Lower convex hull of ``(index, valuation)`` points; infinite valuations are skipped.

    A valuation of ``None`` or ``math.inf`` stands for a zero coefficient.
    """
    pts = list(points)
    if not pts:
        raise ValueError("newton_polygon needs at least one point")
    xs = [int(i) for i, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("point indices must be distinct")
    if any(x < 0 for x in xs):
        raise ValueError("point indices must be non-negative")
    finite = sorted((int(i), Fraction(v)) for i, v in pts if not _is_inf(v))
    if not finite:
        raise ValueError("newton_polygon needs at least one finite valuation")
    if finite[0][0] != 0:
        raise ValueError("the point at index 0 must have finite valuation")
    hull: list[tuple[int, Fraction]] = []
    for p in finite:
        # pop while the last turn is clockwise or straight: keeps only strict vertices
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return Polygon(tuple(hull))


def hodge_polygon(hodge_numbers: Sequence[int]) -> Polygon:
    """Polygon with slope j over a run of length ``hodge_numbers[j]``.

    ``hodge_numbers`` lists ``h^{0,m}, h^{1,m-1}, ..., h^{m,0}``.
    """
    hs = [int(h) for h in hodge_numbers]
    if not hs or any(h < 0 for h in hs):
        raise ValueError("Hodge numbers must be non-negative integers")
    if not any(hs):
        raise ValueError("Hodge numbers must not all vanish")
    verts = [(0, Fraction(0))]
    x, y = 0, Fraction(0)
    for j, h in enumerate(hs):
        if h:
            x, y = x + h, y + j * h
            verts.append((x, y))
    return Polygon(tuple(verts))


def _check_range(p: Polygon, q: Polygon) -> None:
    if p.x_range != q.x_range:
        raise ValueError(f"polygons cover different ranges {p.x_range} and {q.x_range}")


def lies_above(p: Polygon, q: Polygon) -> bool:
    """``p(x) >= q(x)`` on the common range; checking all vertices of both suffices."""
    _check_range(p, q)
    xs = {x for x, _ in p.vertices} | {x for x, _ in q.vertices}
    return all(p(x) >= q(x) for x in xs)


def equals(p: Polygon, q: Polygon) -> bool:
    _check_range(p, q)
    return p.vertices == q.vertices
