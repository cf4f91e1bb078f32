"""Parametrized incidence pairs and the oriented fixed-area matching predicate.

A non-vertical line together with one of its points is encoded by the triple
(a, b, kappa): point coordinates plus the line's slope. Two such pairs match
when their lines meet at a point o and the triangle (o, p1, p2) has signed
area exactly +A (counterclockwise) or -A (clockwise). The predicate is
evaluated in a division-free product form, so no denominator can vanish:

    (y - b - kappa*(x - a)) * (y - b - w*(x - a)) == 2*A*(w - kappa)

with (a, b, kappa) the first pair and (x, y, w) the second.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .geometry import (
    GeometryError,
    Line,
    Point,
    VerticalLine,
    intersect,
    line_through,
    signed_area2,
)


class PointNotOnLine(GeometryError):
    pass


class ParallelSlopes(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    pass


@dataclass(frozen=True, order=True)
class IncidencePairParam:
    """A (line, point-on-line) pair as the triple (a, b, kappa).

    Orders lexicographically by (a, b, kappa); the line and point fields are
    determined by the triple, so including them in comparisons is harmless.
    """

    a: Fraction
    b: Fraction
    kappa: Fraction
    line: Line
    point: Point

    def __post_init__(self) -> None:
        if self.line.is_vertical:
            raise VerticalLine("incidence pairs require a sloped line")
        if not self.line.contains(self.point):
            raise PointNotOnLine(f"{self.point} not on {self.line}")
        if self.line.slope() != self.kappa:
            raise GeometryError("kappa disagrees with the line's slope")
        if (self.point.x, self.point.y) != (self.a, self.b):
            raise GeometryError("(a, b) disagrees with the point")

    @classmethod
    def from_triple(
        cls, a: Fraction | int, b: Fraction | int, kappa: Fraction | int
    ) -> "IncidencePairParam":
        a, b, kappa = Fraction(a), Fraction(b), Fraction(kappa)
        line = _line_point_slope(Point(a, b), kappa)
        return cls(a, b, kappa, line, Point(a, b))


def _line_point_slope(p: Point, m: Fraction) -> Line:
    # m*x - y + (y0 - m*x0) = 0
    return Line(m, -1, p.y - m * p.x)


def to_param(line: Line, point: Point) -> IncidencePairParam:
    """Parametrize a (line, point) incidence pair; the line must be sloped."""
    if line.is_vertical:
        raise VerticalLine(f"{line} has no slope; shear the point set first")
    if not line.contains(point):
        raise PointNotOnLine(f"{point} not on {line}")
    return IncidencePairParam(point.x, point.y, line.slope(), line, point)


def matches_ccw(
    p1: IncidencePairParam, p2: IncidencePairParam, area: Fraction | int = 1
) -> bool:
    """True when p2's point lies counterclockwise of p1's around the lines'
    intersection and the triangle they span with it has area exactly `area`.

    Equal slopes never match (the lines share no single intersection point).
    """
    a, b, k = p1.a, p1.b, p1.kappa
    x, y, w = p2.a, p2.b, p2.kappa
    if k == w:
        return False
    return (y - b - k * (x - a)) * (y - b - w * (x - a)) == 2 * Fraction(area) * (w - k)


def matches_cw(
    p1: IncidencePairParam, p2: IncidencePairParam, area: Fraction | int = 1
) -> bool:
    """Clockwise variant; identical to matches_ccw with the pair swapped."""
    a, b, k = p1.a, p1.b, p1.kappa
    x, y, w = p2.a, p2.b, p2.kappa
    if k == w:
        return False
    return (y - b - k * (x - a)) * (y - b - w * (x - a)) == -2 * Fraction(area) * (w - k)


def third_vertex(p1: IncidencePairParam, p2: IncidencePairParam) -> Point:
    """Intersection of the line through p1 with p2's slope and vice versa.

    Equals the reflection of the lines' intersection o through the midpoint of
    p1 p2, so triangle (p1, p2, q) has the same area as (o, p1, p2).
    """
    if p1.kappa == p2.kappa:
        raise ParallelSlopes("equal slopes leave the third vertex undefined")
    l1 = _line_point_slope(p1.point, p2.kappa)
    l2 = _line_point_slope(p2.point, p1.kappa)
    return intersect(l1, l2)


def top_lines(triangle: Sequence[Point]) -> tuple[Line, Line, Line]:
    """For each vertex, the line through it parallel to the opposite side."""
    p, q, r = triangle
    if signed_area2(p, q, r) == 0:
        raise DegenerateTriangle(f"collinear: {p}, {q}, {r}")
    verts = (p, q, r)
    out = []
    for i in range(3):
        base = line_through(verts[(i + 1) % 3], verts[(i + 2) % 3])
        out.append(base.parallel_through(verts[i]))
    return tuple(out)  # type: ignore[return-value]


@dataclass(frozen=True)
class TriangleRichness:
    triangle: tuple[Point, Point, Point]
    rich_top_lines: int


def classify_triangle(
    points: Sequence[Point], k: int, triangle: Sequence[Point]
) -> TriangleRichness:
    """Count how many of the triangle's top lines hold at least k input points."""
    if k < 2:
        raise ValueError("k must be at least 2")
    pset = set(points)
    tri = tuple(triangle)
    if any(v not in pset for v in tri):
        raise ValueError("triangle vertices must belong to the point set")
    rich = 0
    for line in top_lines(tri):
        on_line = sum(1 for p in points if line.contains(p))
        if on_line >= k:
            rich += 1
    return TriangleRichness(tri, rich)


def count_matching_pairs(
    pairs: Sequence[IncidencePairParam],
    area: Fraction | int = 1,
    require_q_in_s: bool = False,
    points: Iterable[Point] | None = None,
) -> int:
    """Number of ordered counterclockwise matching pairs, by full O(N^2) scan.

    With require_q_in_s, only pairs whose completed third vertex lies in the
    given point set are counted.
    """
    area = Fraction(area)
    pset = None
    if require_q_in_s:
        if points is None:
            raise ValueError("require_q_in_s needs the point set")
        pset = set(points)
    triples = [(p.a, p.b, p.kappa) for p in pairs]
    two_a = 2 * area
    count = 0
    for i, (a, b, k) in enumerate(triples):
        for j, (x, y, w) in enumerate(triples):
            if i == j or k == w:
                continue
            dx = x - a
            dy = y - b
            if (dy - k * dx) * (dy - w * dx) != two_a * (w - k):
                continue
            if pset is not None and third_vertex(pairs[i], pairs[j]) not in pset:
                continue
            count += 1
    return count
