"""Exact rational plane geometry: points, canonical lines, area predicates, shears.

Every predicate in this package is an equality test over the rationals, so
nothing here ever touches floating point.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Rational = Fraction


class GeometryError(Exception):
    """Base class for geometric failure modes (bad inputs, degenerate cases)."""


class IdenticalPoints(GeometryError):
    """Two points that were required to be distinct coincide."""


class DuplicatePoints(GeometryError):
    """A point set that must consist of distinct points has repeats."""


class VerticalLine(GeometryError):
    """A slope was requested for a line with B = 0."""


class ParallelLines(GeometryError):
    """Two distinct parallel lines have no intersection point."""


class IdenticalLines(GeometryError):
    """Two lines with the same canonical form were passed where distinct ones are needed."""


class InvariantViolation(Exception):
    """A provable structural bound failed.

    This is deliberately not a GeometryError: it signals a counterexample to
    something the library asserts unconditionally, not a misused API.
    """


_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse 'n' or 'n/d' into an exact Fraction.

    Decimal notation is rejected on purpose: it would invite silent precision
    loss at the boundary of an exact kernel.
    """
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational 'n' or 'n/d': {text!r}")
    return Fraction(s)


@dataclass(frozen=True, order=True)
class Point:
    """Immutable exact point; orders lexicographically by (x, y)."""

    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __str__(self) -> str:
        return f"{self.x} {self.y}"


@dataclass(frozen=True, order=True)
class Line:
    """A*x + B*y + C = 0 in canonical form.

    Canonical means: integer coefficients, gcd(|A|,|B|,|C|) = 1, and the first
    nonzero of (A, B) positive. Equal lines therefore compare and hash equal,
    which lets a Line act as a dictionary key.
    """

    A: int
    B: int
    C: int

    def __post_init__(self) -> None:
        a, b, c = Fraction(self.A), Fraction(self.B), Fraction(self.C)
        if a == 0 and b == 0:
            raise GeometryError("line needs (A, B) != (0, 0)")
        den = math.lcm(a.denominator, b.denominator, c.denominator)
        ai, bi, ci = int(a * den), int(b * den), int(c * den)
        g = math.gcd(ai, bi, ci)
        ai, bi, ci = ai // g, bi // g, ci // g
        if ai < 0 or (ai == 0 and bi < 0):
            ai, bi, ci = -ai, -bi, -ci
        object.__setattr__(self, "A", ai)
        object.__setattr__(self, "B", bi)
        object.__setattr__(self, "C", ci)

    def evaluate(self, p: Point) -> Fraction:
        return self.A * p.x + self.B * p.y + self.C

    def contains(self, p: Point) -> bool:
        return self.evaluate(p) == 0

    @property
    def is_vertical(self) -> bool:
        return self.B == 0

    def slope(self) -> Fraction:
        if self.B == 0:
            raise VerticalLine(f"{self} has no slope")
        return Fraction(-self.A, self.B)

    def parallel_through(self, p: Point) -> "Line":
        """The line through p parallel to this one."""
        return Line(self.A, self.B, -(self.A * p.x + self.B * p.y))

    def __str__(self) -> str:
        return f"({self.A})x + ({self.B})y + ({self.C}) = 0"


def signed_area2(p: Point, q: Point, r: Point) -> Fraction:
    """Twice the signed area of triangle pqr: (q-p) x (r-p).

    Positive for a counterclockwise triple, zero exactly when collinear.
    """
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def line_through(p: Point, q: Point) -> Line:
    """Canonical line through two distinct points."""
    if p == q:
        raise IdenticalPoints(f"no unique line through {p} twice")
    a = p.y - q.y
    b = q.x - p.x
    c = -(a * p.x + b * p.y)
    return Line(a, b, c)


def slope(line: Line) -> Fraction:
    return line.slope()


def intersect(l1: Line, l2: Line) -> Point:
    """Unique intersection point of two non-parallel lines."""
    det = l1.A * l2.B - l2.A * l1.B
    if det == 0:
        if l1 == l2:
            raise IdenticalLines(f"{l1} given twice")
        raise ParallelLines(f"{l1} and {l2} are parallel")
    x = Fraction(l1.B * l2.C - l2.B * l1.C, det)
    y = Fraction(l2.A * l1.C - l1.A * l2.C, det)
    return Point(x, y)


def shear(points: Sequence[Point], t: Fraction) -> list[Point]:
    """Apply (x, y) -> (x + t*y, y) to every point.

    The map is unimodular, so every signed_area2 value (and hence every
    fixed-area count) is preserved exactly, as is collinearity.
    """
    t = Fraction(t)
    return [Point(p.x + t * p.y, p.y) for p in points]


def _has_vertical_spanned_line(points: Sequence[Point]) -> bool:
    # Two distinct points span a vertical line iff they share an x coordinate.
    seen: set[Fraction] = set()
    for p in points:
        if p.x in seen:
            return True
        seen.add(p.x)
    return False


def find_shear(points: Sequence[Point]) -> Fraction:
    """Smallest t in 0, 1, 1/2, 1/3, ... leaving no spanned line vertical.

    Only finitely many t values are bad (one per spanned direction), so the
    scan terminates. Requires distinct points; duplicates would make every t
    fail.
    """
    pts = list(points)
    if len(pts) < 2:
        raise GeometryError("need at least two points")
    if len(set(pts)) != len(pts):
        raise DuplicatePoints("point set has repeats")
    if not _has_vertical_spanned_line(pts):
        return Fraction(0)
    j = 1
    while True:
        t = Fraction(1, j)
        if not _has_vertical_spanned_line(shear(pts, t)):
            return t
        j += 1
