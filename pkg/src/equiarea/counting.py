"""Fixed-area triangle counting, richness tallies, generators, and experiments.

Two independent counters back every experiment: a cubic brute-force oracle
over all point triples, and a quadratic pair-and-pencil counter that looks the
third vertex up on the two parallel lines where it must lie. They must agree
exactly on every input, and both are invariant under shears.
"""

from __future__ import annotations

import math
import random
import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .geometry import (
    DuplicatePoints,
    GeometryError,
    InvariantViolation,
    Point,
    find_shear,
    shear,
    signed_area2,
)
from .incidence import incidence_stats
from .matching import count_matching_pairs, top_lines
from . import incidence as _incidence


class ZeroArea(GeometryError):
    """Fixed-area counting needs a positive area; collinear triples are not triangles."""


class Unsatisfiable(GeometryError):
    """The requested random configuration cannot exist."""


def _check_area(area: Fraction | int) -> Fraction:
    area = Fraction(area)
    if area <= 0:
        raise ZeroArea("area must be a positive rational")
    return area


def _check_distinct(points: Sequence[Point]) -> None:
    if len(set(points)) != len(points):
        raise DuplicatePoints("point set has repeats")


def _coords(points: Sequence[Point]) -> list[tuple]:
    """Plain coordinate tuples; collapses to machine-friendly ints when exact."""
    out = []
    for p in points:
        x = int(p.x) if p.x.denominator == 1 else p.x
        y = int(p.y) if p.y.denominator == 1 else p.y
        out.append((x, y))
    return out


def count_brute(points: Sequence[Point], area: Fraction | int) -> int:
    """Reference oracle: test all triples for |signed area| equal to the target."""
    area = _check_area(area)
    _check_distinct(points)
    target = 2 * area
    neg = -target
    pts = _coords(points)
    count = 0
    for (ax, ay), (bx, by), (cx, cy) in combinations(pts, 3):
        cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
        if cross == target or cross == neg:
            count += 1
    return count


def _primitive_direction(dx, dy) -> tuple[int, int]:
    """Primitive integer direction of a rational vector, sign-normalized."""
    if not isinstance(dx, int) or not isinstance(dy, int):
        dx, dy = Fraction(dx), Fraction(dy)
        den = math.lcm(dx.denominator, dy.denominator)
        dx, dy = int(dx * den), int(dy * den)
    g = math.gcd(dx, dy)
    p, q = dx // g, dy // g
    if p < 0 or (p == 0 and q < 0):
        p, q = -p, -q
    return p, q


def count_pairline(points: Sequence[Point], area: Fraction | int) -> int:
    """Pair-and-pencil counter, exactly equal to count_brute on every input.

    For each base pair the third vertex lies on one of the two lines parallel
    to the base at the matching area offset. Within a parallel pencil the line
    through a point is keyed by the linear functional p*y - q*x of the
    primitive direction (p, q), so each lookup is a hash probe that also
    catches lines holding just that one point. Integer inputs run entirely in
    integer arithmetic; a pair whose offset cannot be integral is skipped
    outright since every pencil key is an integer.
    """
    area = _check_area(area)
    _check_distinct(points)
    pts = _coords(points)
    twice = 2 * area
    by_direction: dict[tuple[int, int], list[tuple]] = {}
    if all(isinstance(x, int) and isinstance(y, int) for x, y in pts):
        t_num, t_den = twice.numerator, twice.denominator
        for (ax, ay), (bx, by) in combinations(pts, 2):
            dx, dy = bx - ax, by - ay
            g = math.gcd(dx, dy)
            p, q = dx // g, dy // g
            if p < 0 or (p == 0 and q < 0):
                p, q = -p, -q
            offset, rem = divmod(t_num, t_den * g)
            if rem:
                continue
            by_direction.setdefault((p, q), []).append((p * ay - q * ax, offset))
    else:
        for (ax, ay), (bx, by) in combinations(pts, 2):
            dx, dy = bx - ax, by - ay
            p, q = _primitive_direction(dx, dy)
            scale = Fraction(dx, p) if p != 0 else Fraction(dy, q)
            by_direction.setdefault((p, q), []).append((p * ay - q * ax, twice / scale))
    total = 0
    for (p, q), entries in by_direction.items():
        pencil = Counter(p * y - q * x for x, y in pts)
        for base_value, offset in entries:
            total += pencil[base_value + offset] + pencil[base_value - offset]
    assert total % 3 == 0, "each triangle must be found once per side"
    return total // 3


#: Exhaustive area search scans all C(n,3) triples; keep it a small-n utility.
MODE_AREA_SIZE_LIMIT = 300


def mode_area(points: Sequence[Point]) -> tuple[Fraction, int]:
    """The most repeated triangle area and its count, by full enumeration.

    The fixed-area experiments track one chosen area; this reports which area
    is actually best for a given set. Ties break toward the smaller area.
    """
    if len(points) > MODE_AREA_SIZE_LIMIT:
        raise ValueError(f"mode_area is capped at n = {MODE_AREA_SIZE_LIMIT}")
    _check_distinct(points)
    pts = _coords(points)
    tallies: Counter = Counter()
    for (ax, ay), (bx, by), (cx, cy) in combinations(pts, 3):
        cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
        if cross != 0:
            tallies[abs(cross)] += 1
    if not tallies:
        raise ZeroArea("the set spans no triangles")
    best = max(tallies.items(), key=lambda kv: (kv[1], -kv[0]))
    return Fraction(best[0]) / 2, best[1]


def fixed_area_triangles(
    points: Sequence[Point], area: Fraction | int
) -> list[tuple[Point, Point, Point]]:
    """All unordered triples spanning the given area (brute enumeration)."""
    area = _check_area(area)
    _check_distinct(points)
    target = 2 * area
    out = []
    for tri in combinations(points, 3):
        if abs(signed_area2(*tri)) == target:
            out.append(tri)
    return out


@dataclass(frozen=True)
class RichnessTally:
    """Fixed-area triangles split by how many of their top lines are k-rich."""

    T0: int
    T1: int
    T2: int
    T3: int

    @property
    def total(self) -> int:
        return self.T0 + self.T1 + self.T2 + self.T3


def tally_by_richness(
    points: Sequence[Point], k: int, area: Fraction | int = 1
) -> RichnessTally:
    """Classify every area-A triangle by its number of k-rich top lines.

    Also enforces the assignment bound behind the poor-triangle count: a base
    pair can own at most 2*(k-1) triangles whose top line over that base is
    poor, because each of the two candidate parallel lines then holds at most
    k-1 points.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    member_counts = _incidence._line_member_counts(points)
    buckets = [0, 0, 0, 0]
    poor_per_base: Counter = Counter()
    for tri in fixed_area_triangles(points, area):
        lines = top_lines(tri)
        rich = 0
        for vertex_index, line in enumerate(lines):
            # A line absent from the table holds at most one point.
            members = member_counts.get(line, 1)
            if members >= k:
                rich += 1
            else:
                base = tuple(sorted(v for j, v in enumerate(tri) if j != vertex_index))
                poor_per_base[base] += 1
        buckets[rich] += 1
    limit = 2 * (k - 1)
    for base, assigned in poor_per_base.items():
        if assigned > limit:
            raise InvariantViolation(
                f"base {base} was assigned {assigned} poor triangles (limit {limit})"
            )
    return RichnessTally(*buckets)


@dataclass(frozen=True)
class MatchingIdentityReport:
    M: int
    T2: int
    T3: int
    holds: bool
    tally: RichnessTally


def matching_identity_check(
    points: Sequence[Point], k: int, area: Fraction | int = 1
) -> MatchingIdentityReport:
    """Check M = 3*T3 + T2 on one point set.

    M counts ordered counterclockwise matching pairs whose completed third
    vertex lies in the set; every fixed-area triangle contributes one such
    pair per vertex pair whose two top lines are rich, which is three pairs
    when all three top lines are rich and one when exactly two are. The set is
    sheared first if any spanned line is vertical; both sides of the identity
    are shear-invariant.
    """
    area = _check_area(area)
    t = find_shear(points)
    sheared = shear(points, t)
    pairs = _incidence.incidence_pairs(sheared, k)
    m = count_matching_pairs(pairs, area, require_q_in_s=True, points=sheared)
    tally = tally_by_richness(sheared, k, area)
    return MatchingIdentityReport(
        M=m,
        T2=tally.T2,
        T3=tally.T3,
        holds=(m == 3 * tally.T3 + tally.T2),
        tally=tally,
    )


# ---------------------------------------------------------------------------
# Point-set generators


def gen_lattice_section(n: int) -> list[Point]:
    """First n points of a short-and-wide integer grid section.

    Rows = max(2, round(sqrt(log2 n))); such flat sections force many repeated
    triangle areas, which is what the scaling experiment tracks.
    """
    if n < 4:
        raise ValueError("lattice sections start at n = 4")
    rows = max(2, round(math.sqrt(math.log2(n))))
    cols = -(-n // rows)
    points = []
    for y in range(rows):
        for x in range(cols):
            points.append(Point(x, y))
            if len(points) == n:
                return points
    return points


def gen_random(n: int, coordinate_bound: int, seed: int) -> list[Point]:
    """n distinct integer points in the square [-bound, bound]^2, seeded."""
    if n < 0:
        raise ValueError("n must be non-negative")
    available = (2 * coordinate_bound + 1) ** 2
    if n > available:
        raise Unsatisfiable(f"cannot place {n} distinct points in {available} cells")
    rng = random.Random(seed)
    seen: set[Point] = set()
    out: list[Point] = []
    while len(out) < n:
        p = Point(
            rng.randint(-coordinate_bound, coordinate_bound),
            rng.randint(-coordinate_bound, coordinate_bound),
        )
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def gen_grid(rows: int, cols: int) -> list[Point]:
    if rows <= 0 or cols <= 0:
        raise ValueError("grid dimensions must be positive")
    return [Point(x, y) for y in range(rows) for x in range(cols)]


def gen_parallel_lines(lines: int, per_line: int, spacing: int) -> list[Point]:
    """Points on equally spaced horizontal lines."""
    if lines <= 0 or per_line <= 0 or spacing <= 0:
        raise ValueError("dimensions must be positive")
    return [Point(x, y * spacing) for y in range(lines) for x in range(per_line)]


# ---------------------------------------------------------------------------
# Scaling experiments

CSV_HEADER = "generator,n,k,area,count,m,N,M,T0,T1,T2,T3,seconds,seed"

#: Above this size the quadratic matching scan and cubic tally are skipped.
MATCHING_SIZE_LIMIT = 30


@dataclass(frozen=True)
class ExperimentRow:
    generator: str
    n: int
    k: int
    area: Fraction
    count: int
    m: int
    N: int
    M: int | None
    T0: int | None
    T1: int | None
    T2: int | None
    T3: int | None
    seconds: float
    seed: int

    def csv(self) -> str:
        def opt(v):
            return "" if v is None else str(v)

        return ",".join(
            [
                self.generator,
                str(self.n),
                str(self.k),
                str(self.area),
                str(self.count),
                str(self.m),
                str(self.N),
                opt(self.M),
                opt(self.T0),
                opt(self.T1),
                opt(self.T2),
                opt(self.T3),
                f"{self.seconds:.6f}",
                str(self.seed),
            ]
        )


def _generate(kind: str, n: int, seed: int) -> list[Point]:
    if kind == "lattice":
        return gen_lattice_section(n)
    if kind == "random":
        bound = max(4, 2 * math.isqrt(n) + 2)
        return gen_random(n, bound, seed)
    if kind == "grid":
        rows = max(1, math.isqrt(n))
        return gen_grid(rows, -(-n // rows))[:n]
    if kind == "parallel":
        return gen_parallel_lines(3, -(-n // 3), 1)[:n]
    raise ValueError(f"unknown generator kind: {kind}")


def default_area(kind: str) -> Fraction:
    """The documented default target area per generator.

    Integer-lattice sections get 1/2, the smallest area an integer triangle
    can have, so the repeated-area trend is measured where it is densest.
    """
    return Fraction(1, 2) if kind == "lattice" else Fraction(1)


def scaling_experiment(
    kind: str,
    sizes: Sequence[int],
    k: int = 2,
    area: Fraction | int | None = None,
    seed: int = 0,
    matching_limit: int = MATCHING_SIZE_LIMIT,
) -> list[ExperimentRow]:
    """One row per size; counts via the pair-and-pencil counter.

    The matching count and richness tally are only computed for sizes small
    enough for their quadratic and cubic scans. For lattice sections the
    normalized count/n^2 must be non-decreasing across the run.
    """
    if list(sizes) != sorted(sizes):
        raise ValueError("sizes must be ascending")
    area = default_area(kind) if area is None else _check_area(area)
    rows: list[ExperimentRow] = []
    for n in sizes:
        started = time.perf_counter()
        points = _generate(kind, n, seed + n)
        count = count_pairline(points, area)
        stats = incidence_stats(points, k)
        m_val = t = None
        if n <= matching_limit:
            report = matching_identity_check(points, k, area)
            if not report.holds:
                raise InvariantViolation(f"matching identity failed at n={n}")
            m_val, t = report.M, report.tally
        rows.append(
            ExperimentRow(
                generator=kind,
                n=n,
                k=k,
                area=area,
                count=count,
                m=stats.m,
                N=stats.N,
                M=m_val,
                T0=t.T0 if t else None,
                T1=t.T1 if t else None,
                T2=t.T2 if t else None,
                T3=t.T3 if t else None,
                seconds=time.perf_counter() - started,
                seed=seed,
            )
        )
    if kind == "lattice":
        for prev, cur in zip(rows, rows[1:]):
            if cur.count * prev.n**2 < prev.count * cur.n**2:
                raise InvariantViolation(
                    f"count/n^2 decreased from n={prev.n} to n={cur.n}"
                )
    return rows


def experiment_csv(rows: Iterable[ExperimentRow]) -> str:
    return "\n".join([CSV_HEADER, *(row.csv() for row in rows)]) + "\n"
