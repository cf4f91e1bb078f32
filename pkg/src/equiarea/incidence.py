"""Spanned lines, k-rich lines, their incidence pairs, and summary statistics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .geometry import (
    DuplicatePoints,
    GeometryError,
    InvariantViolation,
    Line,
    Point,
    line_through,
)
from .matching import IncidencePairParam, to_param


class VerticalLinePresent(GeometryError):
    """A rich line is vertical, so it cannot be parametrized; shear first."""


@dataclass(frozen=True)
class SpannedLine:
    """A line through at least two input points, with its members sorted."""

    line: Line
    members: tuple[Point, ...]


def _check_distinct(points: Sequence[Point]) -> None:
    if len(set(points)) != len(points):
        raise DuplicatePoints("point set has repeats")


def spanned_lines(points: Sequence[Point]) -> list[SpannedLine]:
    """Every line through >= 2 points, found by keying all pairs on canonical form."""
    _check_distinct(points)
    table: dict[Line, set[Point]] = {}
    for p, q in combinations(points, 2):
        line = line_through(p, q)
        table.setdefault(line, set()).update((p, q))
    return [
        SpannedLine(line, tuple(sorted(members)))
        for line, members in sorted(table.items(), key=lambda kv: kv[0])
    ]


def rich_lines(points: Sequence[Point], k: int) -> list[SpannedLine]:
    """Spanned lines holding at least k points."""
    if k < 2:
        raise ValueError("k must be at least 2")
    return [sl for sl in spanned_lines(points) if len(sl.members) >= k]


def incidence_pairs(points: Sequence[Point], k: int) -> list[IncidencePairParam]:
    """One parametrized pair per (rich line, member point).

    Every rich line must be sloped; run the point set through a shear first if
    any spanned line is vertical.
    """
    rich = rich_lines(points, k)
    for sl in rich:
        if sl.line.is_vertical:
            raise VerticalLinePresent(f"{sl.line} is rich and vertical")
    return [to_param(sl.line, p) for sl in rich for p in sl.members]


@dataclass(frozen=True)
class IncidenceStats:
    n: int
    k: int
    m: int
    N: int
    ratio_m: Fraction
    ratio_N: Fraction


def _line_member_counts(points: Sequence[Point]) -> dict[Line, int]:
    """Member count per spanned line without materializing member sets.

    A line with m members appears in exactly m*(m-1)/2 point pairs, so the
    member count is recovered from the pair count per canonical line.
    """
    pair_counts: dict[Line, int] = {}
    for p, q in combinations(points, 2):
        line = line_through(p, q)
        pair_counts[line] = pair_counts.get(line, 0) + 1
    out = {}
    for line, pc in pair_counts.items():
        m = (1 + math.isqrt(1 + 8 * pc)) // 2
        assert m * (m - 1) // 2 == pc
        out[line] = m
    return out


def incidence_stats(points: Sequence[Point], k: int) -> IncidenceStats:
    """Rich-line count m, incidence count N, and their scaling ratios.

    Hard-asserts only the provable pair-packing bound m * C(k,2) <= C(n,2);
    the two ratios are reported for trend inspection, never asserted.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    _check_distinct(points)
    n = len(points)
    counts = _line_member_counts(points)
    m = sum(1 for c in counts.values() if c >= k)
    big_n = sum(c for c in counts.values() if c >= k)
    if m * math.comb(k, 2) > math.comb(n, 2):
        raise InvariantViolation(
            f"rich-line bound failed: m={m}, k={k}, n={n}"
        )
    if big_n < m * k:
        raise InvariantViolation(f"incidence count {big_n} below m*k = {m * k}")
    denom = n * n
    return IncidenceStats(
        n=n,
        k=k,
        m=m,
        N=big_n,
        ratio_m=Fraction(m * k**3, denom) if denom else Fraction(0),
        ratio_N=Fraction(big_n * k**2, denom) if denom else Fraction(0),
    )
