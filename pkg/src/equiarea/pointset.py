"""Point set text files.

Format: one point per line as `x y`, each coordinate an integer or `num/den`;
`#` starts a comment line; blank lines are ignored.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

from .geometry import Point, parse_rational


class PointFileError(Exception):
    def __init__(self, source: str, lineno: int, message: str):
        super().__init__(f"{source}:{lineno}: {message}")
        self.source = source
        self.lineno = lineno


def parse_points(lines: Iterable[str], source: str = "<input>") -> list[Point]:
    points: list[Point] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise PointFileError(source, lineno, f"expected 'x y', got {raw.rstrip()!r}")
        try:
            x = parse_rational(tokens[0])
            y = parse_rational(tokens[1])
        except ValueError as exc:
            raise PointFileError(source, lineno, str(exc)) from exc
        points.append(Point(x, y))
    return points


def read_points(path: str | Path) -> list[Point]:
    path = Path(path)
    with path.open("r", encoding="utf-8") as fh:
        return parse_points(fh, source=str(path))


def write_points(path: str | Path, points: Sequence[Point]) -> None:
    path = Path(path)
    with path.open("w", encoding="utf-8") as fh:
        for p in points:
            fh.write(f"{p.x} {p.y}\n")
