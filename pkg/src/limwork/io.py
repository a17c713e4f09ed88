"""Point files in, edge records out.

A point file has one site per line as two tokens ``x y``; each token is a
decimal (``1.25``, ``-3``) or a rational ``p/q``.  ``#`` starts a comment and
blank lines are skipped.

Edge records are printed with exact rationals:

    V i j A B     Voronoi edge; A and B are ``x y`` or ``*dx dy`` for an
                  unbounded end escaping along (dx, dy)
    D i j         Delaunay, EMST or hull edge
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Iterable, TextIO

from .edges import DelaunayEdge, HullEdge, VoronoiEdge
from .exact import PointSet


class ParseError(ValueError):
    """Malformed point file; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


def parse_number(token: str) -> Fraction:
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad number {token!r}") from exc
    return value


def parse_points(lines: Iterable[str]) -> list[tuple[Fraction, Fraction]]:
    points = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(lineno, f"expected 2 coordinates, got {len(tokens)}")
        try:
            points.append((parse_number(tokens[0]), parse_number(tokens[1])))
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
    return points


def read_points(path) -> PointSet:
    with open(path, encoding="utf-8") as fh:
        return PointSet(parse_points(fh))


def format_number(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_points(points) -> str:
    return "".join(f"{format_number(x)} {format_number(y)}\n" for x, y in points)


def write_points(path, points, header: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        if header:
            for line in header.splitlines():
                fh.write(f"# {line}\n")
        fh.write(format_points(points))


def _end(point, direction) -> str:
    if point is not None:
        return f"{format_number(point[0])} {format_number(point[1])}"
    return f"*{direction[0]} {direction[1]}"


def format_edge(edge) -> str:
    if isinstance(edge, VoronoiEdge):
        return f"V {edge.i} {edge.j} {_end(edge.a, edge.a_dir)} {_end(edge.b, edge.b_dir)}"
    if isinstance(edge, (DelaunayEdge, HullEdge)):
        return f"D {edge.i} {edge.j}"
    raise TypeError(f"not an edge record: {edge!r}")


def parse_edge(line: str):
    """Inverse of :func:`format_edge` for Voronoi and undirected edges."""
    tokens = line.split()
    if not tokens:
        raise ValueError("empty edge record")
    if tokens[0] == "D" and len(tokens) == 3:
        return DelaunayEdge(int(tokens[1]), int(tokens[2]))
    if tokens[0] == "V" and len(tokens) == 7:
        i, j = int(tokens[1]), int(tokens[2])

        def end(x, y):
            if x.startswith("*"):
                return None, (int(x[1:]), int(y))
            return (Fraction(x), Fraction(y)), None

        a, a_dir = end(tokens[3], tokens[4])
        b, b_dir = end(tokens[5], tokens[6])
        return VoronoiEdge(i, j, a, b, a_dir, b_dir)
    raise ValueError(f"bad edge record {line!r}")


class EdgeWriter:
    """Stream sink that prints one record per line."""

    def __init__(self, fh: TextIO):
        self._fh = fh

    def __call__(self, edge) -> None:
        self._fh.write(format_edge(edge))
        self._fh.write("\n")


def write_edges(path, edges) -> None:
    Path(path).write_text("".join(format_edge(e) + "\n" for e in edges), encoding="utf-8")
