"""Output records.

A Voronoi edge is stored in the frame of its smaller site index ``i``: it lies
on the bisector of ``i`` and ``j`` and runs along ``w``, the direction of
``site[j] - site[i]`` rotated a quarter turn counterclockwise.  ``a`` is the
endpoint reached going along ``-w``, ``b`` the one along ``+w``.  A missing
endpoint is replaced by the primitive integer direction in which the edge
escapes to infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True, order=True)
class VoronoiEdge:
    i: int
    j: int
    a: Point | None
    b: Point | None
    a_dir: tuple[int, int] | None = None
    b_dir: tuple[int, int] | None = None

    @property
    def pair(self) -> tuple[int, int]:
        return self.i, self.j

    @property
    def bounded(self) -> bool:
        return self.a is not None and self.b is not None


@dataclass(frozen=True, order=True)
class DelaunayEdge:
    i: int
    j: int

    @classmethod
    def of(cls, p: int, q: int) -> "DelaunayEdge":
        return cls(p, q) if p < q else cls(q, p)


@dataclass(frozen=True)
class HullEdge:
    """Directed hull edge ``i -> j``; the hull interior is on its left."""

    i: int
    j: int


def _primitive_dir(dx: int, dy: int) -> tuple[int, int]:
    g = gcd(dx, dy)
    return dx // g, dy // g


def edge_from_interval(pointset, p: int, q: int, lo, hi) -> VoronoiEdge:
    """Build the canonical edge on the bisector of ``p`` and ``q``.

    ``lo`` and ``hi`` are ``(num, den)`` parameters (``den > 0``) along the
    bisector in ``p``'s frame, where the point at parameter ``u`` is
    ``(site[p] + site[q]) / 2 + u * rot90(site[q] - site[p])``.  ``None``
    means unbounded.
    """
    xs, ys = pointset.xs, pointset.ys
    px, py, qx, qy = xs[p], ys[p], xs[q], ys[q]
    wx, wy = py - qy, qx - px
    sx, sy = px + qx, py + qy

    def at(u):
        num, den = u
        return pointset.point(sx * den + 2 * num * wx, sy * den + 2 * num * wy, 2 * den)

    if p < q:
        a = at(lo) if lo is not None else None
        b = at(hi) if hi is not None else None
        cwx, cwy = wx, wy
        i, j = p, q
    else:
        # the frame of q runs the other way
        a = at(hi) if hi is not None else None
        b = at(lo) if lo is not None else None
        cwx, cwy = -wx, -wy
        i, j = q, p
    d = _primitive_dir(cwx, cwy)
    return VoronoiEdge(
        i,
        j,
        a,
        b,
        None if a is not None else (-d[0], -d[1]),
        None if b is not None else d,
    )
