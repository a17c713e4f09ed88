"""Exact rational geometry: point sets, predicates, bisectors and intersections.

Coordinates are Fractions.  A :class:`PointSet` also keeps every site scaled
by the common denominator of all coordinates, so the scan loops run on plain
Python integers and never build a Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, NamedTuple, Sequence


class GeometryError(ValueError):
    pass


class DuplicateSites(GeometryError):
    pass


DuplicatePoints = DuplicateSites


class CollinearBase(GeometryError):
    pass


class GeneralPositionViolation(GeometryError):
    """Raised with the offending ``kind`` and the site indices involved."""

    def __init__(self, kind: str, indices: tuple, message: str | None = None):
        self.kind = kind
        self.indices = tuple(indices)
        super().__init__(message or f"{kind} sites {self.indices}")


class Site(NamedTuple):
    x: Fraction
    y: Fraction


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float) and value != value:
        raise ValueError("NaN coordinate")
    return Fraction(value)


class PointSet(Sequence):
    """Read-only indexed sequence of planar sites.

    ``xs``/``ys`` are the coordinates multiplied by ``scale`` (the lcm of all
    denominators), as integers.
    """

    __slots__ = ("_sites", "xs", "ys", "scale", "_fast")

    def __init__(self, points: Iterable[Sequence]):
        sites = []
        for pt in points:
            if len(pt) != 2:
                raise ValueError(f"expected planar points, got {pt!r}")
            sites.append(Site(to_fraction(pt[0]), to_fraction(pt[1])))
        scale = 1
        for s in sites:
            scale = lcm(scale, s.x.denominator, s.y.denominator)
        self._sites = tuple(sites)
        self.scale = scale
        self.xs = tuple(int(s.x * scale) for s in sites)
        self.ys = tuple(int(s.y * scale) for s in sites)
        self._fast = None

    def __len__(self):
        return len(self._sites)

    def __getitem__(self, i):
        return self._sites[i]

    @property
    def n(self) -> int:
        return len(self._sites)

    def __repr__(self):
        return f"PointSet(n={len(self)})"

    def duplicate_pair(self) -> tuple[int, int] | None:
        seen: dict[tuple[int, int], int] = {}
        for i, key in enumerate(zip(self.xs, self.ys)):
            if key in seen:
                return seen[key], i
            seen[key] = i
        return None

    def require_distinct(self) -> None:
        dup = self.duplicate_pair()
        if dup is not None:
            raise DuplicateSites(f"sites {dup[0]} and {dup[1]} coincide")

    def fast_arrays(self):
        """int64 coordinate arrays for the compiled scans, or None if they don't fit."""
        if self._fast is None:
            from . import _kernels

            self._fast = _kernels.arrays(self) if _kernels.fits(self) else False
        return self._fast or None

    def point(self, x: int, y: int, w: int = 1) -> tuple[Fraction, Fraction]:
        """Real coordinates of a homogeneous point given in the scaled frame."""
        d = w * self.scale
        return Fraction(x, d), Fraction(y, d)


def as_pointset(points) -> PointSet:
    return points if isinstance(points, PointSet) else PointSet(points)


class Orientation(IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


class CirclePosition(IntEnum):
    OUTSIDE = -1
    COCIRCULAR = 0
    INSIDE = 1


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def orientation(a, b, c) -> Orientation:
    det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return Orientation(_sign(det))


def incircle(a, b, c, d) -> CirclePosition:
    """Position of ``d`` relative to the circle through ``a``, ``b``, ``c``."""
    orient = orientation(a, b, c)
    if orient == Orientation.COLLINEAR:
        raise CollinearBase("circle base points are collinear")
    adx, ady = a[0] - d[0], a[1] - d[1]
    bdx, bdy = b[0] - d[0], b[1] - d[1]
    cdx, cdy = c[0] - d[0], c[1] - d[1]
    det = (
        (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
        - (bdx * bdx + bdy * bdy) * (adx * cdy - cdx * ady)
        + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady)
    )
    return CirclePosition(_sign(det) * int(orient))


@dataclass(frozen=True)
class Bisector:
    """Perpendicular bisector of sites ``i`` and ``j``: ``a*x + b*y == c``."""

    i: int
    j: int
    a: Fraction
    b: Fraction
    c: Fraction

    def contains(self, pt) -> bool:
        return self.a * pt[0] + self.b * pt[1] == self.c

    @property
    def direction(self) -> tuple[Fraction, Fraction]:
        return -self.b, self.a


def bisector(pointset: PointSet, i: int, j: int) -> Bisector:
    if i == j:
        raise DuplicateSites("a bisector needs two distinct sites")
    p, q = pointset[i], pointset[j]
    if p == q:
        raise DuplicateSites(f"sites {i} and {j} coincide")
    a = 2 * (q.x - p.x)
    b = 2 * (q.y - p.y)
    c = q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y
    return Bisector(i, j, a, b, c)


@dataclass(frozen=True)
class Ray:
    origin: tuple[Fraction, Fraction]
    direction: tuple[Fraction, Fraction]

    def __post_init__(self):
        if self.direction[0] == 0 and self.direction[1] == 0:
            raise ValueError("ray direction must be nonzero")

    def at(self, t) -> tuple[Fraction, Fraction]:
        return (
            self.origin[0] + t * self.direction[0],
            self.origin[1] + t * self.direction[1],
        )


def ray_through(pointset: PointSet, i: int, target) -> Ray:
    o = pointset[i]
    return Ray((o.x, o.y), (to_fraction(target[0]) - o.x, to_fraction(target[1]) - o.y))


def ray_line_intersection(ray: Ray, line: Bisector):
    """First point where ``ray`` meets ``line`` as ``(point, t)``, or None."""
    denom = line.a * ray.direction[0] + line.b * ray.direction[1]
    if denom == 0:
        return None
    t = (line.c - line.a * ray.origin[0] - line.b * ray.origin[1]) / denom
    if t < 0:
        return None
    return ray.at(t), t


def line_line_intersection(l1: Bisector, l2: Bisector):
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None
    x = (l1.c * l2.b - l2.c * l1.b) / det
    y = (l1.a * l2.c - l2.a * l1.c) / det
    return x, y


def squared_distance(a, b):
    dx = a[0] - b[0]
    dy = a[1] - b[1]
    return dx * dx + dy * dy


# -- general position -------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str  # "duplicate", "collinear", "cocircular" or "equal-length"
    indices: tuple

    def to_error(self) -> GeneralPositionViolation:
        return GeneralPositionViolation(self.kind, self.indices)


def _primitive(dx: int, dy: int) -> tuple[int, int]:
    g = gcd(dx, dy)
    dx //= g
    dy //= g
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    return dx, dy


def find_collinear(pointset: PointSet) -> tuple[int, int, int] | None:
    xs, ys = pointset.xs, pointset.ys
    n = len(xs)
    for i in range(n):
        seen: dict[tuple[int, int], int] = {}
        xi, yi = xs[i], ys[i]
        for j in range(i + 1, n):
            key = _primitive(xs[j] - xi, ys[j] - yi)
            if key in seen:
                return i, seen[key], j
            seen[key] = j
    return None


def find_cocircular(pointset: PointSet) -> tuple[int, int, int, int] | None:
    """Four sites on one circle.  Assumes no three sites are collinear.

    For each pair (i, j) the center of the circle through i, j and k sits on
    the bisector of i and j at parameter ``c/a``; two equal parameters mean a
    shared circle.
    """
    xs, ys = pointset.xs, pointset.ys
    n = len(xs)
    for i in range(n):
        xi, yi = xs[i], ys[i]
        for j in range(i + 1, n):
            qx, qy = xs[j] - xi, ys[j] - yi
            wx, wy = -qy, qx
            seen: dict[tuple[int, int], int] = {}
            for k in range(j + 1, n):
                kx, ky = xs[k] - xi, ys[k] - yi
                a = kx * wx + ky * wy
                if a == 0:
                    continue
                c = kx * kx + ky * ky - kx * qx - ky * qy
                g = gcd(a, c)
                if a < 0:
                    g = -g
                key = (c // g, a // g)
                if key in seen:
                    return i, j, seen[key], k
                seen[key] = k
    return None


def find_equal_lengths(pointset: PointSet):
    xs, ys = pointset.xs, pointset.ys
    n = len(xs)
    seen: dict[int, tuple[int, int]] = {}
    for i in range(n):
        for j in range(i + 1, n):
            dx, dy = xs[j] - xs[i], ys[j] - ys[i]
            d2 = dx * dx + dy * dy
            if d2 in seen:
                return seen[d2], (i, j)
            seen[d2] = (i, j)
    return None


def check_general_position(
    pointset, *, distinct_lengths: bool = False, cocircular: bool = True
) -> Violation | None:
    """Return the first general-position violation found, or None.

    Checks run in order: coincident sites, collinear triples, cocircular
    quadruples (O(n^3); skipped when ``cocircular`` is false), and, when
    ``distinct_lengths`` is set, pairs of pairs with equal squared length.
    """
    ps = as_pointset(pointset)
    dup = ps.duplicate_pair()
    if dup is not None:
        return Violation("duplicate", dup)
    tri = find_collinear(ps)
    if tri is not None:
        return Violation("collinear", tri)
    if cocircular:
        quad = find_cocircular(ps)
        if quad is not None:
            return Violation("cocircular", quad)
    if distinct_lengths:
        pair = find_equal_lengths(ps)
        if pair is not None:
            return Violation("equal-length", pair)
    return None


def require_general_position(pointset, **kwargs) -> None:
    v = check_general_position(pointset, **kwargs)
    if v is not None:
        raise v.to_error()
