# File: /hierarchical_tilings/core/geometry.py
# Directory: /hierarchical_tilings/core

"""
Exact plane geometry over Q[tau]: convex polygons, squared distances and
thickened regions. Nothing here takes a square root; distance tests compare
squares.
"""

from dataclasses import dataclass
from typing import List, Tuple

from ..exceptions import GeometryError, ValidationError
from .golden import ZERO, GoldenLike, GoldenNumber, golden

Point = Tuple[GoldenNumber, GoldenNumber]


def point(x: GoldenLike, y: GoldenLike) -> Point:
    return golden(x), golden(y)


def add(p: Point, q: Point) -> Point:
    return p[0] + q[0], p[1] + q[1]


def sub(p: Point, q: Point) -> Point:
    return p[0] - q[0], p[1] - q[1]


def scale(p: Point, factor: GoldenLike) -> Point:
    factor = golden(factor)
    return p[0] * factor, p[1] * factor


def dot(p: Point, q: Point) -> GoldenNumber:
    return p[0] * q[0] + p[1] * q[1]


def cross(p: Point, q: Point) -> GoldenNumber:
    return p[0] * q[1] - p[1] * q[0]


def check_independent(s: Point, t: Point) -> None:
    if not cross(s, t):
        raise GeometryError(f"translations {s} and {t} are linearly dependent")


def segment_distance_sq(p: Point, a: Point, b: Point) -> GoldenNumber:
    """Squared distance from p to the closed segment [a, b]."""
    ab = sub(b, a)
    length_sq = dot(ab, ab)
    if not length_sq:
        d = sub(p, a)
        return dot(d, d)
    u = dot(sub(p, a), ab) / length_sq
    if u < 0:
        u = ZERO
    elif u > 1:
        u = GoldenNumber(1)
    d = sub(p, add(a, scale(ab, u)))
    return dot(d, d)


@dataclass(frozen=True)
class Polygon:
    """A convex polygon given by its vertices in order; one or two vertices are allowed."""
    vertices: Tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(point(*v) for v in self.vertices))
        if not self.vertices:
            raise ValidationError("a polygon needs at least one vertex")

    def edges(self) -> List[Tuple[Point, Point]]:
        v = self.vertices
        if len(v) == 1:
            return [(v[0], v[0])]
        if len(v) == 2:
            return [(v[0], v[1])]
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def bounding_box(self) -> Tuple[GoldenNumber, GoldenNumber, GoldenNumber, GoldenNumber]:
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return min(xs), max(xs), min(ys), max(ys)

    def axes(self) -> List[Point]:
        """Edge normals, plus the segment direction for degenerate polygons."""
        out = []
        for a, b in self.edges():
            d = sub(b, a)
            if d[0] or d[1]:
                out.append((-d[1], d[0]))
                if len(self.vertices) == 2:
                    out.append(d)
        return out


def rectangle(x: GoldenLike, y: GoldenLike, w: GoldenLike, h: GoldenLike) -> Polygon:
    x, y, w, h = golden(x), golden(y), golden(w), golden(h)
    return Polygon(((x, y), (x + w, y), (x + w, y + h), (x, y + h)))


def parallelogram(origin: Point, u: Point, v: Point) -> Polygon:
    """{origin + a u + b v : 0 <= a, b <= 1}."""
    return Polygon((origin, add(origin, u), add(add(origin, u), v), add(origin, v)))


def _projection(polygon: Polygon, axis: Point) -> Tuple[GoldenNumber, GoldenNumber]:
    values = [dot(v, axis) for v in polygon.vertices]
    return min(values), max(values)


def polygons_intersect(p: Polygon, q: Polygon) -> bool:
    """Closed convex polygons meet iff no edge normal separates them."""
    for axis in p.axes() + q.axes():
        p_lo, p_hi = _projection(p, axis)
        q_lo, q_hi = _projection(q, axis)
        if p_hi < q_lo or q_hi < p_lo:
            return False
    if len(p.vertices) == 1 and len(q.vertices) == 1:
        return p.vertices[0] == q.vertices[0]
    return True


def polygon_distance_sq(p: Polygon, q: Polygon) -> GoldenNumber:
    """Squared distance between two closed convex polygons."""
    if polygons_intersect(p, q):
        return ZERO
    candidates = [
        segment_distance_sq(v, a, b)
        for v in p.vertices for a, b in q.edges()
    ] + [
        segment_distance_sq(v, a, b)
        for v in q.vertices for a, b in p.edges()
    ]
    best = candidates[0]
    for value in candidates[1:]:
        if value < best:
            best = value
    return best


def point_rect_distance_sq(p: Point, x: GoldenNumber, y: GoldenNumber,
                           w: GoldenNumber, h: GoldenNumber) -> GoldenNumber:
    """Squared distance from a point to an axis-parallel rectangle."""
    dx = golden_clamp(p[0], x, x + w) - p[0]
    dy = golden_clamp(p[1], y, y + h) - p[1]
    return dx * dx + dy * dy


def golden_clamp(value: GoldenNumber, lo: GoldenNumber, hi: GoldenNumber) -> GoldenNumber:
    if value < lo:
        return lo
    if value > hi:
        return hi
    return value


@dataclass(frozen=True)
class ThickenedRegion:
    """Points within r of a convex core; open unless closed is set."""
    core: Polygon
    radius: GoldenNumber
    closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "radius", golden(self.radius))
        if self.radius <= 0:
            raise ValidationError("thickening radius must be positive")

    def bounding_box(self) -> Tuple[GoldenNumber, GoldenNumber, GoldenNumber, GoldenNumber]:
        x0, x1, y0, y1 = self.core.bounding_box()
        r = self.radius
        return x0 - r, x1 + r, y0 - r, y1 + r

    def meets(self, polygon: Polygon) -> bool:
        d = polygon_distance_sq(self.core, polygon)
        r_sq = self.radius * self.radius
        return d <= r_sq if self.closed else d < r_sq

    def translated(self, shift: Point) -> "ThickenedRegion":
        core = Polygon(tuple(add(v, shift) for v in self.core.vertices))
        return ThickenedRegion(core, self.radius, self.closed)


def segment_region(a: Point, b: Point, radius: GoldenLike, closed: bool = False) -> ThickenedRegion:
    """P^r for the segment [a, b]."""
    return ThickenedRegion(Polygon((a, b)), golden(radius), closed)


def tube(origin: Point, along: Point, across: Point, margin: GoldenLike,
         radius: GoldenLike = 1) -> ThickenedRegion:
    """
    {origin + a*along + b*across : 0 <= a <= 1, |b| <= margin}, thickened by a
    closed radius.
    """
    m = golden(margin)
    corner = sub(origin, scale(across, m))
    return ThickenedRegion(parallelogram(corner, along, scale(across, 2 * m)), golden(radius), closed=True)
