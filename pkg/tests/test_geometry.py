# File: /tests/test_geometry.py
# Directory: /tests

"""Tests for exact polygon geometry."""

from fractions import Fraction

import pytest

from hierarchical_tilings.core.geometry import (
    Polygon,
    ThickenedRegion,
    check_independent,
    point,
    polygon_distance_sq,
    polygons_intersect,
    rectangle,
    segment_distance_sq,
    segment_region,
    tube,
)
from hierarchical_tilings.core.golden import TAU
from hierarchical_tilings.exceptions import GeometryError, ValidationError


class TestPolygons:
    """Test intersection and distance of convex polygons."""

    def test_touching_rectangles_intersect(self):
        assert polygons_intersect(rectangle(0, 0, 1, 1), rectangle(1, 0, 1, 1))
        assert not polygons_intersect(rectangle(0, 0, 1, 1), rectangle(Fraction(11, 10), 0, 1, 1))

    def test_segment_through_square(self):
        diagonal = Polygon((point(-1, -1), point(2, 2)))
        assert polygons_intersect(diagonal, rectangle(0, 0, 1, 1))
        skew = Polygon((point(-1, 2), point(0, TAU)))
        assert not polygons_intersect(skew, rectangle(0, 0, 1, 1))

    def test_points(self):
        assert polygons_intersect(Polygon((point(0, 0),)), Polygon((point(0, 0),)))
        assert not polygons_intersect(Polygon((point(0, 0),)), Polygon((point(0, 1),)))

    def test_distances(self):
        assert polygon_distance_sq(rectangle(0, 0, 1, 1), rectangle(3, 0, 1, 1)) == 4
        assert polygon_distance_sq(rectangle(0, 0, 1, 1), rectangle(2, 2, 1, 1)) == 2
        assert segment_distance_sq(point(1, 1), point(0, 0), point(2, 0)) == 1
        assert segment_distance_sq(point(3, 0), point(0, 0), point(0, 0)) == 9

    def test_needs_a_vertex(self):
        with pytest.raises(ValidationError):
            Polygon(())

    def test_dependence(self):
        check_independent(point(1, 0), point(0, 1))
        with pytest.raises(GeometryError):
            check_independent(point(1, TAU), point(2, 2 * TAU))


class TestRegions:
    """Test thickened regions."""

    def test_open_and_closed(self):
        square = rectangle(2, 0, 1, 1)
        assert not segment_region(point(0, 0), point(1, 0), 1).meets(square)
        assert segment_region(point(0, 0), point(1, 0), 1, closed=True).meets(square)

    def test_bounding_box(self):
        region = segment_region(point(0, 0), point(TAU, 0), Fraction(1, 2))
        assert region.bounding_box() == (Fraction(-1, 2), TAU + Fraction(1, 2), Fraction(-1, 2), Fraction(1, 2))

    def test_radius_positive(self):
        with pytest.raises(ValidationError):
            ThickenedRegion(rectangle(0, 0, 1, 1), 0)

    def test_tube(self):
        region = tube(point(0, 0), point(4, 0), point(0, 4), Fraction(1, 8))
        assert region.closed
        assert region.core.bounding_box() == (0, 4, Fraction(-1, 2), Fraction(1, 2))
        assert region.meets(rectangle(0, Fraction(3, 2), 1, 1))
        assert not region.meets(rectangle(0, 2, 1, 1))

    def test_translated(self):
        region = segment_region(point(0, 0), point(1, 0), 1).translated(point(0, 5))
        assert region.core.vertices == (point(0, 5), point(1, 5))
