"""Parsing, serialization, and point-set generation tests."""

import json
import math

import pytest

from circleproxy import (
    GenerationError,
    ParseError,
    ShapeInvalidError,
    parse_shape,
    point_in_shape,
    sample_boundary,
    sample_interior,
    shape_from_loops,
    shape_to_polygon_json,
)

from oracles import distance_to_boundary

HOLED_DOC = json.dumps(
    {
        "loops": [
            {"hole": False, "points": [[0, 0], [1, 0], [1, 1], [0, 1]]},
            {"hole": True, "points": [[0.25, 0.25], [0.75, 0.25], [0.75, 0.75], [0.25, 0.75]]},
        ]
    }
)


class TestParseSvg:
    def test_square_path(self):
        shape = parse_shape("M0,0 L1,0 L1,1 L0,1 Z", "svg-path")
        assert len(shape.loops) == 1
        assert len(shape.loops[0].vertices) == 4
        assert shape.area == pytest.approx(1.0)

    def test_relative_and_implicit_lineto(self):
        shape = parse_shape("m1,1 2,0 l0,2 -2,0 z", "svg-path")
        assert shape.area == pytest.approx(4.0)
        lo, hi = shape.bbox
        assert (lo.x, lo.y, hi.x, hi.y) == (1.0, 1.0, 3.0, 3.0)

    def test_full_document_with_hole_inference(self):
        doc = (
            '<svg xmlns="http://www.w3.org/2000/svg">'
            '<path d="M0,0 L4,0 L4,4 L0,4 Z M1,1 L3,1 L3,3 L1,3 Z"/></svg>'
        )
        shape = parse_shape(doc, "svg-path")
        holes = [lp for lp in shape.loops if lp.is_hole]
        assert len(holes) == 1
        assert shape.area == pytest.approx(12.0)

    def test_cubic_converges_under_refinement(self):
        d = "M0,0 C1.2,0.8 1.6,2.4 0,6 C-1.6,2.4 -1.2,0.8 0,0 Z"
        tol = 0.05
        prev_count = 0
        areas = []
        for _ in range(6):
            shape = parse_shape(d, "svg-path", flatten_tol=tol)
            count = len(shape.loops[0].vertices)
            assert count >= prev_count
            prev_count = count
            areas.append(shape.area)
            tol /= 2
        # Area differences shrink as the polyline refines.
        deltas = [abs(a - areas[-1]) for a in areas[:-1]]
        assert deltas[0] > deltas[-1]
        assert deltas[-1] < 1e-3 * areas[-1]

    def test_quadratic_segments(self):
        shape = parse_shape("M0,0 Q1,2 2,0 Z", "svg-path")
        assert shape.area > 0

    def test_transform_rejected(self):
        doc = '<svg><path transform="scale(2)" d="M0,0 L1,0 L1,1 Z"/></svg>'
        with pytest.raises(ParseError):
            parse_shape(doc, "svg-path")

    def test_other_drawables_rejected(self):
        doc = '<svg><rect x="0" y="0" width="1" height="1"/></svg>'
        with pytest.raises(ParseError):
            parse_shape(doc, "svg-path")

    def test_bad_character_reports_offset(self):
        with pytest.raises(ParseError) as err:
            parse_shape("M0,0 L1,0 #1,1 Z", "svg-path")
        assert err.value.offset == 10

    def test_zero_area_rejected(self):
        with pytest.raises(ShapeInvalidError):
            parse_shape("M0,0 L1,0 L2,0 Z", "svg-path")


class TestParsePolygonJson:
    def test_square_with_hole(self):
        shape = parse_shape(HOLED_DOC, "polygon-json")
        assert shape.area == pytest.approx(0.75)
        assert [lp.is_hole for lp in shape.loops] == [False, True]

    def test_malformed_json_offset(self):
        with pytest.raises(ParseError) as err:
            parse_shape('{"loops": [}', "polygon-json")
        assert err.value.offset is not None

    def test_missing_points_key(self):
        with pytest.raises(ParseError):
            parse_shape('{"loops": [{"hole": false}]}', "polygon-json")

    def test_bad_point_arity(self):
        with pytest.raises(ParseError):
            parse_shape('{"loops": [{"points": [[0, 0, 0], [1], [2, 2]]}]}', "polygon-json")

    def test_hole_outside_outer_rejected(self):
        doc = json.dumps(
            {
                "loops": [
                    {"hole": False, "points": [[0, 0], [1, 0], [1, 1], [0, 1]]},
                    {"hole": True, "points": [[5, 5], [6, 5], [6, 6], [5, 6]]},
                ]
            }
        )
        with pytest.raises(ShapeInvalidError):
            parse_shape(doc, "polygon-json")

    def test_round_trip_identical(self):
        shape = parse_shape(HOLED_DOC, "polygon-json")
        again = parse_shape(shape_to_polygon_json(shape), "polygon-json")
        assert again.loops == shape.loops
        assert again.area == shape.area

    def test_orientation_normalized(self):
        # Outer given CW, hole given CCW; both get flipped.
        doc = json.dumps(
            {
                "loops": [
                    {"hole": False, "points": [[0, 1], [1, 1], [1, 0], [0, 0]]},
                    {"hole": True, "points": [[0.2, 0.2], [0.8, 0.2], [0.8, 0.8], [0.2, 0.8]]},
                ]
            }
        )
        shape = parse_shape(doc, "polygon-json")
        from circleproxy import polygon_area

        assert polygon_area(shape.loops[0].vertices) > 0
        assert polygon_area(shape.loops[1].vertices) < 0


class TestSampleBoundary:
    def test_unit_square_equal_gaps(self, unit_square):
        pts = sample_boundary(unit_square, 8)
        assert len(pts) == 8
        # Consecutive arc-length gaps along the perimeter are all 0.5.
        def arc_pos(p):
            x, y = p.position
            if y == 0.0:
                return x
            if x == 1.0:
                return 1 + y
            if y == 1.0:
                return 3 - x
            return 4 - y

        positions = sorted(arc_pos(p) for p in pts)
        gaps = [b - a for a, b in zip(positions, positions[1:])]
        gaps.append(positions[0] + 4 - positions[-1])
        assert all(g == pytest.approx(0.5, abs=1e-12) for g in gaps)

    def test_apportionment_square_with_hole(self):
        shape = parse_shape(HOLED_DOC, "polygon-json")
        pts = sample_boundary(shape, 12)
        assert len(pts) == 12
        on_outer = sum(1 for p in pts if max(abs(p.position.x - 0.5), abs(p.position.y - 0.5)) > 0.3)
        on_hole = len(pts) - on_outer
        # Perimeters 4 and 2 -> 8 and 4 points, within the +-1 rounding.
        assert abs(on_outer - 8) <= 1
        assert abs(on_hole - 4) <= 1

    def test_triangle_three_points_on_distinct_edges(self, corpus):
        tri = corpus["triangle"]
        pts = sample_boundary(tri, 3)
        assert len(pts) == 3

    def test_rotation_invariance(self):
        verts = [(0, 0), (2, 0), (2, 1), (1, 2), (0, 1)]
        base = shape_from_loops([(verts, False)])
        rotated = shape_from_loops([(verts[2:] + verts[:2], False)])
        a = sorted((p.position.x, p.position.y) for p in sample_boundary(base, 17))
        b = sorted((p.position.x, p.position.y) for p in sample_boundary(rotated, 17))
        assert a == b

    def test_points_lie_on_polyline(self, corpus):
        for name, shape in corpus.items():
            for p in sample_boundary(shape, 40):
                assert distance_to_boundary(p.position.x, p.position.y, shape) < 1e-9, name

    def test_count_too_small(self, unit_square):
        with pytest.raises(ValueError):
            sample_boundary(unit_square, 2)


class TestSampleInterior:
    def test_count_and_containment(self, unit_square):
        pts = sample_interior(unit_square, 100)
        assert len(pts) == 100
        assert all(point_in_shape(p.position, unit_square) for p in pts)
        assert all(p.kind == "interior" for p in pts)

    def test_zero_count(self, unit_square):
        assert sample_interior(unit_square, 0) == []

    def test_hole_avoided(self):
        shape = parse_shape(HOLED_DOC, "polygon-json")
        for p in sample_interior(shape, 200):
            x, y = p.position
            assert not (0.25 < x < 0.75 and 0.25 < y < 0.75)

    def test_deterministic(self, corpus):
        a = sample_interior(corpus["lshape"], 64)
        b = sample_interior(corpus["lshape"], 64)
        assert a == b

    def test_pathological_sliver_raises(self):
        t = 1e-9
        sliver = shape_from_loops(
            [([(0, 0), (1, 0), (1, t), (t, t), (t, 1), (0, 1)], False)]
        )
        with pytest.raises(GenerationError):
            sample_interior(sliver, 10)


def test_boundary_samples_deterministic(corpus):
    a = sample_boundary(corpus["star"], 33)
    b = sample_boundary(corpus["star"], 33)
    assert a == b
