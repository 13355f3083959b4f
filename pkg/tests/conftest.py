"""Shared fixtures: a small corpus of desk-scale test shapes."""

from __future__ import annotations

import math

import pytest

from circleproxy import ElementShape, parse_shape, shape_from_loops


def regular_polygon(cx: float, cy: float, r: float, n: int, phase: float = 0.0):
    return [
        (cx + r * math.cos(phase + 2 * math.pi * k / n),
         cy + r * math.sin(phase + 2 * math.pi * k / n))
        for k in range(n)
    ]


def _arc(cx, cy, r, a0, a1, n):
    return [
        (cx + r * math.cos(a0 + (a1 - a0) * k / n),
         cy + r * math.sin(a0 + (a1 - a0) * k / n))
        for k in range(n + 1)
    ]


def _dumbbell() -> ElementShape:
    # Two unit disks at (0,0) and (4,0) bridged by a 0.2-wide bar.
    alpha = math.asin(0.1)
    pts = []
    pts += _arc(0.0, 0.0, 1.0, alpha, 2 * math.pi - alpha, 48)
    pts += _arc(4.0, 0.0, 1.0, math.pi + alpha, 3 * math.pi - alpha, 48)
    return shape_from_loops([(pts, False)])


def _note_glyph() -> ElementShape:
    # A quaver-like glyph: round head with a straight stem off its right.
    a0 = math.acos(0.55 / 0.8)
    pts = _arc(0.0, 0.0, 0.8, a0, 2 * math.pi, 40)
    pts += [(0.8, 3.0), (0.55, 3.0), (0.55, 0.8 * math.sin(a0))]
    return shape_from_loops([(pts, False)])


def _star(points: int = 5, r_outer: float = 2.0, r_inner: float = 0.8):
    pts = []
    for k in range(points):
        a = math.pi / 2 + 2 * math.pi * k / points
        pts.append((r_outer * math.cos(a), r_outer * math.sin(a)))
        a += math.pi / points
        pts.append((r_inner * math.cos(a), r_inner * math.sin(a)))
    return pts


def build_corpus() -> dict[str, ElementShape]:
    shapes: dict[str, ElementShape] = {}
    shapes["disk"] = shape_from_loops([(regular_polygon(0, 0, 1.0, 64), False)])
    shapes["square"] = shape_from_loops([([(0, 0), (1, 0), (1, 1), (0, 1)], False)])
    shapes["rect4x1"] = shape_from_loops([([(0, 0), (4, 0), (4, 1), (0, 1)], False)])
    shapes["triangle"] = shape_from_loops([([(0, 0), (3, 0), (1.5, 2)], False)])
    shapes["lshape"] = shape_from_loops(
        [([(0, 0), (3, 0), (3, 1), (1, 1), (1, 3), (0, 3)], False)]
    )
    shapes["ushape"] = shape_from_loops(
        [([(0, 0), (3, 0), (3, 3), (2, 3), (2, 1), (1, 1), (1, 3), (0, 3)], False)]
    )
    shapes["cross"] = shape_from_loops(
        [([(1, 0), (2, 0), (2, 1), (3, 1), (3, 2), (2, 2), (2, 3), (1, 3), (1, 2),
           (0, 2), (0, 1), (1, 1)], False)]
    )
    shapes["tshape"] = shape_from_loops(
        [([(1.25, 0), (1.75, 0), (1.75, 2), (3, 2), (3, 3), (0, 3), (0, 2),
           (1.25, 2)], False)]
    )
    shapes["sshape"] = shape_from_loops(
        [([(0, 0), (3, 0), (3, 3), (1, 3), (1, 4), (3, 4), (3, 5), (0, 5), (0, 2),
           (2, 2), (2, 1), (0, 1)], False)]
    )
    shapes["annulus"] = shape_from_loops(
        [
            ([(0, 0), (4, 0), (4, 4), (0, 4)], False),
            ([(1.5, 1.5), (2.5, 1.5), (2.5, 2.5), (1.5, 2.5)], True),
        ]
    )
    shapes["dumbbell"] = _dumbbell()
    shapes["leaf"] = parse_shape(
        "M0,0 C1.2,0.8 1.6,2.4 0,6 C-1.6,2.4 -1.2,0.8 0,0 Z", "svg-path"
    )
    shapes["note"] = _note_glyph()
    shapes["star"] = shape_from_loops([(_star(), False)])
    return shapes


@pytest.fixture(scope="session")
def corpus() -> dict[str, ElementShape]:
    return build_corpus()


@pytest.fixture(scope="session")
def unit_square(corpus) -> ElementShape:
    return corpus["square"]
