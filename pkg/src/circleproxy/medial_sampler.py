"""Medial-axis polar balls and the greedy spacing-ratio selection.

The medial axis is approximated by the interior Voronoi vertices of a
dense boundary sampling: every Delaunay triangle of the boundary points
whose circumcenter lies inside the shape yields one polar ball
(circumcenter, circumradius). An optional radius-scaled containment
prune thins near-duplicate balls, and a greedy decreasing-radius pass
keeps only balls whose pairwise center distances respect a user spacing
ratio.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import Delaunay, QhullError

from .errors import DegenerateShapeError
from .geom_core import Circle, Point2, points_in_shape
from .model import SampleSet
from .shape_io import ElementShape, sample_boundary

__all__ = [
    "PolarBall",
    "compute_polar_balls",
    "scale_axis_prune",
    "select_touching_polar_balls",
]

# Boundary-sampling artifacts create tiny circumcircles hugging the
# outline; balls below this fraction of the bbox diagonal are noise.
DEFAULT_NOISE_RADIUS_FRAC = 0.005


@dataclass(frozen=True)
class PolarBall:
    """A maximal-inscribed-circle estimate with its generating samples."""

    ball: Circle
    generator_indices: frozenset[int]


def _circumcircles(points: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Circumcenters/radii of the Delaunay triangles of a point set.

    Returns (centers (m,2), radii (m,), simplices (m,3)). Raises
    ``DegenerateShapeError`` when the points do not span 2D.
    """
    if len(points) < 3:
        raise ValueError("need at least 3 points for a Delaunay triangulation")
    try:
        tri = Delaunay(points)
    except QhullError as exc:
        raise DegenerateShapeError(f"boundary points are degenerate: {exc}") from exc
    simplices = tri.simplices
    a = points[simplices[:, 0]]
    b = points[simplices[:, 1]]
    c = points[simplices[:, 2]]
    ab = b - a
    ac = c - a
    d = 2.0 * (ab[:, 0] * ac[:, 1] - ab[:, 1] * ac[:, 0])
    ab2 = (ab * ab).sum(axis=1)
    ac2 = (ac * ac).sum(axis=1)
    with np.errstate(divide="ignore", invalid="ignore"):
        ux = (ac[:, 1] * ab2 - ab[:, 1] * ac2) / d
        uy = (ab[:, 0] * ac2 - ac[:, 0] * ab2) / d
    centers = a + np.column_stack([ux, uy])
    ok = np.isfinite(centers).all(axis=1)
    centers = centers[ok]
    simplices = simplices[ok]
    radii = np.hypot(centers[:, 0] - points[simplices[:, 0], 0],
                     centers[:, 1] - points[simplices[:, 0], 1])
    return centers, radii, simplices


def compute_polar_balls(
    shape: ElementShape,
    boundary_count: int = 400,
    noise_radius_frac: float = DEFAULT_NOISE_RADIUS_FRAC,
) -> list[PolarBall]:
    """Interior Voronoi polar balls of a dense boundary sampling.

    Only circumcenters inside the shape are kept; balls smaller than
    ``noise_radius_frac`` of the bbox diagonal are discarded. The result
    is sorted by decreasing radius (ties by center y then x) as the
    greedy selection expects.
    """
    if boundary_count < 16:
        raise ValueError("boundary_count must be at least 16")
    if not (0.0 <= noise_radius_frac < 1.0):
        raise ValueError("noise_radius_frac must be in [0, 1)")
    samples = sample_boundary(shape, boundary_count)
    pts = np.asarray([s.position for s in samples], dtype=float)
    centers, radii, simplices = _circumcircles(pts)
    keep = radii >= noise_radius_frac * shape.bbox_diagonal
    keep &= points_in_shape(centers, shape)
    balls = [
        PolarBall(
            Circle(Point2(float(cx), float(cy)), float(r)),
            frozenset(int(i) for i in gen),
        )
        for (cx, cy), r, gen in zip(centers[keep], radii[keep], simplices[keep])
    ]
    balls.sort(key=lambda pb: (-pb.ball.radius, pb.ball.center.y, pb.ball.center.x))
    return balls


def scale_axis_prune(balls: list[PolarBall], s: float) -> list[PolarBall]:
    """Drop balls contained in a retained larger ball after scaling by ``s``.

    Ball i is removed iff some retained ball j satisfies
    ``|c_i - c_j| + s*r_i <= s*r_j``. Input must be sorted by decreasing
    radius; the output stays sorted.
    """
    if s < 1.0:
        raise ValueError("scale factor must be >= 1")
    kept: list[PolarBall] = []
    for pb in balls:
        ci, ri = pb.ball.center, pb.ball.radius
        dominated = False
        for other in kept:
            cj, rj = other.ball.center, other.ball.radius
            if math.hypot(ci.x - cj.x, ci.y - cj.y) + s * ri <= s * rj:
                dominated = True
                break
        if not dominated:
            kept.append(pb)
    return kept


def select_touching_polar_balls(balls: list[PolarBall], xi: float) -> SampleSet:
    """Greedy decreasing-radius selection under a spacing ratio.

    A candidate is rejected when its center is closer than
    ``xi * (r + r')`` to any already-selected ball, so larger, more
    representative balls win. ``xi = 0`` keeps every ball.
    """
    if xi < 0.0 or not math.isfinite(xi):
        raise ValueError("spacing ratio must be finite and >= 0")
    selected: list[Circle] = []
    for pb in balls:
        c, r = pb.ball.center, pb.ball.radius
        include = True
        for other in selected:
            if math.hypot(c.x - other.center.x, c.y - other.center.y) < xi * (
                r + other.radius
            ):
                include = False
                break
        if include:
            selected.append(pb.ball)
    return SampleSet(
        balls=tuple(selected),
        method="mat",
        parameters={"xi": xi, "candidates": len(balls)},
    )
