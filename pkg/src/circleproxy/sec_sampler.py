"""K-means clustering with smallest-enclosing-circle center updates.

Alternates two steps over a fixed point set: assign each point to its
nearest ball center, then replace each ball by the smallest enclosing
circle of its assigned points (instead of the centroid step of plain
k-means). Initialization picks uniformly separated points from the
(y, x)-sorted point set, which makes the whole procedure deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .geom_core import Circle, Point2, smallest_enclosing_circle
from .shape_io import PointSample

__all__ = ["ClusterState", "init_centers", "kmeans_sec"]

DEFAULT_MAX_ITER = 50
DEFAULT_MOVE_TOL = 1e-4


@dataclass(frozen=True)
class ClusterState:
    balls: tuple[Circle, ...]
    assignment: tuple[int, ...]
    iteration: int
    converged: bool


def init_centers(points: Sequence[PointSample], b: int) -> list[Point2]:
    """Uniformly separated centers from the (y, x)-sorted point set."""
    if b < 1:
        raise ValueError("number of samples must be at least 1")
    if len(points) < b:
        raise ValueError(f"need at least {b} points, got {len(points)}")
    ordered = sorted(points, key=lambda s: (s.position.y, s.position.x))
    n = len(ordered)
    return [ordered[(i * n) // b].position for i in range(b)]


def _repair_empty_clusters(
    assignment: np.ndarray, dists: np.ndarray, b: int
) -> np.ndarray:
    """Move one point into each empty cluster before the SEC step.

    The point farthest from its current owning center is reassigned,
    never emptying a singleton cluster; ties break toward the lowest
    point index.
    """
    counts = np.bincount(assignment, minlength=b)
    for empty in np.flatnonzero(counts == 0):
        movable = counts[assignment] > 1
        if not movable.any():
            break
        own = dists[np.arange(len(assignment)), assignment]
        own = np.where(movable, own, -np.inf)
        donor = int(np.argmax(own))
        counts[assignment[donor]] -= 1
        assignment[donor] = empty
        counts[empty] += 1
    return assignment


def kmeans_sec(
    points: Sequence[PointSample],
    b: int,
    max_iter: int = DEFAULT_MAX_ITER,
    move_tol: float = DEFAULT_MOVE_TOL,
    seed: int = 0,
) -> ClusterState:
    """Cluster points into ``b`` smallest-enclosing-circle balls.

    Iterates until every center moves less than ``move_tol`` times the
    point-set bbox diagonal, or ``max_iter`` rounds. The ``converged``
    flag reports which happened; the combined loop carries no
    convergence guarantee, so callers should respect the flag.
    """
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    if move_tol <= 0.0:
        raise ValueError("move_tol must be positive")
    centers = init_centers(points, b)
    pts = np.asarray([s.position for s in points], dtype=float)
    span = pts.max(axis=0) - pts.min(axis=0)
    threshold = move_tol * math.hypot(span[0], span[1])

    balls = [Circle(c, 0.0) for c in centers]
    assignment = np.zeros(len(pts), dtype=int)
    converged = False
    iteration = 0
    while iteration < max_iter and not converged:
        iteration += 1
        ctr = np.asarray([bl.center for bl in balls], dtype=float)
        diff = pts[:, None, :] - ctr[None, :, :]
        dists = np.einsum("ijk,ijk->ij", diff, diff)
        assignment = dists.argmin(axis=1)
        assignment = _repair_empty_clusters(assignment, dists, b)
        new_balls: list[Circle] = []
        moved = 0.0
        for k in range(b):
            cluster = [points[i].position for i in np.flatnonzero(assignment == k)]
            if cluster:
                circ = smallest_enclosing_circle(cluster, seed=seed)
            else:
                circ = balls[k]
            moved = max(
                moved,
                math.hypot(
                    circ.center.x - balls[k].center.x,
                    circ.center.y - balls[k].center.y,
                ),
            )
            new_balls.append(circ)
        balls = new_balls
        # moved == 0 is a fixed point even when the bbox is degenerate.
        if moved < threshold or moved == 0.0:
            converged = True
    return ClusterState(
        balls=tuple(balls),
        assignment=tuple(int(a) for a in assignment),
        iteration=iteration,
        converged=converged,
    )
