"""Sample-count optimization via a four-measure cost.

For each candidate count the SEC clustering is scored on overlap,
exterior area, adjacency and asymmetry. Measures are band-normalized
(divided by their mean across the scan) so the weights compare them on
a common scale, and the count with the minimum weighted total wins.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import ConfigError
from .geom_core import (
    Circle,
    Triangle,
    circle_lens_area,
    circle_shape_intersection_area,
    points_in_shape,
    smallest_enclosing_circle,
    triangulate,
)
from .model import SampleSet
from .sec_sampler import DEFAULT_MAX_ITER, DEFAULT_MOVE_TOL, kmeans_sec
from .shape_io import ElementShape, sample_boundary, sample_interior

__all__ = [
    "Weights",
    "Measures",
    "CostBreakdown",
    "CountRange",
    "measure_overlap",
    "measure_exterior",
    "measure_adjacency",
    "measure_asymmetry",
    "band_normalize",
    "total_cost",
    "choose_count",
    "optimize_sample_count",
]

DEFAULT_ADJACENCY_EPS = 0.02
DEFAULT_ASYMMETRY_GRID = 64
DEFAULT_R_MIN_FRAC = 0.04


@dataclass(frozen=True)
class Weights:
    """Relative importance of the four measures.

    The adjacency weight defaults above the others: adjacency tends to
    have smaller values even after normalization, and stray adjacencies
    are the costliest defect for downstream deformation.
    """

    overlap: float = 1.0
    exterior: float = 1.0
    adjacency: float = 2.0
    asymmetry: float = 1.0

    def __post_init__(self):
        for name, v in self.as_dict().items():
            if not (math.isfinite(v) and v >= 0.0):
                raise ConfigError(f"weight {name!r} must be finite and >= 0, got {v}")

    def as_dict(self) -> dict[str, float]:
        return {
            "overlap": self.overlap,
            "exterior": self.exterior,
            "adjacency": self.adjacency,
            "asymmetry": self.asymmetry,
        }

    def scaled(self, factor: float) -> "Weights":
        return Weights(
            self.overlap * factor,
            self.exterior * factor,
            self.adjacency * factor,
            self.asymmetry * factor,
        )


class Measures(NamedTuple):
    overlap: float
    exterior: float
    adjacency: float
    asymmetry: float


@dataclass(frozen=True)
class CostBreakdown:
    """Raw and band-normalized measures for one candidate count."""

    n: int
    raw: Measures
    band_normalized: Measures
    total: float
    adjacency_count: int


@dataclass(frozen=True)
class CountRange:
    """Scan range for the sample count plus the smallest allowed radius."""

    n_min: int
    n_max: int
    r_min: float

    def __post_init__(self):
        if self.n_min < 1:
            raise ConfigError(f"n_min must be >= 1, got {self.n_min}")
        if self.n_min > self.n_max:
            raise ConfigError(
                f"empty count range: n_min={self.n_min} > n_max={self.n_max}"
            )
        if not (self.r_min > 0.0 and math.isfinite(self.r_min)):
            raise ConfigError(f"r_min must be positive, got {self.r_min}")

    @classmethod
    def auto(
        cls,
        shape: ElementShape,
        n_min: int = 1,
        n_max: int | None = None,
        r_min: float | None = None,
    ) -> "CountRange":
        """Fill unspecified fields from the shape.

        ``r_min`` defaults to 4% of the bbox diagonal; ``n_max`` to
        floor(area / (pi * r_min^2)), i.e. how many smallest samples fit
        in the shape by area. When the shape is smaller than one
        smallest sample (the tight-fit special case) ``n_max`` is pinned
        to ``n_min`` since no scan will run.
        """
        if r_min is None:
            r_min = DEFAULT_R_MIN_FRAC * shape.bbox_diagonal
        if n_max is None:
            n_max = int(math.floor(shape.area / (math.pi * r_min * r_min)))
            if shape.area < math.pi * r_min * r_min:
                n_max = n_min
            elif n_min > n_max:
                raise ConfigError(
                    f"auto-computed n_max={n_max} is below n_min={n_min}; "
                    "lower r_min or n_min"
                )
        return cls(n_min, n_max, r_min)


# ---------------------------------------------------------------------------
# The four measures
# ---------------------------------------------------------------------------


def measure_overlap(balls: Sequence[Circle]) -> float:
    """Total pairwise overlap area over total ball area, clamped to [0, 1].

    Each overlapping region is counted once per participating ball
    (ordered pairs), so dense overlaps can exceed the denominator
    before clamping.
    """
    if not balls:
        raise ValueError("measure_overlap needs at least one ball")
    total_area = sum(b.area for b in balls)
    if total_area <= 0.0:
        return 0.0
    overlap = 0.0
    for i in range(len(balls)):
        for j in range(i + 1, len(balls)):
            overlap += 2.0 * circle_lens_area(balls[i], balls[j])
    return min(1.0, overlap / total_area)


def measure_exterior(
    balls: Sequence[Circle],
    shape: ElementShape,
    tris: Sequence[Triangle] | None = None,
) -> float:
    """Fraction of total ball area falling outside the shape.

    Overlaps between balls are ignored: each ball contributes its own
    outside area. ``tris`` may carry a precomputed tessellation of the
    shape to amortize across calls.
    """
    if not balls:
        raise ValueError("measure_exterior needs at least one ball")
    if tris is None:
        tris = triangulate(shape)
    total_area = sum(b.area for b in balls)
    if total_area <= 0.0:
        return 0.0
    outside = 0.0
    for b in balls:
        inside = min(circle_shape_intersection_area(b, tris), b.area)
        outside += max(0.0, b.area - inside)
    return min(1.0, outside / total_area)


def adjacency_count(balls: Sequence[Circle], eps: float) -> int:
    """Number of adjacencies, counted from both sides (always even)."""
    count = 0
    for i in range(len(balls)):
        for j in range(i + 1, len(balls)):
            d = math.hypot(
                balls[i].center.x - balls[j].center.x,
                balls[i].center.y - balls[j].center.y,
            )
            if d <= (1.0 + eps) * (balls[i].radius + balls[j].radius):
                count += 2
    return count


def measure_adjacency(
    balls: Sequence[Circle], n: int, eps: float = DEFAULT_ADJACENCY_EPS
) -> tuple[float, int]:
    """Deviation of the adjacency count from the linear-chain ideal.

    The ideal is ``2 (n - 1)`` (every ball touching its neighbors in a
    chain); the practical upper bound is taken as ``3 (n - 1)`` rather
    than the theoretical ``n (n - 1)``, so the value is clamped to
    [0, 1]. Undefined for fewer than two balls.
    """
    if n < 2:
        raise ValueError("measure_adjacency is undefined for fewer than 2 balls")
    if len(balls) != n:
        raise ValueError("ball count does not match n")
    a = adjacency_count(balls, eps)
    a_min = 2 * (n - 1)
    a_max = 3 * (n - 1)
    return min(1.0, abs(a - a_min) / a_max), a


def measure_asymmetry(
    balls: Sequence[Circle],
    shape: ElementShape,
    grid: int = DEFAULT_ASYMMETRY_GRID,
) -> float:
    """Mean imbalance of shape coverage between opposite ball quadrants.

    Every ball's bounding square is overlaid with a grid x grid lattice
    of cell centers; quadrants are axis-aligned about the ball center,
    numbered CCW from +x. Opposite-quadrant coverage differences are
    averaged and divided by the per-quadrant lattice population, then
    averaged over balls. A ball fully inside or fully outside scores 0.
    """
    if grid < 8:
        raise ValueError("asymmetry grid must be at least 8")
    if not balls:
        raise ValueError("measure_asymmetry needs at least one ball")
    scores = []
    offsets = (np.arange(grid) + 0.5) / grid * 2.0 - 1.0
    dx, dy = np.meshgrid(offsets, offsets)
    dx = dx.ravel()
    dy = dy.ravel()
    in_ball_unit = dx * dx + dy * dy <= 1.0
    quads = [
        (dx > 0) & (dy > 0),
        (dx < 0) & (dy > 0),
        (dx < 0) & (dy < 0),
        (dx > 0) & (dy < 0),
    ]
    q_pop = int(np.count_nonzero(in_ball_unit & quads[0]))
    for b in balls:
        if b.radius <= 0.0 or q_pop == 0:
            scores.append(0.0)
            continue
        pts = np.column_stack(
            [b.center.x + b.radius * dx, b.center.y + b.radius * dy]
        )
        covered = in_ball_unit & points_in_shape(pts, shape)
        p = [int(np.count_nonzero(covered & q)) for q in quads]
        scores.append((0.5 * abs(p[0] - p[2]) + 0.5 * abs(p[1] - p[3])) / q_pop)
    return float(np.mean(scores))


# ---------------------------------------------------------------------------
# Cost assembly
# ---------------------------------------------------------------------------


def total_cost(b: CostBreakdown, w: Weights) -> float:
    """Weighted sum of the band-normalized measures.

    The adjacency term is dropped for exactly two samples, where it is
    mostly immaterial.
    """
    m = b.band_normalized
    c = w.overlap * m.overlap + w.exterior * m.exterior + w.asymmetry * m.asymmetry
    if b.n != 2:
        c += w.adjacency * m.adjacency
    return c


def band_normalize(
    series: Sequence[CostBreakdown], weights: Weights
) -> list[CostBreakdown]:
    """Divide each measure by its mean across the scan; recompute totals.

    A measure whose mean is zero stays zero. The normalized series of a
    nonzero measure has mean exactly 1.
    """
    if not series:
        raise ValueError("band_normalize needs a non-empty series")
    raws = np.asarray([row.raw for row in series], dtype=float)
    means = raws.mean(axis=0)
    with np.errstate(divide="ignore", invalid="ignore"):
        normalized = np.where(means > 0.0, raws / means, 0.0)
    out = []
    for row, norm in zip(series, normalized):
        b = CostBreakdown(
            n=row.n,
            raw=row.raw,
            band_normalized=Measures(*map(float, norm)),
            total=0.0,
            adjacency_count=row.adjacency_count,
        )
        out.append(
            CostBreakdown(
                n=b.n,
                raw=b.raw,
                band_normalized=b.band_normalized,
                total=total_cost(b, weights),
                adjacency_count=b.adjacency_count,
            )
        )
    return out


def choose_count(series: Sequence[CostBreakdown]) -> int:
    """Count with the minimum total; ties break toward the smaller count."""
    best = None
    for row in sorted(series, key=lambda r: r.n):
        if best is None or row.total < best.total:
            best = row
    return best.n


def optimize_sample_count(
    shape: ElementShape,
    count_range: CountRange,
    weights: Weights = Weights(),
    *,
    boundary_count: int = 400,
    interior_count: int = 256,
    interior_in_clustering: bool = True,
    max_iter: int = DEFAULT_MAX_ITER,
    move_tol: float = DEFAULT_MOVE_TOL,
    adjacency_eps: float = DEFAULT_ADJACENCY_EPS,
    asymmetry_grid: int = DEFAULT_ASYMMETRY_GRID,
    seed: int = 0,
    objective: str = "cost",
) -> tuple[SampleSet, list[CostBreakdown]]:
    """Scan candidate counts and return the best clustering.

    Shapes smaller than one minimum-radius sample short-circuit to a
    single tight-fitting ball (the SEC of the boundary points) with an
    empty breakdown table. Otherwise every count in the range is
    clustered and scored; ``objective="cost"`` picks the minimum
    band-normalized total, ``objective="area"`` the minimum total ball
    area. The scan range is silently capped at the number of clustering
    points.
    """
    if objective not in ("cost", "area"):
        raise ConfigError(f"unknown objective {objective!r}")
    if shape.area < math.pi * count_range.r_min * count_range.r_min:
        boundary = sample_boundary(shape, boundary_count)
        ball = smallest_enclosing_circle([s.position for s in boundary], seed=seed)
        sample_set = SampleSet(
            balls=(ball,),
            method="auto",
            parameters={
                "special_case": "tight-fit",
                "r_min": count_range.r_min,
                "boundary_count": boundary_count,
            },
        )
        return sample_set, []

    points = sample_boundary(shape, boundary_count)
    if interior_in_clustering and interior_count > 0:
        points = points + sample_interior(shape, interior_count)
    n_min = count_range.n_min
    n_max = min(count_range.n_max, len(points))
    if n_min > n_max:
        raise ConfigError(
            f"count range [{count_range.n_min}, {count_range.n_max}] is empty "
            f"after capping at {len(points)} clustering points"
        )
    tris = triangulate(shape)
    states = {}
    raw_rows: list[CostBreakdown] = []
    for n in range(n_min, n_max + 1):
        state = kmeans_sec(points, n, max_iter=max_iter, move_tol=move_tol, seed=seed)
        states[n] = state
        balls = state.balls
        m_o = measure_overlap(balls)
        m_e = measure_exterior(balls, shape, tris)
        if n >= 2:
            m_a, a_count = measure_adjacency(balls, n, adjacency_eps)
        else:
            m_a, a_count = 0.0, 0
        m_y = measure_asymmetry(balls, shape, asymmetry_grid)
        raw = Measures(m_o, m_e, m_a, m_y)
        raw_rows.append(
            CostBreakdown(
                n=n,
                raw=raw,
                band_normalized=raw,
                total=math.nan,
                adjacency_count=a_count,
            )
        )
    rows = band_normalize(raw_rows, weights)
    if objective == "area":
        areas = {n: sum(b.area for b in states[n].balls) for n in states}
        chosen = min(sorted(areas), key=lambda n: areas[n])
    else:
        chosen = choose_count(rows)
    state = states[chosen]
    sample_set = SampleSet(
        balls=state.balls,
        method="auto",
        parameters={
            "chosen_n": chosen,
            "n_min": n_min,
            "n_max": n_max,
            "r_min": count_range.r_min,
            "objective": objective,
            "weights": weights.as_dict(),
            "boundary_count": boundary_count,
            "interior_count": interior_count if interior_in_clustering else 0,
        },
        iterations=state.iteration,
    )
    return sample_set, rows
