"""End-to-end pipeline driver and command-line interface.

Parses an input shape, runs the selected sampling method (medial-axis
polar balls, fixed-count SEC clustering, or the count-optimizing scan),
builds the element graph, and emits deterministic JSON plus an optional
SVG visualization (gray shape fill, yellow sample circles, black center
dots, blue graph edges).

Exit codes: 1 usage/config error, 2 parse error, 3 degenerate or
invalid shape.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .cost_model import (
    CountRange,
    CostBreakdown,
    Measures,
    Weights,
    optimize_sample_count,
)
from .errors import (
    CircleProxyError,
    ConfigError,
    DegenerateShapeError,
    GenerationError,
    ParseError,
    ShapeInvalidError,
)
from .graph_builder import GRAPH_POLICIES, ElementGraph, build_graph
from .medial_sampler import (
    DEFAULT_NOISE_RADIUS_FRAC,
    compute_polar_balls,
    scale_axis_prune,
    select_touching_polar_balls,
)
from .model import SampleSet
from .sec_sampler import kmeans_sec
from .shape_io import ElementShape, parse_shape, sample_boundary, sample_interior

__all__ = ["Config", "RunResult", "run", "render_svg", "result_to_json", "main"]

_METHODS = ("mat", "sec", "auto")
_OBJECTIVES = ("cost", "area")
_FORMATS = {"svg": "svg-path", "json": "polygon-json"}


@dataclass(frozen=True)
class Config:
    """Every knob of the pipeline, with documented defaults.

    ``n_max`` and ``r_min`` may be ``None`` for shape-derived values;
    ``sat_scale`` is off unless set. Serializes to/from a plain dict
    (see :meth:`to_dict` / :meth:`from_dict`) deterministically.
    """

    method: str = "auto"
    xi: float = 0.8
    n_min: int = 1
    n_max: int | None = None
    r_min: float | None = None
    weights: Weights = field(default_factory=Weights)
    boundary_count: int = 400
    interior_count: int = 256
    interior_in_clustering: bool = True
    adjacency_eps: float = 0.02
    asymmetry_grid: int = 64
    max_iter: int = 50
    move_tol: float = 1e-4
    seed: int = 0
    graph_policy: str = "touching-connected"
    sat_scale: float | None = None
    noise_radius_frac: float = DEFAULT_NOISE_RADIUS_FRAC
    flatten_tol: float | None = None
    objective: str = "cost"

    def __post_init__(self):
        if self.method not in _METHODS:
            raise ConfigError(f"method must be one of {_METHODS}, got {self.method!r}")
        if self.objective not in _OBJECTIVES:
            raise ConfigError(
                f"objective must be one of {_OBJECTIVES}, got {self.objective!r}"
            )
        if self.graph_policy != "none" and self.graph_policy not in GRAPH_POLICIES:
            raise ConfigError(f"unknown graph policy {self.graph_policy!r}")
        if self.xi < 0 or not math.isfinite(self.xi):
            raise ConfigError(f"xi must be finite and >= 0, got {self.xi}")
        if self.sat_scale is not None and self.sat_scale < 1.0:
            raise ConfigError(f"sat_scale must be >= 1, got {self.sat_scale}")

    def to_dict(self) -> dict[str, Any]:
        d = {
            name: getattr(self, name)
            for name in self.__dataclass_fields__
            if name != "weights"
        }
        d["weights"] = self.weights.as_dict()
        return d

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Config":
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        kwargs = dict(data)
        if "weights" in kwargs and not isinstance(kwargs["weights"], Weights):
            w = kwargs["weights"]
            if isinstance(w, dict):
                kwargs["weights"] = Weights(**w)
            else:
                kwargs["weights"] = Weights(*w)
        try:
            return cls(**kwargs)
        except TypeError as exc:
            raise ConfigError(str(exc)) from exc


@dataclass(frozen=True)
class RunResult:
    samples: SampleSet
    graph: ElementGraph
    breakdown: list[CostBreakdown]
    timings: dict[str, float]
    shape: ElementShape


def _clustering_points(shape: ElementShape, config: Config):
    points = sample_boundary(shape, config.boundary_count)
    if config.interior_in_clustering and config.interior_count > 0:
        points = points + sample_interior(shape, config.interior_count)
    return points


def run(config: Config, document: bytes | str, format: str = "svg-path") -> RunResult:
    """Run the full pipeline on one input document.

    ``format`` is ``"svg-path"`` or ``"polygon-json"``. Deterministic:
    the same config and document bytes always produce the same samples,
    graph, and breakdown (timings vary).
    """
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    shape = parse_shape(document, format, flatten_tol=config.flatten_tol)
    timings["parse_ms"] = (time.perf_counter() - t0) * 1000.0

    t0 = time.perf_counter()
    breakdown: list[CostBreakdown] = []
    if config.method == "mat":
        balls = compute_polar_balls(
            shape, config.boundary_count, config.noise_radius_frac
        )
        if config.sat_scale is not None:
            balls = scale_axis_prune(balls, config.sat_scale)
        samples = select_touching_polar_balls(balls, config.xi)
    elif config.method == "sec":
        points = _clustering_points(shape, config)
        count_range = CountRange.auto(shape, config.n_min, config.n_max, config.r_min)
        b = min(count_range.n_max, len(points))
        state = kmeans_sec(
            points, b, max_iter=config.max_iter, move_tol=config.move_tol,
            seed=config.seed,
        )
        samples = SampleSet(
            balls=state.balls,
            method="sec",
            parameters={"b": b, "converged": state.converged},
            iterations=state.iteration,
        )
    else:
        count_range = CountRange.auto(shape, config.n_min, config.n_max, config.r_min)
        samples, breakdown = optimize_sample_count(
            shape,
            count_range,
            config.weights,
            boundary_count=config.boundary_count,
            interior_count=config.interior_count,
            interior_in_clustering=config.interior_in_clustering,
            max_iter=config.max_iter,
            move_tol=config.move_tol,
            adjacency_eps=config.adjacency_eps,
            asymmetry_grid=config.asymmetry_grid,
            seed=config.seed,
            objective=config.objective,
        )
    timings["sample_ms"] = (time.perf_counter() - t0) * 1000.0

    t0 = time.perf_counter()
    if config.graph_policy == "none" or not samples.balls:
        graph = ElementGraph(node_count=len(samples.balls), edges=frozenset())
    else:
        graph = build_graph(samples.balls, config.graph_policy, config.adjacency_eps)
    timings["graph_ms"] = (time.perf_counter() - t0) * 1000.0
    return RunResult(samples, graph, breakdown, timings, shape)


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------


def _round9(x: float) -> float:
    # 9 significant digits keeps diffs reproducible across runs.
    return float(f"{x:.9g}")


def result_to_json(result: RunResult) -> str:
    """Deterministic JSON for a run; timings are deliberately excluded."""
    rows = []
    chosen_n = len(result.samples.balls)
    for row in result.breakdown:
        rows.append(
            {
                "n": row.n,
                "raw": _measures_dict(row.raw),
                "normalized": _measures_dict(row.band_normalized),
                "total": _round9(row.total),
                "adjacency_count": row.adjacency_count,
                "chosen": row.n == chosen_n,
            }
        )
    doc = {
        "samples": [
            {
                "cx": _round9(b.center.x),
                "cy": _round9(b.center.y),
                "r": _round9(b.radius),
            }
            for b in result.samples.balls
        ],
        "edges": sorted([i, j] for i, j in result.graph.edges),
        "method": result.samples.method,
        "chosen_n": chosen_n,
        "iterations": result.samples.iterations,
        "breakdown": rows,
    }
    return json.dumps(doc, sort_keys=True, indent=2)


def _measures_dict(m: Measures) -> dict[str, float]:
    return {
        "overlap": _round9(m.overlap),
        "exterior": _round9(m.exterior),
        "adjacency": _round9(m.adjacency),
        "asymmetry": _round9(m.asymmetry),
    }


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def render_svg(result: RunResult, shape: ElementShape) -> str:
    """Standalone SVG in the usual figure style.

    Shape outline filled gray (even-odd), one yellow-stroked <circle>
    per sample, a small black <rect> dot at each center, and blue
    <line> elements for the graph edges. The viewBox is the shape bbox
    padded by the largest sample radius.
    """
    lo, hi = shape.bbox
    pad = max((b.radius for b in result.samples.balls), default=0.0)
    pad = max(pad, 0.02 * shape.bbox_diagonal)
    x0, y0 = lo.x - pad, lo.y - pad
    w, h = (hi.x - lo.x) + 2 * pad, (hi.y - lo.y) + 2 * pad
    stroke = 0.002 * max(w, h)
    dot = 0.008 * max(w, h)

    parts = []
    d = []
    for lp in shape.loops:
        d.append("M" + " L".join(f"{_fmt(p.x)},{_fmt(p.y)}" for p in lp.vertices) + " Z")
    parts.append(
        f'<path d="{" ".join(d)}" fill="#cccccc" fill-rule="evenodd" '
        f'stroke="#666666" stroke-width="{_fmt(stroke)}"/>'
    )
    balls = result.samples.balls
    for i, j in sorted(result.graph.edges):
        a, b = balls[i].center, balls[j].center
        parts.append(
            f'<line x1="{_fmt(a.x)}" y1="{_fmt(a.y)}" x2="{_fmt(b.x)}" '
            f'y2="{_fmt(b.y)}" stroke="#3366cc" stroke-width="{_fmt(2 * stroke)}"/>'
        )
    for b in balls:
        parts.append(
            f'<circle cx="{_fmt(b.center.x)}" cy="{_fmt(b.center.y)}" '
            f'r="{_fmt(b.radius)}" fill="none" stroke="#e6b800" '
            f'stroke-width="{_fmt(2 * stroke)}"/>'
        )
    for b in balls:
        parts.append(
            f'<rect x="{_fmt(b.center.x - dot / 2)}" y="{_fmt(b.center.y - dot / 2)}" '
            f'width="{_fmt(dot)}" height="{_fmt(dot)}" fill="#000000"/>'
        )
    body = "\n  ".join(parts)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">\n  {body}\n</svg>\n'
    )


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # Usage problems exit with 1 (2 is reserved for parse errors).
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="circleproxy", description="Approximate a 2D vector shape with sample circles.")
    p.add_argument("--input", required=True, help="input shape file")
    p.add_argument("--format", choices=("svg", "json"), help="input format (default: by file extension)")
    p.add_argument("--config", help="JSON config file; explicit flags override it")
    p.add_argument("--method", choices=_METHODS)
    p.add_argument("--xi", type=float, help="spacing ratio for the mat method")
    p.add_argument("--samples-min", type=int, dest="n_min")
    p.add_argument("--samples-max", type=int, dest="n_max")
    p.add_argument("--r-min", type=float, dest="r_min", help="smallest sample radius (shape units)")
    p.add_argument("--weights", help="four comma-separated weights: overlap,exterior,adjacency,asymmetry")
    p.add_argument("--boundary-points", type=int, dest="boundary_count")
    p.add_argument("--interior-points", type=int, dest="interior_count")
    p.add_argument(
        "--interior-in-clustering",
        action=argparse.BooleanOptionalAction,
        dest="interior_in_clustering",
        default=None,
        help="include interior points in SEC clustering (default on)",
    )
    p.add_argument("--adj-eps", type=float, dest="adjacency_eps")
    p.add_argument("--grid", type=int, dest="asymmetry_grid")
    p.add_argument("--max-iter", type=int, dest="max_iter")
    p.add_argument("--move-tol", type=float, dest="move_tol")
    p.add_argument("--seed", type=int)
    p.add_argument("--graph", choices=("none",) + GRAPH_POLICIES, dest="graph_policy")
    p.add_argument("--sat-scale", type=float, dest="sat_scale", help="enable the scaled containment prune")
    p.add_argument("--objective", choices=_OBJECTIVES)
    p.add_argument("--out-json", help="write result JSON here (default: stdout)")
    p.add_argument("--out-svg", help="write an SVG visualization here")
    return p

_CONFIG_FLAGS = (
    "method", "xi", "n_min", "n_max", "r_min", "boundary_count", "interior_count",
    "interior_in_clustering", "adjacency_eps", "asymmetry_grid", "max_iter",
    "move_tol", "seed", "graph_policy", "sat_scale", "objective",
)


def _config_from_args(args: argparse.Namespace) -> Config:
    base: dict[str, Any] = {}
    if args.config:
        try:
            base = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config file {args.config}: {exc}") from exc
        if not isinstance(base, dict):
            raise ConfigError("config file must hold a JSON object")
    for name in _CONFIG_FLAGS:
        value = getattr(args, name)
        if value is not None:
            base[name] = value
    if args.weights is not None:
        parts = args.weights.split(",")
        if len(parts) != 4:
            raise ConfigError("--weights expects four comma-separated numbers")
        try:
            base["weights"] = [float(v) for v in parts]
        except ValueError as exc:
            raise ConfigError(f"bad --weights value: {exc}") from exc
    return Config.from_dict(base)


def _infer_format(path: str, explicit: str | None) -> str:
    if explicit is not None:
        return _FORMATS[explicit]
    suffix = Path(path).suffix.lower()
    if suffix == ".svg":
        return "svg-path"
    if suffix == ".json":
        return "polygon-json"
    raise ConfigError(
        f"cannot infer format from {path!r}; pass --format svg or --format json"
    )


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = _config_from_args(args)
        fmt = _infer_format(args.input, args.format)
        data = Path(args.input).read_bytes()
    except (ConfigError, OSError) as exc:
        print(f"circleproxy: {exc}", file=sys.stderr)
        return 1
    try:
        result = run(config, data, fmt)
    except ParseError as exc:
        print(f"circleproxy: parse error: {exc}", file=sys.stderr)
        return 2
    except (ShapeInvalidError, DegenerateShapeError, GenerationError) as exc:
        print(f"circleproxy: shape error: {exc}", file=sys.stderr)
        return 3
    except (ConfigError, ValueError) as exc:
        print(f"circleproxy: {exc}", file=sys.stderr)
        return 1
    except CircleProxyError as exc:
        print(f"circleproxy: {exc}", file=sys.stderr)
        return 3

    payload = result_to_json(result)
    if args.out_json:
        Path(args.out_json).write_text(payload, encoding="utf-8")
    else:
        print(payload)
    if args.out_svg:
        Path(args.out_svg).write_text(render_svg(result, result.shape), encoding="utf-8")
    t = result.timings
    print(
        f"circleproxy: {len(result.samples.balls)} samples "
        f"({result.samples.method}), {len(result.graph.edges)} edges "
        f"[parse {t['parse_ms']:.1f} ms, sample {t['sample_ms']:.1f} ms, "
        f"graph {t['graph_ms']:.1f} ms]",
        file=sys.stderr,
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
