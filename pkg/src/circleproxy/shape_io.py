"""Shape input/output and point-set generation.

Parses vector outlines from two formats -- an SVG path subset
(M/L/C/Q/Z, absolute and relative) and a JSON polygon format -- into a
flattened :class:`ElementShape`, and produces the boundary / interior
point sets the samplers consume.

polygon-json schema::

    {"loops": [{"hole": bool, "points": [[x, y], ...]}, ...]}

All outputs are deterministic: identical input bytes give identical
shapes and point lists.
"""

from __future__ import annotations

import json
import math
import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Literal, NamedTuple, Sequence

import numpy as np

from .errors import GenerationError, ParseError, ShapeInvalidError
from .geom_core import Point2, flatten_cubic_bezier, points_in_shape, polygon_area

__all__ = [
    "Loop",
    "ElementShape",
    "PointSample",
    "parse_shape",
    "shape_from_loops",
    "shape_to_polygon_json",
    "sample_boundary",
    "sample_interior",
]

# Fraction of the control-point bbox diagonal used as the default Bezier
# flattening tolerance when none is given.
DEFAULT_FLATTEN_FRAC = 0.0025

# Default number of boundary points when callers do not override.
DEFAULT_BOUNDARY_COUNT = 400

_MAX_INTERIOR_CANDIDATES = 1_000_000


@dataclass(frozen=True)
class Loop:
    """One closed boundary loop; holes wind CW, outers CCW."""

    vertices: tuple[Point2, ...]
    is_hole: bool


@dataclass(frozen=True)
class ElementShape:
    """A flattened multi-loop shape with derived bbox and area."""

    loops: tuple[Loop, ...]
    bbox: tuple[Point2, Point2]
    area: float

    @property
    def bbox_diagonal(self) -> float:
        lo, hi = self.bbox
        return math.hypot(hi.x - lo.x, hi.y - lo.y)


class PointSample(NamedTuple):
    position: Point2
    kind: Literal["boundary", "interior"]


# ---------------------------------------------------------------------------
# Shape construction
# ---------------------------------------------------------------------------


def _dedup(vertices: Sequence[Sequence[float]]) -> list[Point2]:
    out: list[Point2] = []
    for v in vertices:
        p = Point2(float(v[0]), float(v[1]))
        if not (math.isfinite(p.x) and math.isfinite(p.y)):
            raise ShapeInvalidError("non-finite coordinate in loop")
        if out and p == out[-1]:
            continue
        out.append(p)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def _loop_contains(vertices: Sequence[Point2], px: float, py: float) -> bool:
    inside = False
    n = len(vertices)
    for i in range(n):
        x1, y1 = vertices[i]
        x2, y2 = vertices[(i + 1) % n]
        if (y1 > py) != (y2 > py):
            if px < (x2 - x1) * (py - y1) / (y2 - y1) + x1:
                inside = not inside
    return inside


def shape_from_loops(
    loops: Sequence[tuple[Sequence[Sequence[float]], bool]],
) -> ElementShape:
    """Build a validated ElementShape from (vertices, is_hole) pairs.

    Orientation is normalized (outer loops CCW, holes CW); degenerate
    loops are rejected, every hole must lie inside some outer loop, and
    the net area must be positive.
    """
    cleaned: list[Loop] = []
    for vertices, is_hole in loops:
        vs = _dedup(vertices)
        if len(vs) < 3:
            raise ShapeInvalidError("loop has fewer than 3 distinct vertices")
        signed = polygon_area(vs)
        if signed == 0.0:
            raise ShapeInvalidError("loop has zero area")
        want_ccw = not is_hole
        if (signed > 0) != want_ccw:
            vs.reverse()
        cleaned.append(Loop(tuple(vs), bool(is_hole)))
    outers = [lp for lp in cleaned if not lp.is_hole]
    if not outers:
        raise ShapeInvalidError("shape has no outer loop")
    for lp in cleaned:
        if lp.is_hole:
            # Proper nesting: some single outer loop contains the whole
            # hole. Loops that cross an outer boundary are rejected
            # rather than silently mis-filled.
            if not any(
                all(_loop_contains(o.vertices, v.x, v.y) for v in lp.vertices)
                for o in outers
            ):
                raise ShapeInvalidError(
                    "hole loop is not nested inside an outer loop "
                    "(crossing loops are not supported)"
                )
    area = sum(polygon_area(lp.vertices) for lp in cleaned)
    if area <= 0.0:
        raise ShapeInvalidError("shape area is not positive")
    xs = [p.x for lp in cleaned for p in lp.vertices]
    ys = [p.y for lp in cleaned for p in lp.vertices]
    bbox = (Point2(min(xs), min(ys)), Point2(max(xs), max(ys)))
    return ElementShape(tuple(cleaned), bbox, area)


# ---------------------------------------------------------------------------
# SVG path subset
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<cmd>[MmLlCcQqZz])|(?P<num>[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)|(?P<sep>,)|(?P<bad>\S))"
)


def _tokenize_path(d: str, base_offset: int = 0):
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(d):
        m = _TOKEN_RE.match(d, pos)
        if m is None:
            break
        if m.group("bad"):
            raise ParseError(
                f"unexpected character {m.group('bad')!r} in path data",
                base_offset + m.start("bad"),
            )
        if m.group("cmd"):
            tokens.append(("cmd", m.group("cmd"), base_offset + m.start("cmd")))
        elif m.group("num"):
            tokens.append(("num", m.group("num"), base_offset + m.start("num")))
        pos = m.end()
    return tokens


def _parse_path_segments(d: str, base_offset: int = 0):
    """Decompose path data into subpaths of line/cubic segments.

    Quadratic segments are degree-elevated to cubics. Unclosed subpaths
    are treated as closed (fill semantics).
    """
    tokens = _tokenize_path(d, base_offset)
    if not tokens:
        raise ParseError("empty path data", base_offset)
    subpaths: list[list[tuple]] = []
    current: list[tuple] = []
    cx = cy = 0.0
    sx = sy = 0.0
    i = 0

    def take_numbers(n: int, at: int) -> list[float]:
        nonlocal i
        vals = []
        for _ in range(n):
            if i >= len(tokens) or tokens[i][0] != "num":
                raise ParseError("expected number in path data", at)
            vals.append(float(tokens[i][1]))
            i += 1
        return vals

    def end_subpath():
        nonlocal current
        if current:
            subpaths.append(current)
            current = []

    if tokens[0][0] != "cmd" or tokens[0][1] not in "Mm":
        raise ParseError("path data must start with a moveto", tokens[0][2])

    cmd = ""
    while i < len(tokens):
        kind, text, at = tokens[i]
        if kind == "cmd":
            cmd = text
            i += 1
            if cmd in "Zz":
                end_subpath()
                cx, cy = sx, sy
                continue
        elif cmd in "Mm":
            # Implicit lineto after a moveto.
            cmd = "L" if cmd == "M" else "l"
        elif cmd == "":
            raise ParseError("number before any command", at)

        rel = cmd.islower()
        op = cmd.upper()
        if op == "M":
            x, y = take_numbers(2, at)
            if rel:
                x, y = cx + x, cy + y
            end_subpath()
            cx, cy = x, y
            sx, sy = x, y
            current.append(("start", (x, y)))
        elif op == "L":
            x, y = take_numbers(2, at)
            if rel:
                x, y = cx + x, cy + y
            current.append(("line", (cx, cy), (x, y)))
            cx, cy = x, y
        elif op == "C":
            x1, y1, x2, y2, x, y = take_numbers(6, at)
            if rel:
                x1, y1 = cx + x1, cy + y1
                x2, y2 = cx + x2, cy + y2
                x, y = cx + x, cy + y
            current.append(("cubic", (cx, cy), (x1, y1), (x2, y2), (x, y)))
            cx, cy = x, y
        elif op == "Q":
            qx, qy, x, y = take_numbers(4, at)
            if rel:
                qx, qy = cx + qx, cy + qy
                x, y = cx + x, cy + y
            c1 = (cx + 2.0 / 3.0 * (qx - cx), cy + 2.0 / 3.0 * (qy - cy))
            c2 = (x + 2.0 / 3.0 * (qx - x), y + 2.0 / 3.0 * (qy - y))
            current.append(("cubic", (cx, cy), c1, c2, (x, y)))
            cx, cy = x, y
        else:
            raise ParseError(f"unsupported path command {cmd!r}", at)
    end_subpath()
    return subpaths


def _flatten_subpaths(subpaths, tol: float) -> list[list[Point2]]:
    loops: list[list[Point2]] = []
    for segments in subpaths:
        pts: list[Point2] = []
        for seg in segments:
            if seg[0] == "start":
                pts.append(Point2(*seg[1]))
            elif seg[0] == "line":
                pts.append(Point2(*seg[2]))
            else:
                _, p0, p1, p2, p3 = seg
                flat = flatten_cubic_bezier(p0, p1, p2, p3, tol)
                pts.extend(flat[1:])
        if len(pts) >= 3:
            loops.append(pts)
    return loops


def _control_bbox_diag(subpaths) -> float:
    xs: list[float] = []
    ys: list[float] = []
    for segments in subpaths:
        for seg in segments:
            for pt in seg[1:]:
                xs.append(pt[0])
                ys.append(pt[1])
    if not xs:
        return 0.0
    return math.hypot(max(xs) - min(xs), max(ys) - min(ys))


_SVG_DRAWABLES = {
    "rect", "circle", "ellipse", "line", "polyline", "polygon", "text", "image", "use",
}


def _path_data_from_svg(text: str) -> list[str]:
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        line, col = exc.position
        offset = sum(len(ln) + 1 for ln in text.splitlines()[: line - 1]) + col
        raise ParseError(f"malformed SVG document: {exc.msg}", offset) from exc
    ds: list[str] = []
    for elem in root.iter():
        tag = elem.tag.rsplit("}", 1)[-1]
        if "transform" in elem.attrib:
            raise ParseError(f"<{tag}> carries a transform attribute, which is unsupported")
        if tag == "path":
            d = elem.get("d")
            if not d:
                raise ParseError("<path> element without path data")
            ds.append(d)
        elif tag in _SVG_DRAWABLES:
            raise ParseError(f"unsupported SVG element <{tag}>; only <path> outlines are accepted")
    if not ds:
        raise ParseError("SVG document contains no <path> elements")
    return ds


def _parse_svg(text: str, flatten_tol: float | None) -> ElementShape:
    if text.lstrip().startswith("<"):
        datas = _path_data_from_svg(text)
    else:
        datas = [text]
    subpaths = []
    for d in datas:
        subpaths.extend(_parse_path_segments(d))
    if flatten_tol is None:
        diag = _control_bbox_diag(subpaths)
        if diag <= 0.0:
            raise ShapeInvalidError("path has no extent")
        flatten_tol = DEFAULT_FLATTEN_FRAC * diag
    raw_loops = _flatten_subpaths(subpaths, flatten_tol)
    if not raw_loops:
        raise ShapeInvalidError("path produced no usable loops")
    # Even-odd nesting decides hole-ness: a loop inside an odd number of
    # other loops is a hole.
    kept = [_dedup(lp) for lp in raw_loops]
    kept = [lp for lp in kept if len(lp) >= 3 and polygon_area(lp) != 0.0]
    if not kept:
        raise ShapeInvalidError("all loops are degenerate")
    specs = []
    for i, lp in enumerate(kept):
        depth = sum(
            1
            for j, other in enumerate(kept)
            if j != i and _loop_contains(other, lp[0].x, lp[0].y)
        )
        specs.append((lp, depth % 2 == 1))
    return shape_from_loops(specs)


# ---------------------------------------------------------------------------
# polygon-json
# ---------------------------------------------------------------------------


def _parse_polygon_json(text: str) -> ElementShape:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", exc.pos) from exc
    if not isinstance(data, dict) or "loops" not in data:
        raise ParseError("polygon-json document must be an object with a 'loops' key")
    specs = []
    for k, entry in enumerate(data["loops"]):
        if not isinstance(entry, dict) or "points" not in entry:
            raise ParseError(f"loop {k} must be an object with a 'points' key")
        pts = entry["points"]
        if not isinstance(pts, list) or any(
            not isinstance(p, (list, tuple)) or len(p) != 2 for p in pts
        ):
            raise ParseError(f"loop {k} points must be [x, y] pairs")
        specs.append((pts, bool(entry.get("hole", False))))
    if not specs:
        raise ParseError("polygon-json document has no loops")
    return shape_from_loops(specs)


def shape_to_polygon_json(shape: ElementShape) -> str:
    """Serialize to the polygon-json schema (loop/vertex exact round-trip)."""
    doc = {
        "loops": [
            {"hole": lp.is_hole, "points": [[p.x, p.y] for p in lp.vertices]}
            for lp in shape.loops
        ]
    }
    return json.dumps(doc)


def parse_shape(
    data: bytes | str,
    format: Literal["svg-path", "polygon-json"],
    flatten_tol: float | None = None,
) -> ElementShape:
    """Parse an input document into a flattened, validated ElementShape.

    ``svg-path`` accepts either bare path data or a full SVG document
    whose only drawable elements are <path>. ``flatten_tol`` overrides
    the curve flattening tolerance (default: 0.25% of the control-point
    bbox diagonal).
    """
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    if format == "svg-path":
        return _parse_svg(text, flatten_tol)
    if format == "polygon-json":
        return _parse_polygon_json(text)
    raise ValueError(f"unknown shape format {format!r}")


# ---------------------------------------------------------------------------
# Point-set generation
# ---------------------------------------------------------------------------


def _loop_perimeter(vertices: Sequence[Point2]) -> float:
    total = 0.0
    n = len(vertices)
    for i in range(n):
        x1, y1 = vertices[i]
        x2, y2 = vertices[(i + 1) % n]
        total += math.hypot(x2 - x1, y2 - y1)
    return total


def _apportion(weights: Sequence[float], count: int) -> list[int]:
    """Largest-remainder apportionment of ``count`` among ``weights``."""
    total = sum(weights)
    if total <= 0.0:
        raise ShapeInvalidError("shape has zero perimeter")
    quotas = [count * w / total for w in weights]
    base = [int(math.floor(q)) for q in quotas]
    left = count - sum(base)
    order = sorted(range(len(weights)), key=lambda i: (base[i] - quotas[i], i))
    for i in order[:left]:
        base[i] += 1
    return base


def sample_boundary(shape: ElementShape, count: int) -> list[PointSample]:
    """Points at equal arc-length steps along every loop (holes included).

    The total count is apportioned to loops proportionally to perimeter.
    Each loop is walked from its lexicographically smallest vertex so
    the output is invariant under input vertex-order rotation.
    """
    if count < 3:
        raise ValueError("boundary sample count must be at least 3")
    perimeters = [_loop_perimeter(lp.vertices) for lp in shape.loops]
    counts = _apportion(perimeters, count)
    out: list[PointSample] = []
    for lp, per, n in zip(shape.loops, perimeters, counts):
        if n == 0 or per <= 0.0:
            continue
        verts = list(lp.vertices)
        start = min(range(len(verts)), key=lambda i: verts[i])
        verts = verts[start:] + verts[:start]
        v = np.asarray(verts, dtype=float)
        nxt = np.roll(v, -1, axis=0)
        edge_len = np.hypot(nxt[:, 0] - v[:, 0], nxt[:, 1] - v[:, 1])
        cum_end = np.cumsum(edge_len)
        targets = (np.arange(n) + 0.5) * (per / n)
        targets = np.minimum(targets, cum_end[-1])
        edge_idx = np.searchsorted(cum_end, targets, side="left")
        edge_idx = np.minimum(edge_idx, len(verts) - 1)
        cum_start = cum_end - edge_len
        with np.errstate(divide="ignore", invalid="ignore"):
            frac = np.where(
                edge_len[edge_idx] > 0.0,
                (targets - cum_start[edge_idx]) / edge_len[edge_idx],
                0.0,
            )
        px = v[edge_idx, 0] + frac * (nxt[edge_idx, 0] - v[edge_idx, 0])
        py = v[edge_idx, 1] + frac * (nxt[edge_idx, 1] - v[edge_idx, 1])
        out.extend(
            PointSample(Point2(float(x), float(y)), "boundary") for x, y in zip(px, py)
        )
    return out


def _radical_inverse(indices: np.ndarray, base: int) -> np.ndarray:
    result = np.zeros(len(indices), dtype=float)
    f = 1.0
    i = indices.astype(np.int64).copy()
    while i.max(initial=0) > 0:
        f /= base
        result += f * (i % base)
        i //= base
    return result


def sample_interior(shape: ElementShape, count: int) -> list[PointSample]:
    """Exactly ``count`` interior points from a Halton (2,3) sequence.

    Candidates cover the bbox and are filtered by containment; fully
    deterministic, no randomness involved. Raises ``GenerationError``
    when a pathologically thin shape defeats 10^6 candidates.
    """
    if count < 0:
        raise ValueError("interior sample count must be non-negative")
    if count == 0:
        return []
    lo, hi = shape.bbox
    w, h = hi.x - lo.x, hi.y - lo.y
    out: list[PointSample] = []
    start = 1
    chunk = max(1024, 4 * count)
    while len(out) < count:
        if start > _MAX_INTERIOR_CANDIDATES:
            raise GenerationError(
                f"interior sampling produced {len(out)}/{count} points "
                f"after {_MAX_INTERIOR_CANDIDATES} candidates"
            )
        idx = np.arange(start, start + chunk, dtype=np.int64)
        xs = lo.x + w * _radical_inverse(idx, 2)
        ys = lo.y + h * _radical_inverse(idx, 3)
        pts = np.column_stack([xs, ys])
        mask = points_in_shape(pts, shape)
        for x, y in pts[mask]:
            out.append(PointSample(Point2(float(x), float(y)), "interior"))
            if len(out) == count:
                break
        start += chunk
    return out
