"""Exact and semi-analytic 2D geometric primitives.

Everything here is a pure function over immutable inputs: signed polygon
areas, even-odd containment, ear-clipping triangulation (with hole
bridging), exact circle/circle and circle/triangle intersection areas,
Welzl's smallest enclosing circle, and adaptive cubic Bezier flattening.

Coordinates are plain float64 shape units; no robust predicates beyond
double precision with tolerances.
"""

from __future__ import annotations

import math
import random
from functools import lru_cache
from typing import TYPE_CHECKING, NamedTuple, Sequence

import numpy as np

from .errors import ShapeInvalidError

if TYPE_CHECKING:
    from .shape_io import ElementShape

__all__ = [
    "Point2",
    "Circle",
    "Triangle",
    "polygon_area",
    "point_in_shape",
    "points_in_shape",
    "triangulate",
    "circle_lens_area",
    "circle_shape_intersection_area",
    "smallest_enclosing_circle",
    "flatten_cubic_bezier",
]


class Point2(NamedTuple):
    """A 2D point. Coordinates must be finite."""

    x: float
    y: float


class Circle(NamedTuple):
    """A circle with non-negative finite radius."""

    center: Point2
    radius: float

    @property
    def area(self) -> float:
        return math.pi * self.radius * self.radius

    def contains(self, p: Sequence[float], slack: float = 1e-9) -> bool:
        """True if ``p`` lies in the closed disk, with relative radius slack."""
        d = math.hypot(p[0] - self.center.x, p[1] - self.center.y)
        return d <= self.radius + slack * max(self.radius, 1.0)


class Triangle(NamedTuple):
    """Three vertices; may be degenerate (zero signed area)."""

    a: Point2
    b: Point2
    c: Point2

    def signed_area(self) -> float:
        (ax, ay), (bx, by), (cx, cy) = self.a, self.b, self.c
        return 0.5 * ((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))


# ---------------------------------------------------------------------------
# Polygon area and containment
# ---------------------------------------------------------------------------


def polygon_area(loop: Sequence[Sequence[float]]) -> float:
    """Signed shoelace area of an implicitly closed vertex loop.

    Positive for counter-clockwise orientation. Raises ``ValueError``
    for fewer than 3 vertices.
    """
    pts = [(float(p[0]), float(p[1])) for p in loop]
    if len(pts) < 3:
        raise ValueError("polygon_area needs at least 3 vertices")
    total = 0.0
    x0, y0 = pts[-1]
    for x1, y1 in pts:
        total += x0 * y1 - x1 * y0
        x0, y0 = x1, y1
    return 0.5 * total


@lru_cache(maxsize=64)
def _shape_edges(shape: "ElementShape") -> tuple[np.ndarray, ...]:
    """All loop edges of a shape, concatenated, as (x1, y1, x2, y2) arrays."""
    xs1, ys1, xs2, ys2 = [], [], [], []
    for loop in shape.loops:
        v = np.asarray(loop.vertices, dtype=float)
        xs1.append(v[:, 0])
        ys1.append(v[:, 1])
        xs2.append(np.roll(v[:, 0], -1))
        ys2.append(np.roll(v[:, 1], -1))
    return (
        np.concatenate(xs1),
        np.concatenate(ys1),
        np.concatenate(xs2),
        np.concatenate(ys2),
    )


_POINT_CHUNK = 8192
_EDGE_TOL = 1e-9


def points_in_shape(points: np.ndarray, shape: "ElementShape") -> np.ndarray:
    """Vectorized even-odd containment test for an (n, 2) point array.

    Holes subtract automatically: parity is taken over the edges of every
    loop. Points exactly on an edge fall wherever the ray-cast tie-break
    puts them; use :func:`point_in_shape` when the boundary-inclusive
    answer matters.
    """
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    x1, y1, x2, y2 = _shape_edges(shape)
    dy = y2 - y1
    with np.errstate(divide="ignore", invalid="ignore"):
        slope = np.where(dy != 0.0, (x2 - x1) / dy, 0.0)
    inside = np.empty(len(pts), dtype=bool)
    for lo in range(0, len(pts), _POINT_CHUNK):
        px = pts[lo : lo + _POINT_CHUNK, 0]
        py = pts[lo : lo + _POINT_CHUNK, 1]
        straddle = (y1[:, None] > py) != (y2[:, None] > py)
        xint = slope[:, None] * (py - y1[:, None]) + x1[:, None]
        hits = straddle & (px < xint)
        inside[lo : lo + len(px)] = (hits.sum(axis=0) & 1).astype(bool)
    return inside


def point_in_shape(p: Sequence[float], shape: "ElementShape") -> bool:
    """Even-odd containment of a single point; boundary counts as inside."""
    px, py = float(p[0]), float(p[1])
    x1, y1, x2, y2 = _shape_edges(shape)
    straddle = (y1 > py) != (y2 > py)
    if straddle.any():
        sx1, sy1, sx2, sy2 = x1[straddle], y1[straddle], x2[straddle], y2[straddle]
        xint = (sx2 - sx1) * (py - sy1) / (sy2 - sy1) + sx1
        if (np.count_nonzero(px < xint) & 1) == 1:
            return True
    return _on_any_edge(px, py, x1, y1, x2, y2)


def _on_any_edge(px, py, x1, y1, x2, y2) -> bool:
    ex, ey = x2 - x1, y2 - y1
    qx, qy = px - x1, py - y1
    seg_len2 = ex * ex + ey * ey
    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(seg_len2 > 0.0, (qx * ex + qy * ey) / seg_len2, 0.0)
    t = np.clip(t, 0.0, 1.0)
    dx, dy = qx - t * ex, qy - t * ey
    return bool((dx * dx + dy * dy <= _EDGE_TOL * _EDGE_TOL).any())


# ---------------------------------------------------------------------------
# Triangulation (ear clipping with hole bridging)
# ---------------------------------------------------------------------------


def triangulate(shape: "ElementShape") -> list[Triangle]:
    """Partition the shape interior into triangles.

    Each outer loop is merged with the holes it contains via bridge
    edges, then ear-clipped. The absolute triangle areas sum to the
    shape area (outer minus holes) up to float roundoff.

    Raises ``ShapeInvalidError`` when no ear can be found, which happens
    for self-intersecting input.
    """
    outers = [lp for lp in shape.loops if not lp.is_hole]
    holes = [lp for lp in shape.loops if lp.is_hole]
    tris: list[Triangle] = []
    for outer in outers:
        ring = [(float(x), float(y)) for x, y in outer.vertices]
        if polygon_area(ring) < 0:
            ring.reverse()
        own = []
        for hole in holes:
            hx, hy = hole.vertices[0]
            if _loop_parity(float(hx), float(hy), outer.vertices):
                hv = [(float(x), float(y)) for x, y in hole.vertices]
                if polygon_area(hv) > 0:
                    hv.reverse()
                own.append(hv)
        merged = _merge_holes(ring, own)
        tris.extend(_ear_clip(merged))
    # Ear clipping silently mis-triangulates crossing loops; area
    # conservation is the reliable detector.
    total = sum(abs(t.signed_area()) for t in tris)
    if not math.isclose(total, shape.area, rel_tol=1e-6, abs_tol=1e-12):
        raise ShapeInvalidError(
            f"triangulation area {total:.9g} does not match shape area "
            f"{shape.area:.9g}; input loops are probably self-intersecting"
        )
    return tris


def _loop_parity(px: float, py: float, vertices) -> bool:
    inside = False
    n = len(vertices)
    for i in range(n):
        x1, y1 = vertices[i]
        x2, y2 = vertices[(i + 1) % n]
        if (y1 > py) != (y2 > py):
            xint = (x2 - x1) * (py - y1) / (y2 - y1) + x1
            if px < xint:
                inside = not inside
    return inside


def _merge_holes(ring: list[tuple[float, float]], holes: list[list[tuple[float, float]]]):
    """Splice CW hole rings into a CCW outer ring with bridge edges.

    Bridges go from each hole's maximum-x vertex to a visible vertex of
    the current ring, processing holes right-to-left so already-merged
    holes participate in later visibility tests.
    """
    holes = sorted(holes, key=lambda h: -max(p[0] for p in h))
    poly = list(ring)
    for hole in holes:
        m_idx = max(range(len(hole)), key=lambda i: hole[i])
        mx, my = hole[m_idx]
        p_idx = _visible_ring_vertex(poly, mx, my)
        poly = (
            poly[: p_idx + 1]
            + hole[m_idx:]
            + hole[: m_idx + 1]
            + poly[p_idx:]
        )
    return poly


def _visible_ring_vertex(poly: list[tuple[float, float]], mx: float, my: float) -> int:
    """Index of a ring vertex mutually visible from (mx, my) looking +x."""
    n = len(poly)
    best_t = math.inf
    best_edge = -1
    hit_vertex = -1
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        if (y1 > my) == (y2 > my):
            # Also catch a horizontal ray passing exactly through a vertex.
            if y1 == my and x1 >= mx and x1 - mx < best_t:
                best_t = x1 - mx
                hit_vertex = i
                best_edge = -1
            continue
        xint = (x2 - x1) * (my - y1) / (y2 - y1) + x1
        t = xint - mx
        if 0.0 <= t < best_t:
            best_t = t
            best_edge = i
            hit_vertex = -1
    if hit_vertex >= 0:
        return hit_vertex
    if best_edge < 0:
        raise ShapeInvalidError("hole is not enclosed by its outer loop")
    ix = mx + best_t
    e1, e2 = best_edge, (best_edge + 1) % n
    # Candidate: endpoint of the struck edge with the larger x.
    cand = e1 if poly[e1][0] > poly[e2][0] else e2
    # Reflex vertices inside triangle (M, I, P) would block the bridge;
    # among blockers pick the one with the smallest angle to the ray.
    m = (mx, my)
    ipt = (ix, my)
    p = poly[cand]
    best_angle = math.inf
    best_dist = math.inf
    pick = cand
    for j in range(n):
        if j in (e1, e2):
            continue
        q = poly[j]
        if not _is_reflex(poly, j):
            continue
        if _strictly_in_triangle(q, m, ipt, p):
            dx, dy = q[0] - mx, q[1] - my
            ang = abs(math.atan2(dy, dx))
            dist = math.hypot(dx, dy)
            if ang < best_angle or (ang == best_angle and dist < best_dist):
                best_angle = ang
                best_dist = dist
                pick = j
    return pick


def _is_reflex(poly, j) -> bool:
    n = len(poly)
    ax, ay = poly[(j - 1) % n]
    bx, by = poly[j]
    cx, cy = poly[(j + 1) % n]
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) < 0.0


def _strictly_in_triangle(q, a, b, c) -> bool:
    d1 = (b[0] - a[0]) * (q[1] - a[1]) - (b[1] - a[1]) * (q[0] - a[0])
    d2 = (c[0] - b[0]) * (q[1] - b[1]) - (c[1] - b[1]) * (q[0] - b[0])
    d3 = (a[0] - c[0]) * (q[1] - c[1]) - (a[1] - c[1]) * (q[0] - c[0])
    return d1 > 0.0 and d2 > 0.0 and d3 > 0.0


def _segment_in_triangle_interior(u, v, a, b, c) -> bool:
    """Does the open segment (u, v) enter the open CCW triangle (a, b, c)?

    Catches edges that dip through an ear while only touching its
    boundary at vertices (pinch configurations around hole bridges).
    Liang-Barsky style clipping against the three half-planes; segments
    collinear with a triangle edge never count as interior.
    """
    dx, dy = v[0] - u[0], v[1] - u[1]
    t0, t1 = 0.0, 1.0
    for p, q in ((a, b), (b, c), (c, a)):
        ex, ey = q[0] - p[0], q[1] - p[1]
        den = ex * dy - ey * dx
        num = ex * (u[1] - p[1]) - ey * (u[0] - p[0])
        if den == 0.0:
            if num <= 0.0:
                return False
        else:
            t_cross = -num / den
            if den > 0.0:
                t0 = max(t0, t_cross)
            else:
                t1 = min(t1, t_cross)
    return t0 + 1e-12 < t1


def _ear_clip(poly: list[tuple[float, float]]) -> list[Triangle]:
    n = len(poly)
    if n < 3:
        return []
    span = max(
        max(p[0] for p in poly) - min(p[0] for p in poly),
        max(p[1] for p in poly) - min(p[1] for p in poly),
    )
    eps = 1e-12 * max(span * span, 1e-30)
    idx = list(range(n))
    tris: list[Triangle] = []

    def cross_at(k: int) -> float:
        i0, i1, i2 = idx[k - 1], idx[k], idx[(k + 1) % len(idx)]
        (ax, ay), (bx, by), (cx, cy) = poly[i0], poly[i1], poly[i2]
        return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)

    def vertices_clear(k: int) -> bool:
        i0, i1, i2 = idx[k - 1], idx[k], idx[(k + 1) % len(idx)]
        a, b, c = poly[i0], poly[i1], poly[i2]
        for j in idx:
            if j in (i0, i1, i2):
                continue
            q = poly[j]
            if q == a or q == b or q == c:
                continue
            if _strictly_in_triangle(q, a, b, c):
                return False
        return True

    def edges_clear(k: int) -> bool:
        i0, i1, i2 = idx[k - 1], idx[k], idx[(k + 1) % len(idx)]
        a, b, c = poly[i0], poly[i1], poly[i2]
        m = len(idx)
        for e in range(m):
            u, v = poly[idx[e]], poly[idx[(e + 1) % m]]
            if _segment_in_triangle_interior(u, v, a, b, c):
                return False
        return True

    def is_ear(k: int) -> bool:
        return vertices_clear(k) and edges_clear(k)

    while len(idx) > 3:
        clipped = False
        for k in range(len(idx)):
            cr = cross_at(k)
            if cr <= eps:
                continue
            if is_ear(k):
                i0, i1, i2 = idx[k - 1], idx[k], idx[(k + 1) % len(idx)]
                tris.append(
                    Triangle(Point2(*poly[i0]), Point2(*poly[i1]), Point2(*poly[i2]))
                )
                del idx[k]
                clipped = True
                break
        if not clipped:
            # Drop one degenerate (collinear) corner to make progress;
            # a zero-area triangle has no interior, so the vertex test
            # alone decides.
            for k in range(len(idx)):
                if abs(cross_at(k)) <= eps and vertices_clear(k):
                    del idx[k]
                    clipped = True
                    break
        if not clipped:
            raise ShapeInvalidError(
                "triangulation failed: polygon appears self-intersecting"
            )
    if len(idx) == 3:
        tri = Triangle(Point2(*poly[idx[0]]), Point2(*poly[idx[1]]), Point2(*poly[idx[2]]))
        if abs(tri.signed_area()) > 0.0:
            tris.append(tri)
    return tris


# ---------------------------------------------------------------------------
# Circle intersection areas
# ---------------------------------------------------------------------------


def circle_lens_area(c1: Circle, c2: Circle) -> float:
    """Exact area of the intersection of two circles (the lens).

    Zero when disjoint, the smaller circle's area when contained,
    otherwise the sum of the two circular segments.
    """
    r1, r2 = c1.radius, c2.radius
    if r1 <= 0.0 or r2 <= 0.0:
        return 0.0
    d = math.hypot(c2.center.x - c1.center.x, c2.center.y - c1.center.y)
    if d >= r1 + r2:
        return 0.0
    if d <= abs(r1 - r2):
        rm = min(r1, r2)
        return math.pi * rm * rm
    cos1 = (d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1)
    cos2 = (d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2)
    a1 = 2.0 * math.acos(max(-1.0, min(1.0, cos1)))
    a2 = 2.0 * math.acos(max(-1.0, min(1.0, cos2)))
    return 0.5 * r1 * r1 * (a1 - math.sin(a1)) + 0.5 * r2 * r2 * (a2 - math.sin(a2))


def _disk_edge_term(ax: float, ay: float, bx: float, by: float, r: float) -> float:
    """Signed area of disk(origin, r) ∩ wedge(origin, A, B).

    The edge A->B is split at its circle crossings; sub-segments inside
    the disk contribute straight-chord (triangle) area, sub-segments
    outside contribute circular-sector area. Summed over a closed CCW
    polygon this yields the disk/polygon intersection area (Green's
    theorem).
    """
    dx, dy = bx - ax, by - ay
    a = dx * dx + dy * dy
    if a == 0.0:
        return 0.0
    b = ax * dx + ay * dy
    c = ax * ax + ay * ay - r * r
    ts = [0.0, 1.0]
    disc = b * b - a * c
    if disc > 0.0:
        sq = math.sqrt(disc)
        for t in ((-b - sq) / a, (-b + sq) / a):
            if 0.0 < t < 1.0:
                ts.append(t)
    ts.sort()
    r2 = r * r
    area = 0.0
    for t0, t1 in zip(ts, ts[1:]):
        tm = 0.5 * (t0 + t1)
        mx, my = ax + tm * dx, ay + tm * dy
        p0x, p0y = ax + t0 * dx, ay + t0 * dy
        p1x, p1y = ax + t1 * dx, ay + t1 * dy
        if mx * mx + my * my <= r2:
            area += 0.5 * (p0x * p1y - p1x * p0y)
        else:
            area += 0.5 * r2 * math.atan2(p0x * p1y - p1x * p0y, p0x * p1x + p0y * p1y)
    return area


def circle_shape_intersection_area(c: Circle, tris: Sequence[Triangle]) -> float:
    """Area of circle ∩ (union of interior-disjoint triangles).

    Each triangle is clipped against the circle analytically; straight
    and arc pieces are accumulated per edge. Degenerate triangles
    contribute nothing.
    """
    r = c.radius
    if r <= 0.0:
        return 0.0
    cx, cy = c.center
    total = 0.0
    for tri in tris:
        sa = tri.signed_area()
        if sa == 0.0:
            continue
        a, b, d = (tri.a, tri.b, tri.c) if sa > 0.0 else (tri.a, tri.c, tri.b)
        # Quick reject: a triangle whose bbox misses the circle's bbox
        # cannot contain the center, so its wedge terms cancel to zero.
        xs = (a.x, b.x, d.x)
        ys = (a.y, b.y, d.y)
        if (
            min(xs) > cx + r
            or max(xs) < cx - r
            or min(ys) > cy + r
            or max(ys) < cy - r
        ):
            continue
        total += _disk_edge_term(a.x - cx, a.y - cy, b.x - cx, b.y - cy, r)
        total += _disk_edge_term(b.x - cx, b.y - cy, d.x - cx, d.y - cy, r)
        total += _disk_edge_term(d.x - cx, d.y - cy, a.x - cx, a.y - cy, r)
    return max(total, 0.0)


# ---------------------------------------------------------------------------
# Smallest enclosing circle (Welzl, randomized incremental)
# ---------------------------------------------------------------------------

_COVER_EPS = 1 + 1e-14


def _covers(circ: tuple[float, float, float], p: tuple[float, float]) -> bool:
    return math.hypot(p[0] - circ[0], p[1] - circ[1]) <= circ[2] * _COVER_EPS


def _diameter(p: tuple, q: tuple) -> tuple[float, float, float]:
    cx = (p[0] + q[0]) / 2.0
    cy = (p[1] + q[1]) / 2.0
    r = max(math.hypot(cx - p[0], cy - p[1]), math.hypot(cx - q[0], cy - q[1]))
    return (cx, cy, r)


def _circumcircle(p, q, s):
    # Translate toward the midpoint of the bbox for conditioning.
    ox = (min(p[0], q[0], s[0]) + max(p[0], q[0], s[0])) / 2.0
    oy = (min(p[1], q[1], s[1]) + max(p[1], q[1], s[1])) / 2.0
    ax, ay = p[0] - ox, p[1] - oy
    bx, by = q[0] - ox, q[1] - oy
    cx, cy = s[0] - ox, s[1] - oy
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if d == 0.0:
        return None
    ux = ox + ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / d
    uy = oy + ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / d
    r = max(
        math.hypot(ux - p[0], uy - p[1]),
        math.hypot(ux - q[0], uy - q[1]),
        math.hypot(ux - s[0], uy - s[1]),
    )
    return (ux, uy, r)


def _cross3(ox, oy, px, py, qx, qy) -> float:
    return (px - ox) * (qy - oy) - (py - oy) * (qx - ox)


def _sec_with_two(points, p, q):
    circ = _diameter(p, q)
    left = None
    right = None
    for s in points:
        if _covers(circ, s):
            continue
        cr = _cross3(p[0], p[1], q[0], q[1], s[0], s[1])
        cc = _circumcircle(p, q, s)
        if cc is None:
            continue
        side = _cross3(p[0], p[1], q[0], q[1], cc[0], cc[1])
        if cr > 0.0 and (left is None or side > _cross3(p[0], p[1], q[0], q[1], left[0], left[1])):
            left = cc
        elif cr < 0.0 and (right is None or side < _cross3(p[0], p[1], q[0], q[1], right[0], right[1])):
            right = cc
    if left is None and right is None:
        return circ
    if left is None:
        return right
    if right is None:
        return left
    return left if left[2] <= right[2] else right


def _sec_with_one(points, p):
    circ = (p[0], p[1], 0.0)
    for i, q in enumerate(points):
        if not _covers(circ, q):
            if circ[2] == 0.0:
                circ = _diameter(p, q)
            else:
                circ = _sec_with_two(points[: i + 1], p, q)
    return circ


def smallest_enclosing_circle(points: Sequence[Sequence[float]], seed: int = 0) -> Circle:
    """The unique minimum-radius circle containing all the points.

    Randomized incremental construction in expected linear time. The
    internal shuffle is seeded, so results are reproducible; the circle
    itself is determined by at most three support points and does not
    depend on the seed except in degenerate ties.
    """
    pts = [(float(p[0]), float(p[1])) for p in points]
    if not pts:
        raise ValueError("smallest_enclosing_circle needs at least one point")
    rng = random.Random(seed)
    rng.shuffle(pts)
    circ = None
    for i, p in enumerate(pts):
        if circ is None or not _covers(circ, p):
            circ = _sec_with_one(pts[: i + 1], p)
    return Circle(Point2(circ[0], circ[1]), circ[2])


# ---------------------------------------------------------------------------
# Bezier flattening
# ---------------------------------------------------------------------------

_MAX_BEZIER_DEPTH = 32


def _seg_dist(px, py, ax, ay, bx, by) -> float:
    ex, ey = bx - ax, by - ay
    L2 = ex * ex + ey * ey
    if L2 == 0.0:
        return math.hypot(px - ax, py - ay)
    t = ((px - ax) * ex + (py - ay) * ey) / L2
    t = max(0.0, min(1.0, t))
    return math.hypot(px - ax - t * ex, py - ay - t * ey)


def flatten_cubic_bezier(p0, p1, p2, p3, tol: float) -> list[Point2]:
    """Approximate a cubic Bezier by a polyline within ``tol`` deviation.

    Adaptive midpoint subdivision with a control-polygon flatness test:
    a segment is emitted once both inner control points are within
    ``tol`` of the chord, which bounds the true curve deviation by the
    convex hull property. Endpoints are preserved exactly.
    """
    if tol <= 0.0:
        raise ValueError("flatten tolerance must be positive")
    a = (float(p0[0]), float(p0[1]))
    b = (float(p1[0]), float(p1[1]))
    c = (float(p2[0]), float(p2[1]))
    d = (float(p3[0]), float(p3[1]))
    out = [Point2(*a)]
    stack = [(a, b, c, d, 0)]
    while stack:
        a, b, c, d, depth = stack.pop()
        flat = (
            _seg_dist(b[0], b[1], a[0], a[1], d[0], d[1]) <= tol
            and _seg_dist(c[0], c[1], a[0], a[1], d[0], d[1]) <= tol
        )
        if flat or depth >= _MAX_BEZIER_DEPTH:
            out.append(Point2(*d))
            continue
        ab = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        bc = ((b[0] + c[0]) / 2, (b[1] + c[1]) / 2)
        cd = ((c[0] + d[0]) / 2, (c[1] + d[1]) / 2)
        abc = ((ab[0] + bc[0]) / 2, (ab[1] + bc[1]) / 2)
        bcd = ((bc[0] + cd[0]) / 2, (bc[1] + cd[1]) / 2)
        mid = ((abc[0] + bcd[0]) / 2, (abc[1] + bcd[1]) / 2)
        stack.append((mid, bcd, cd, d, depth + 1))
        stack.append((a, ab, abc, mid, depth + 1))
    return out
