"""Sampling a glyph with medial-axis polar balls.

The medial-axis method inscribes circles: it extracts the Voronoi polar
balls of a dense boundary sampling and then greedily keeps balls in
decreasing radius, rejecting any candidate whose center comes closer
than `xi * (r + r')` to an already-kept ball. Small `xi` packs balls
densely along the skeleton; larger `xi` spreads them out.

Run:  python demo_medial_sampling.py
Writes SVGs to demos/output/.
"""

import math
from pathlib import Path

from circleproxy import (
    Config,
    compute_polar_balls,
    render_svg,
    run,
    select_touching_polar_balls,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# An "i"-like glyph: a round dot over a tapered stem, two disjoint
# outlines in one SVG path. The dot is four quarter-circle cubics.
K = 0.55228475  # cubic approximation factor for a quarter circle
GLYPH = (
    f"M0.5,4.2 "
    f"C0.5,{4.2 + 0.5 * K} {0.5 * K},4.7 0,4.7 "
    f"C{-0.5 * K},4.7 -0.5,{4.2 + 0.5 * K} -0.5,4.2 "
    f"C-0.5,{4.2 - 0.5 * K} {-0.5 * K},3.7 0,3.7 "
    f"C{0.5 * K},3.7 0.5,{4.2 - 0.5 * K} 0.5,4.2 "
    f"Z M-0.45,3.2 L0.45,3.2 L0.25,0 L-0.25,0 Z"
)

# First look at the raw polar balls: one per interior Voronoi vertex of
# 300 boundary samples. There are far too many to use directly.
result = run(Config(method="mat", xi=0.0, boundary_count=300), GLYPH, "svg-path")
shape = result.shape
balls = compute_polar_balls(shape, boundary_count=300)
print(f"glyph area {shape.area:.3f}, raw polar balls: {len(balls)}")
print(f"largest ball: r={balls[0].ball.radius:.3f} at "
      f"({balls[0].ball.center.x:.3f}, {balls[0].ball.center.y:.3f})")

# Sweep the spacing ratio. xi=0 keeps everything; growing xi thins the
# selection until only the dominant skeleton balls remain.
for xi in (0.0, 0.4, 0.8, 1.2):
    selected = select_touching_polar_balls(balls, xi)
    print(f"xi={xi:<4} -> {len(selected.balls):4d} balls kept")

# Render the xi=0.8 selection with a touching graph, the usual preset
# for a deformable glyph.
result = run(
    Config(method="mat", xi=0.8, boundary_count=300, graph_policy="touching-connected"),
    GLYPH,
    "svg-path",
)
svg_path = OUT / "medial_glyph.svg"
svg_path.write_text(render_svg(result, result.shape))
print(f"\nxi=0.8 selection: {len(result.samples.balls)} balls, "
      f"{len(result.graph.edges)} graph edges -> {svg_path}")

# Every retained pair honors the spacing contract.
kept = result.samples.balls
worst = min(
    math.hypot(a.center.x - b.center.x, a.center.y - b.center.y)
    - 0.8 * (a.radius + b.radius)
    for i, a in enumerate(kept)
    for b in kept[i + 1 :]
)
print(f"tightest spacing margin over all pairs: {worst:+.4f} (>= 0 expected)")
