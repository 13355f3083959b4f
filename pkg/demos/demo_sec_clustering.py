"""Covering shapes with k-means smallest enclosing circles.

The SEC method clusters a point sampling of the shape (boundary plus
interior) and replaces each cluster by its smallest enclosing circle
instead of a centroid. Few circles cover the whole shape, which suits
rigid elements. Initialization picks evenly spaced points from the
(y, x)-sorted point set, so repeated runs are identical.

Run:  python demo_sec_clustering.py
Writes SVGs to demos/output/.
"""

import json
from pathlib import Path

from circleproxy import (
    kmeans_sec,
    parse_shape,
    sample_boundary,
    sample_interior,
    Config,
    render_svg,
    run,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# An L-shaped bracket, as polygon-json.
BRACKET = json.dumps(
    {"loops": [{"hole": False,
                "points": [[0, 0], [3, 0], [3, 1], [1, 1], [1, 3], [0, 3]]}]}
)

shape = parse_shape(BRACKET, "polygon-json")
points = sample_boundary(shape, 200) + sample_interior(shape, 100)
print(f"bracket: area {shape.area:.2f}, clustering {len(points)} points")

# The ball count is the quality/simplicity dial. Watch coverage tighten.
for b in (1, 2, 4, 8):
    state = kmeans_sec(points, b)
    radii = ", ".join(f"{ball.radius:.2f}" for ball in state.balls)
    print(f"B={b}: converged={state.converged} after {state.iteration} "
          f"iterations, radii [{radii}]")

# Same thing through the pipeline driver, which also builds the graph
# and the figure-style SVG (gray shape, yellow circles, blue edges).
for b in (2, 8):
    result = run(
        Config(method="sec", n_max=b, boundary_count=200, interior_count=100,
               graph_policy="touching"),
        BRACKET,
        "polygon-json",
    )
    out = OUT / f"sec_bracket_b{b}.svg"
    out.write_text(render_svg(result, result.shape))
    print(f"B={b}: {len(result.samples.balls)} balls, "
          f"{len(result.graph.edges)} touching edges -> {out}")
