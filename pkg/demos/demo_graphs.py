"""Connecting samples into element graphs.

Once a shape is reduced to circles, downstream tools need to know which
circles move together. Three policies: `complete` (every pair, fully
rigid), `touching` (only overlapping/adjoining circles, free skeletal
deformation), and `touching-connected` (touching plus minimum-spanning
repair edges so the graph is never split).

Run:  python demo_graphs.py
Writes SVGs to demos/output/.
"""

import json
from pathlib import Path

from circleproxy import Config, build_graph, render_svg, run

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# A wide U: the two prongs end far apart, which makes the difference
# between `touching` and `touching-connected` visible.
U_SHAPE = json.dumps(
    {"loops": [{"hole": False, "points": [
        [0, 0], [4, 0], [4, 3], [3, 3], [3, 1], [1, 1], [1, 3], [0, 3],
    ]}]}
)

base = Config(method="sec", n_max=6, boundary_count=200, interior_count=80)
result = run(base, U_SHAPE, "polygon-json")
balls = result.samples.balls
print(f"{len(balls)} SEC balls on the U shape")

for policy in ("complete", "touching", "touching-connected"):
    graph = build_graph(balls, policy, eps=0.02)
    print(f"{policy:19s} -> {len(graph.edges):2d} edges, "
          f"{graph.component_count()} component(s)")

# Render each policy end-to-end.
for policy in ("complete", "touching", "touching-connected"):
    cfg = Config(method="sec", n_max=6, boundary_count=200, interior_count=80,
                 graph_policy=policy)
    r = run(cfg, U_SHAPE, "polygon-json")
    out = OUT / f"graph_{policy}.svg"
    out.write_text(render_svg(r, r.shape))
    print(f"{policy}: wrote {out}")
