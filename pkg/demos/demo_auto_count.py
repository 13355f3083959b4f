"""Choosing the number of samples automatically.

For every candidate count in a range, the SEC clustering is scored on
four measures: mutual overlap, area outside the shape, adjacency
deviation from a clean chain, and asymmetric coverage. The measures are
band-normalized (divided by their mean across the scan) so a weighted
sum compares them fairly, and the count with the minimum total wins.

Run:  python demo_auto_count.py
Writes SVGs to demos/output/.
"""

import json
from pathlib import Path

from circleproxy import Config, Weights, render_svg, run

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# A dumbbell: two blobs joined by a thin bar. Good samplings put at
# least one ball on each blob, so the scan should avoid tiny counts.
DUMBBELL = json.dumps(
    {"loops": [{"hole": False, "points": [
        [0, 0], [1.8, 0], [1.8, 0.4], [3.2, 0.4], [3.2, 0], [5, 0],
        [5, 1.6], [3.2, 1.6], [3.2, 1.2], [1.8, 1.2], [1.8, 1.6], [0, 1.6],
    ]}]}
)

config = Config(
    method="auto",
    n_min=2,            # a single ball can never deform; start at two
    n_max=8,
    r_min=0.3,
    weights=Weights(overlap=1, exterior=1, adjacency=2, asymmetry=1),
    boundary_count=250,
    interior_count=120,
)
result = run(config, DUMBBELL, "polygon-json")

print("count  overlap exterior adjacency asymmetry | total")
for row in result.breakdown:
    m = row.raw
    marker = " <- chosen" if row.n == len(result.samples.balls) else ""
    print(
        f"{row.n:5d}  {m.overlap:7.3f} {m.exterior:8.3f} {m.adjacency:9.3f} "
        f"{m.asymmetry:9.3f} | {row.total:6.3f}{marker}"
    )

out = OUT / "auto_dumbbell.svg"
out.write_text(render_svg(result, result.shape))
print(f"\nchose {len(result.samples.balls)} balls -> {out}")

# Shapes smaller than one minimum-radius sample skip the scan entirely
# and get a single tight-fitting circle.
TINY = json.dumps(
    {"loops": [{"hole": False, "points": [[0, 0], [0.5, 0], [0.5, 0.5], [0, 0.5]]}]}
)
tiny = run(Config(method="auto", r_min=1.0, boundary_count=64), TINY, "polygon-json")
ball = tiny.samples.balls[0]
print(f"tiny square: special case, one ball r={ball.radius:.3f} "
      f"at ({ball.center.x:.3f}, {ball.center.y:.3f})")
