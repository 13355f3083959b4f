"""Element-graph construction over sample circles.

Three policies: ``complete`` connects every pair (rigid shapes),
``touching`` connects overlapping/adjoining balls, and
``touching-connected`` additionally repairs a disconnected touching
graph with minimum-spanning-tree edges over center distances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .geom_core import Circle

__all__ = ["ElementGraph", "build_graph", "GRAPH_POLICIES"]

GRAPH_POLICIES = ("complete", "touching", "touching-connected")


@dataclass(frozen=True)
class ElementGraph:
    node_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, j in self.edges:
            if not (0 <= i < j < self.node_count):
                raise ValueError(f"edge ({i}, {j}) out of range or not ordered")

    def component_count(self) -> int:
        parent = list(range(self.node_count))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i, j in self.edges:
            parent[find(i)] = find(j)
        return len({find(i) for i in range(self.node_count)})


def _touching_edges(balls: Sequence[Circle], eps: float) -> set[tuple[int, int]]:
    edges = set()
    for i in range(len(balls)):
        for j in range(i + 1, len(balls)):
            d = math.hypot(
                balls[i].center.x - balls[j].center.x,
                balls[i].center.y - balls[j].center.y,
            )
            if d <= (1.0 + eps) * (balls[i].radius + balls[j].radius):
                edges.add((i, j))
    return edges


def build_graph(balls: Sequence[Circle], policy: str, eps: float = 0.02) -> ElementGraph:
    """Connect sample balls into an element graph under the given policy."""
    n = len(balls)
    if n < 1:
        raise ValueError("build_graph needs at least one ball")
    if policy == "complete":
        edges = {(i, j) for i in range(n) for j in range(i + 1, n)}
    elif policy == "touching":
        edges = _touching_edges(balls, eps)
    elif policy == "touching-connected":
        edges = _touching_edges(balls, eps)
        edges |= _connectivity_repair(balls, edges)
    else:
        raise ValueError(f"unknown graph policy {policy!r}")
    return ElementGraph(node_count=n, edges=frozenset(edges))


def _connectivity_repair(
    balls: Sequence[Circle], edges: set[tuple[int, int]]
) -> set[tuple[int, int]]:
    """Kruskal pass over center distances, seeded with existing components."""
    n = len(balls)
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j in edges:
        parent[find(i)] = find(j)

    candidates = sorted(
        ((i, j) for i in range(n) for j in range(i + 1, n)),
        key=lambda e: (
            math.hypot(
                balls[e[0]].center.x - balls[e[1]].center.x,
                balls[e[0]].center.y - balls[e[1]].center.y,
            ),
            e,
        ),
    )
    added = set()
    for i, j in candidates:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            added.add((i, j))
    return added
