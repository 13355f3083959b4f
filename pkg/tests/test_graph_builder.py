"""Element-graph policy tests."""

import pytest

from circleproxy import Circle, ElementGraph, Point2, build_graph


def C(x, y, r):
    return Circle(Point2(x, y), r)


CHAIN = [C(0, 0, 1), C(2, 0, 1), C(4, 0, 1)]


class TestBuildGraph:
    def test_complete_four_balls(self):
        balls = [C(i, 0, 0.1) for i in range(4)]
        g = build_graph(balls, "complete")
        assert len(g.edges) == 6

    def test_complete_edge_count_formula(self):
        for n in (1, 2, 5, 9):
            balls = [C(i * 10, 0, 0.1) for i in range(n)]
            g = build_graph(balls, "complete")
            assert len(g.edges) == n * (n - 1) // 2

    def test_touching_chain(self):
        g = build_graph(CHAIN, "touching")
        assert g.edges == frozenset({(0, 1), (1, 2)})

    def test_touching_connected_repairs(self):
        balls = [C(0, 0, 1), C(10, 0, 1)]
        g = build_graph(balls, "touching-connected")
        assert g.edges == frozenset({(0, 1)})

    def test_touching_subset_of_connected(self):
        balls = [C(0, 0, 1), C(2, 0, 1), C(10, 0, 1), C(12, 0, 1)]
        touching = build_graph(balls, "touching").edges
        connected = build_graph(balls, "touching-connected")
        assert touching <= connected.edges
        assert connected.component_count() == 1

    def test_reorder_invariance(self):
        balls = [C(0, 0, 1), C(2, 0, 1), C(7, 3, 0.5), C(2.5, 1.5, 0.8)]
        g1 = build_graph(balls, "touching")
        perm = [2, 0, 3, 1]
        g2 = build_graph([balls[i] for i in perm], "touching")
        relabeled = frozenset(
            (min(perm.index(i), perm.index(j)), max(perm.index(i), perm.index(j)))
            for i, j in g1.edges
        )
        assert g2.edges == relabeled

    def test_unknown_policy(self):
        with pytest.raises(ValueError):
            build_graph(CHAIN, "star")

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            build_graph([], "complete")


class TestElementGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            ElementGraph(3, frozenset({(1, 1)}))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            ElementGraph(2, frozenset({(0, 2)}))

    def test_component_count(self):
        g = ElementGraph(4, frozenset({(0, 1), (2, 3)}))
        assert g.component_count() == 2
