"""Epsilon graph construction and the three complemented network statistics."""
import numpy as np
import pytest

from datacomplexity import (
    EpsilonGraph,
    build_dataset,
    build_epsilon_graph,
    cls_coef,
    density,
    gower_matrix,
    hubs,
)
from conftest import random_dataset


def graph_of(adjacency) -> EpsilonGraph:
    return EpsilonGraph(adjacency=np.asarray(adjacency, dtype=bool))


def complete_graph(n) -> EpsilonGraph:
    adj = np.ones((n, n), dtype=bool)
    np.fill_diagonal(adj, False)
    return graph_of(adj)


def edgeless_graph(n) -> EpsilonGraph:
    return graph_of(np.zeros((n, n), dtype=bool))


class TestBuildEpsilonGraph:
    def test_coincident_same_class_pair_connected(self):
        d = build_dataset([[1.0, 2.0], [1.0, 2.0], [9.0, 9.0], [8.0, 8.0]], [0, 0, 1, 1])
        g = build_epsilon_graph(d)
        assert g.adjacency[0, 1] and g.adjacency[1, 0]

    def test_sep4_has_no_edges(self, sep4):
        # within each class the only pair differs by a full feature range
        assert build_epsilon_graph(sep4).edge_count == 0

    def test_cross_class_never_connected(self):
        rng = np.random.default_rng(13)
        for _ in range(10):
            d = random_dataset(rng, n_max=25)
            g = build_epsilon_graph(d)
            y = d.labels
            ii, jj = np.nonzero(g.adjacency)
            assert np.all(y[ii] == y[jj])

    def test_graph_invariants(self):
        rng = np.random.default_rng(14)
        for _ in range(10):
            d = random_dataset(rng, n_max=25)
            g = build_epsilon_graph(d)
            A = g.adjacency
            assert np.array_equal(A, A.T)
            assert not A.diagonal().any()
            # every edge also clears the global-range Gower threshold
            G = gower_matrix(d).values
            ii, jj = np.nonzero(A)
            if len(ii):
                assert G[ii, jj].max() < 0.15


class TestDensity:
    def test_complete(self):
        assert density(complete_graph(6)) == 0.0

    def test_edgeless(self):
        assert density(edgeless_graph(6)) == 1.0

    def test_exact_complement_identity(self):
        rng = np.random.default_rng(15)
        d = random_dataset(rng, n_max=30)
        g = build_epsilon_graph(d)
        n = g.n
        assert density(g) + 2 * g.edge_count / (n * (n - 1)) == 1.0


class TestClsCoef:
    def test_complete(self):
        assert cls_coef(complete_graph(5)) == 0.0

    def test_edgeless(self):
        assert cls_coef(edgeless_graph(5)) == 1.0

    def test_triangle_plus_pendant(self):
        # vertices 0,1,2 form a triangle; vertex 3 hangs off vertex 0
        adj = np.zeros((4, 4), dtype=bool)
        for i, j in [(0, 1), (0, 2), (1, 2), (0, 3)]:
            adj[i, j] = adj[j, i] = True
        # cc = [1/3, 1, 1, 0] per vertex
        assert cls_coef(graph_of(adj)) == pytest.approx(1.0 - (1 / 3 + 1 + 1 + 0) / 4)


class TestHubs:
    def test_complete_equal_scores(self):
        assert hubs(complete_graph(7)) == 0.0

    def test_edgeless(self):
        assert hubs(edgeless_graph(7)) == 1.0

    def test_star_center_dominates(self):
        adj = np.zeros((4, 4), dtype=bool)
        for leaf in (1, 2, 3):
            adj[0, leaf] = adj[leaf, 0] = True
        # raw scores: center 3, leaves 3 each -> all normalized to 1
        assert hubs(graph_of(adj)) == 0.0

    def test_range(self):
        rng = np.random.default_rng(16)
        for _ in range(10):
            g = build_epsilon_graph(random_dataset(rng, n_max=25))
            assert 0.0 <= hubs(g) <= 1.0
            assert 0.0 <= cls_coef(g) <= 1.0
            assert 0.0 <= density(g) <= 1.0
