"""Network measures density, cls_coef, hubs over the epsilon similarity graph.

Instances are vertices; an undirected edge joins two same-class instances
whose Gower distance falls below 0.15. Because only same-class edges survive,
the graph is assembled one class at a time with Gower ranges taken from that
class's own rows; the per-class distance never undercuts the global one, so
every edge also satisfies the global-Gower threshold.

Each statistic is complemented so that dense, well-clustered within-class
graphs (easy problems) score near 0.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..dataset import Dataset
from ..geometry import gower_from_rows

EPSILON = 0.15


@dataclass(frozen=True)
class EpsilonGraph:
    """Boolean adjacency over instances; symmetric, no self loops."""

    adjacency: np.ndarray

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)


def build_epsilon_graph(d: Dataset) -> EpsilonGraph:
    """Connect same-class pairs with class-normalized Gower distance < 0.15."""
    n = d.n_samples
    adj = np.zeros((n, n), dtype=bool)
    split = d.split
    for idx in (split.indices_class0, split.indices_class1):
        if len(idx) < 2:
            continue
        sub = gower_from_rows(d.features[idx]) < EPSILON
        np.fill_diagonal(sub, False)
        adj[np.ix_(idx, idx)] = sub
    return EpsilonGraph(adjacency=adj)


def density(g: EpsilonGraph) -> float:
    """One minus the fraction of possible edges present."""
    n = g.n
    return 1.0 - 2.0 * g.edge_count / (n * (n - 1))


def cls_coef(g: EpsilonGraph) -> float:
    """One minus the mean local clustering coefficient.

    A vertex's coefficient is the edge density among its neighbors; vertices
    with fewer than two neighbors contribute 0.
    """
    A = g.adjacency
    n = g.n
    total = 0.0
    for i in range(n):
        nbrs = np.flatnonzero(A[i])
        k = len(nbrs)
        if k < 2:
            continue
        links = int(A[np.ix_(nbrs, nbrs)].sum())  # counts each edge twice
        total += links / (k * (k - 1))
    return 1.0 - total / n


def hubs(g: EpsilonGraph) -> float:
    """One minus the mean connectivity-weighted hub score.

    Each vertex is scored by the summed degree of its neighbors, normalized
    by the largest score; an edgeless graph scores 1.
    """
    deg = g.degrees()
    raw = g.adjacency @ deg
    top = raw.max()
    if top == 0:
        return 1.0
    return float(1.0 - (raw / top).mean())
