"""Distance matrices, minimum spanning tree, nearest neighbors, interpolation.

Shared geometric machinery for the neighborhood, network and linearity
measures. Everything here is pure; randomness enters only through explicit
seed parameters.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dataset import Dataset
from .errors import ClassTooSmallError, EmptyCandidatesError


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric pairwise distance table with a metric tag."""

    values: np.ndarray
    metric: str  # "euclidean" or "gower"

    @property
    def n(self) -> int:
        return self.values.shape[0]


def euclidean_matrix(d: Dataset) -> DistanceMatrix:
    """All-pairs Euclidean distances over raw feature rows."""
    X = d.features
    sq = np.einsum("ij,ij->i", X, X)
    d2 = sq[:, None] + sq[None, :] - 2.0 * (X @ X.T)
    np.fill_diagonal(d2, 0.0)
    vals = np.sqrt(np.maximum(d2, 0.0))
    # the dot-product expansion is not exactly symmetric in floating point
    vals = 0.5 * (vals + vals.T)
    return DistanceMatrix(values=_freeze(vals), metric="euclidean")


def gower_matrix(d: Dataset) -> DistanceMatrix:
    """Range-normalized Manhattan distance averaged over non-constant features.

    Constant features carry no information and would divide by zero, so they
    are excluded from the average. All entries lie in [0, 1]; if every feature
    is constant the matrix is all zeros.
    """
    vals = gower_from_rows(d.features)
    return DistanceMatrix(values=_freeze(vals), metric="gower")


def gower_from_rows(X: np.ndarray) -> np.ndarray:
    n, _ = X.shape
    ranges = X.max(axis=0) - X.min(axis=0)
    active = np.flatnonzero(ranges > 0)
    out = np.zeros((n, n))
    for f in active:
        col = X[:, f]
        out += np.abs(col[:, None] - col[None, :]) / ranges[f]
    if len(active):
        out /= len(active)
    return out


def minimum_spanning_tree(dm: DistanceMatrix) -> list[tuple[int, int, float]]:
    """Kruskal MST with deterministic (weight, i, j) tie-breaking.

    Returns n-1 edges as (i, j, weight) with i < j. Among equal-weight
    candidates the lexicographically smallest pair wins, so the tree is
    reproducible across platforms.
    """
    D = dm.values
    n = D.shape[0]
    iu, ju = np.triu_indices(n, 1)
    w = D[iu, ju]
    order = np.lexsort((ju, iu, w))
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    edges = []
    for k in order:
        i, j = int(iu[k]), int(ju[k])
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            edges.append((i, j, float(w[k])))
            if len(edges) == n - 1:
                break
    return edges


def nearest_neighbor(dm: DistanceMatrix, i: int, candidates) -> tuple[int, float]:
    """Closest candidate to row i; ties go to the lowest index."""
    cand = np.asarray(sorted(candidates), dtype=int)
    if cand.size == 0:
        raise EmptyCandidatesError(f"no candidates for instance {i}")
    dists = dm.values[i, cand]
    k = int(np.argmin(dists))  # argmin returns the first minimum
    return int(cand[k]), float(dists[k])


def interpolate_same_class(d: Dataset, count: int, seed: int) -> Dataset:
    """Synthesize `count` points by interpolating random same-class pairs.

    Each synthetic point is t*a + (1-t)*b for distinct same-class parents a, b
    and t ~ U(0,1); its label is the parents' class. Classes are drawn in
    proportion to the priors. Identical seeds produce identical output.
    """
    split = d.split
    pools = (split.indices_class0, split.indices_class1)
    if min(split.counts) < 2:
        raise ClassTooSmallError(
            "interpolation needs at least 2 instances per class, "
            f"got counts {split.counts}"
        )
    rng = np.random.default_rng(seed)
    classes = rng.choice(2, size=count, p=split.priors)
    X = d.features
    synth = np.empty((count, d.n_features))
    for k in range(count):
        pool = pools[classes[k]]
        a = int(rng.integers(len(pool)))
        b = int(rng.integers(len(pool) - 1))
        if b >= a:
            b += 1
        t = rng.random()
        synth[k] = t * X[pool[a]] + (1.0 - t) * X[pool[b]]
    return Dataset(
        features=_freeze(synth),
        labels=_freeze(classes.astype(np.int64)),
        class_names=d.class_names,
    )


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a
