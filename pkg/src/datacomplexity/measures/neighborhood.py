"""Neighborhood measures n1, n2, n3, n4, t1, lsc over Euclidean distances.

All six probe the local geometry of the class boundary. They share one
Euclidean distance matrix, which callers may pass in to avoid recomputation.
"""
from __future__ import annotations

import numpy as np

from ..dataset import Dataset
from ..errors import ClassTooSmallError
from ..geometry import (
    DistanceMatrix,
    euclidean_matrix,
    interpolate_same_class,
    minimum_spanning_tree,
)


def _matrix(d: Dataset, dm: DistanceMatrix | None) -> np.ndarray:
    return (dm if dm is not None else euclidean_matrix(d)).values


def _nn_split(D: np.ndarray, y: np.ndarray):
    """Per-instance distance to the nearest same-class and opposite-class point."""
    masked = D.copy()
    np.fill_diagonal(masked, np.inf)
    same = y[:, None] == y[None, :]
    intra = np.where(same, masked, np.inf).min(axis=1)
    extra = np.where(same, np.inf, masked).min(axis=1)
    return intra, extra


def n1(d: Dataset, dm: DistanceMatrix | None = None) -> float:
    """Fraction of MST edges that join opposite-class instances."""
    D = _matrix(d, dm)
    edges = minimum_spanning_tree(DistanceMatrix(values=D, metric="euclidean"))
    y = d.labels
    cross = sum(1 for i, j, _ in edges if y[i] != y[j])
    return cross / d.n_samples


def n2(d: Dataset, dm: DistanceMatrix | None = None) -> float:
    """Squashed ratio of nearest same-class to nearest opposite-class distance.

    The intra/extra ratio is averaged within each class and the two class
    means are averaged, so the minority class is not drowned out; the result
    is squashed to [0, 1] by r/(1+r). Coincident cross-class points force the
    maximum value 1.
    """
    if min(d.split.counts) < 2:
        raise ClassTooSmallError(
            f"n2 needs 2 instances per class, got counts {d.split.counts}"
        )
    D = _matrix(d, dm)
    y = d.labels
    intra, extra = _nn_split(D, y)
    if (extra == 0).any():
        return 1.0  # instance coincides with an enemy: boundary collapsed
    ratios = intra / extra
    r = 0.5 * (ratios[y == 0].mean() + ratios[y == 1].mean())
    return float(r / (1.0 + r))


def n3(d: Dataset, dm: DistanceMatrix | None = None) -> float:
    """Leave-one-out error rate of the 1-NN classifier, ties to the lowest index."""
    D = _matrix(d, dm).copy()
    np.fill_diagonal(D, np.inf)
    nn = D.argmin(axis=1)
    return float((d.labels[nn] != d.labels).mean())


def n4(d: Dataset, seed: int) -> float:
    """1-NN error on same-class interpolants, classifier fitted on the originals."""
    synth = interpolate_same_class(d, d.n_samples, seed)
    X, y = d.features, d.labels
    S = synth.features
    sq_x = np.einsum("ij,ij->i", X, X)
    sq_s = np.einsum("ij,ij->i", S, S)
    d2 = sq_s[:, None] + sq_x[None, :] - 2.0 * (S @ X.T)
    nn = d2.argmin(axis=1)
    return float((y[nn] != synth.labels).mean())


def _cover_radii(D: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Hypersphere radii that stop at the class boundary.

    Mutual nearest enemies split their distance evenly; otherwise a sphere
    extends to its nearest enemy minus that enemy's own radius. Enemy chains
    have non-increasing enemy distances, so the recursion bottoms out at a
    mutual pair (ties collapse to the mutual case).
    """
    n = len(D)
    enemy_dist = np.where(y[:, None] != y[None, :], D, np.inf)
    ne = enemy_dist.argmin(axis=1)
    de = enemy_dist.min(axis=1)
    radii = np.full(n, -1.0)

    def solve(i, trail):
        if radii[i] >= 0:
            return radii[i]
        e = int(ne[i])
        if int(ne[e]) == i or i in trail:
            radii[i] = de[i] / 2.0
        else:
            trail.add(i)
            radii[i] = de[i] - solve(e, trail)
        return radii[i]

    for i in range(n):
        solve(i, set())
    return radii


def t1(d: Dataset, dm: DistanceMatrix | None = None) -> float:
    """Fraction of boundary-limited hyperspheres that survive center absorption.

    Spheres are processed largest-radius first (ties to the lowest index); a
    sphere dies when its center lies strictly inside an already kept
    same-class sphere.
    """
    D = _matrix(d, dm)
    y = d.labels
    n = d.n_samples
    radii = _cover_radii(D, y)
    order = np.lexsort((np.arange(n), -radii))
    kept: list[int] = []
    for i in order:
        absorbed = any(y[j] == y[i] and D[i, j] < radii[j] for j in kept)
        if not absorbed:
            kept.append(int(i))
    return len(kept) / n


def lsc(d: Dataset, dm: DistanceMatrix | None = None) -> float:
    """Complement of the mean local-set cardinality over n.

    The local set of an instance holds every other instance strictly closer
    than its nearest enemy.
    """
    D = _matrix(d, dm)
    _, enemy = _nn_split(D, d.labels)
    n = d.n_samples
    # D[i,i] = 0 beats a positive enemy distance, subtract that self hit
    sizes = (D < enemy[:, None]).sum(axis=1) - (enemy > 0)
    return float(1.0 - sizes.sum() / n**2)
