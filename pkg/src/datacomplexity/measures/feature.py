"""Feature-based measures f1, f1v, f2, f3, f4.

All five quantify how well individual features, or features acting together,
separate the two classes. Values lie in [0, 1], with 0 for an easy problem.
"""
from __future__ import annotations

import numpy as np

from ..dataset import Dataset

# keep genuinely tiny covariance eigenvalues (real data can be conditioned
# near 1e-12) while truncating exact zero-variance directions
_PINV_TOL = 1e-13


def f1(d: Dataset) -> float:
    """Complement of the maximum per-feature Fisher discriminant ratio.

    Per feature: (mu0 - mu1)^2 / (var0 + var1) with population variances.
    A feature with zero within-class variance but distinct means separates
    perfectly, giving an infinite ratio and f1 = 0; features with identical
    class distributions contribute 0.
    """
    X0, X1 = d.class_rows(0), d.class_rows(1)
    num = (X0.mean(axis=0) - X1.mean(axis=0)) ** 2
    den = X0.var(axis=0) + X1.var(axis=0)
    with np.errstate(divide="ignore", invalid="ignore"):
        r = np.where(den > 0, num / np.where(den > 0, den, 1.0),
                     np.where(num > 0, np.inf, 0.0))
    rmax = float(r.max())
    return 0.0 if np.isinf(rmax) else 1.0 / (1.0 + rmax)


def f1v(d: Dataset) -> float:
    """Complement of the directional Fisher criterion along w = W^+ (mu0 - mu1).

    W is the prior-weighted within-class covariance, B the between-class
    scatter. If the mean difference has a component in the null space of W
    the classes separate along a zero-variance direction and f1v = 0.
    """
    X0, X1 = d.class_rows(0), d.class_rows(1)
    n0, n1 = len(X0), len(X1)
    mu0, mu1 = X0.mean(axis=0), X1.mean(axis=0)
    delta = mu0 - mu1
    if not delta.any():
        return 1.0
    c0 = _population_cov(X0, mu0)
    c1 = _population_cov(X1, mu1)
    W = (n0 * c0 + n1 * c1) / (n0 + n1)
    Wp = np.linalg.pinv(W, rcond=_PINV_TOL, hermitian=True)
    # mean difference escaping range(W): perfectly separable direction
    residual = delta - W @ (Wp @ delta)
    if np.linalg.norm(residual) > 1e-8 * np.linalg.norm(delta):
        return 0.0
    w = Wp @ delta
    den = float(w @ W @ w)
    num = float(np.dot(w, delta) ** 2)  # w' B w with B = delta delta'
    if den <= 0:
        return 0.0 if num > 0 else 1.0
    return 1.0 / (1.0 + num / den)


def _population_cov(X: np.ndarray, mu: np.ndarray) -> np.ndarray:
    Xc = X - mu
    return (Xc.T @ Xc) / len(X)


def _class_bounds(X: np.ndarray, y: np.ndarray):
    """Per-feature overlap interval [lo, hi] of the two class ranges."""
    mn0 = X[y == 0].min(axis=0)
    mx0 = X[y == 0].max(axis=0)
    mn1 = X[y == 1].min(axis=0)
    mx1 = X[y == 1].max(axis=0)
    lo = np.maximum(mn0, mn1)
    hi = np.minimum(mx0, mx1)
    rng = np.maximum(mx0, mx1) - np.minimum(mn0, mn1)
    return lo, hi, rng


def f2(d: Dataset) -> float:
    """Product over features of the class-range overlap fraction.

    Zero-range (constant) features count as fully overlapping. One disjoint
    feature zeroes the product.
    """
    lo, hi, rng = _class_bounds(d.features, d.labels)
    overlap = np.maximum(0.0, hi - lo)
    ratio = np.where(rng > 0, overlap / np.where(rng > 0, rng, 1.0), 1.0)
    return float(np.prod(ratio))


def _overlap_count(col: np.ndarray, lo: float, hi: float, rng: float) -> int:
    if rng == 0:
        return len(col)  # constant feature: everything overlaps
    if hi < lo:
        return 0
    return int(np.count_nonzero((col >= lo) & (col <= hi)))


def f3(d: Dataset) -> float:
    """Overlap fraction of the single most discriminating feature."""
    X, y = d.features, d.labels
    lo, hi, rng = _class_bounds(X, y)
    counts = [
        _overlap_count(X[:, f], lo[f], hi[f], rng[f]) for f in range(d.n_features)
    ]
    return min(counts) / d.n_samples


def f4(d: Dataset) -> float:
    """Fraction of instances no feature sequence can separate.

    Greedy rounds: take the feature with the smallest overlap count on the
    surviving instances (ties to the lowest index), keep only instances inside
    its overlap interval recomputed on the survivors, and discard the feature.
    Stops when instances or features run out, or a class disappears.
    """
    X, y = d.features, d.labels
    n = d.n_samples
    rows = np.arange(n)
    remaining = list(range(d.n_features))
    while len(rows) and remaining:
        yr = y[rows]
        if not (yr == 0).any() or not (yr == 1).any():
            rows = rows[:0]  # lone class: every survivor is separable
            break
        Xr = X[rows]
        lo, hi, rng = _class_bounds(Xr, yr)
        best_f, best_inside = None, None
        best_count = None
        for f in remaining:
            col = Xr[:, f]
            if rng[f] == 0:
                inside = np.ones(len(rows), dtype=bool)
            elif hi[f] < lo[f]:
                inside = np.zeros(len(rows), dtype=bool)
            else:
                inside = (col >= lo[f]) & (col <= hi[f])
            count = int(inside.sum())
            if best_count is None or count < best_count:
                best_f, best_count, best_inside = f, count, inside
        rows = rows[best_inside]
        remaining.remove(best_f)
    return len(rows) / n
