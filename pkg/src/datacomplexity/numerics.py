"""Learned kernels behind the measures: a linear hinge-loss classifier and PCA."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dataset import Dataset
from .errors import SingleClassError, ZeroWeightVectorError

REGULARIZATION = 1e-4
EPOCHS = 1000
VARIANCE_THRESHOLD = 0.95


@dataclass(frozen=True)
class LinearModel:
    """Hyperplane w . x + b = 0 separating class 1 (positive side) from class 0."""

    weights: np.ndarray
    bias: float

    def decision_values(self, X: np.ndarray) -> np.ndarray:
        return X @ self.weights + self.bias

    def predict(self, X: np.ndarray) -> np.ndarray:
        return (self.decision_values(X) >= 0).astype(np.int64)

    def error_rate(self, X: np.ndarray, y: np.ndarray) -> float:
        return float((self.predict(X) != y).mean())


@dataclass(frozen=True)
class PcaSpectrum:
    """Descending covariance eigenvalues with cumulative explained variance."""

    eigenvalues: np.ndarray
    cumulative_ratio: np.ndarray


def train_linear(d: Dataset, seed: int) -> LinearModel:
    """Fit a soft-margin linear classifier by seeded stochastic subgradient descent.

    Minimizes (lam/2)|w|^2 + mean hinge over 1000 epochs of mini-batch Pegasos
    updates with step 1/(lam*t) and classes encoded as +-1; weights start at
    seeded uniform(-0.01, 0.01), the bias is unregularized. The returned model
    is the epoch snapshot with the lowest training error, ties broken by the
    lower regularized objective, which keeps the result stable on separable
    data where late iterates oscillate.
    """
    split = d.split
    if min(split.counts) == 0:
        raise SingleClassError("training needs both classes present")
    X = d.features
    y = np.where(d.labels == 1, 1.0, -1.0)
    n, m = X.shape
    lam = REGULARIZATION
    rng = np.random.default_rng(seed)
    w = rng.uniform(-0.01, 0.01, m)
    b = 0.0
    batch = max(1, min(32, n // 4))

    def objective(w, b):
        margins = y * (X @ w + b)
        return 0.5 * lam * float(w @ w) + float(np.maximum(0.0, 1.0 - margins).mean())

    def error(w, b):
        pred = np.where(X @ w + b >= 0, 1.0, -1.0)
        return float((pred != y).mean())

    best_err, best_obj = error(w, b), objective(w, b)
    best_w, best_b = w.copy(), b
    t = 0
    for _ in range(EPOCHS):
        perm = rng.permutation(n)
        for start in range(0, n, batch):
            rows = perm[start : start + batch]
            t += 1
            eta = 1.0 / (lam * t)
            margins = y[rows] * (X[rows] @ w + b)
            viol = margins < 1.0
            if viol.any():
                gw = (y[rows][viol, None] * X[rows][viol]).sum(axis=0) / len(rows)
                gb = y[rows][viol].sum() / len(rows)
            else:
                gw, gb = 0.0, 0.0
            w = (1.0 - eta * lam) * w + eta * gw
            b = b + eta * gb
        err = error(w, b)
        if err < best_err:
            best_err, best_obj = err, objective(w, b)
            best_w, best_b = w.copy(), b
        elif err == best_err:
            obj = objective(w, b)
            if obj < best_obj:
                best_obj = obj
                best_w, best_b = w.copy(), b
    best_w.setflags(write=False)
    return LinearModel(weights=best_w, bias=float(best_b))


def decision_margin(model: LinearModel, x: np.ndarray) -> float:
    """Signed Euclidean distance from x to the model's hyperplane."""
    norm = float(np.linalg.norm(model.weights))
    if norm == 0.0:
        raise ZeroWeightVectorError("margin undefined for a zero weight vector")
    return float((model.weights @ x + model.bias) / norm)


def pca_spectrum(d: Dataset) -> PcaSpectrum:
    """Eigendecomposition of the sample covariance of mean-centered raw features.

    Covariance uses divisor n-1 over unscaled features; eigenvalues below the
    1e-10 noise floor are clamped to zero.
    """
    X = d.features
    Xc = X - X.mean(axis=0)
    cov = (Xc.T @ Xc) / (d.n_samples - 1)
    eig = np.linalg.eigvalsh(cov)[::-1]
    eig = np.maximum(eig, 0.0)  # PSD up to eigensolver noise
    total = eig.sum()
    if total > 0:
        cum = np.cumsum(eig) / total
    else:
        cum = np.ones_like(eig)
    cum[-1] = 1.0  # guard against rounding just below 1
    return PcaSpectrum(eigenvalues=eig, cumulative_ratio=cum)


def components_for(spectrum: PcaSpectrum, threshold: float) -> int:
    """Smallest component count whose cumulative variance ratio reaches threshold."""
    return int(np.searchsorted(spectrum.cumulative_ratio, threshold)) + 1
