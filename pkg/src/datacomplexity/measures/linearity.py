"""Linearity measures l1, l2, l3: how close the problem is to linearly separable.

Each call trains its own classifier, so the measures stay independent
functions of (dataset, seed). Identical seeds give identical values.
"""
from __future__ import annotations

import numpy as np

from ..dataset import Dataset
from ..geometry import interpolate_same_class
from ..numerics import LinearModel, train_linear


def l1(d: Dataset, seed: int) -> float:
    """Squashed mean distance of misclassified instances to the hyperplane.

    s = (1/n) * sum of |margin| over errors, reported as s/(1+s); 0 when the
    trained model separates the training set.
    """
    model = train_linear(d, seed)
    margins = _euclidean_margins(model, d.features)
    wrong = model.predict(d.features) != d.labels
    s = float(np.abs(margins[wrong]).sum()) / d.n_samples
    return s / (1.0 + s)


def l2(d: Dataset, seed: int) -> float:
    """Training error rate of the linear classifier."""
    model = train_linear(d, seed)
    return model.error_rate(d.features, d.labels)


def l3(d: Dataset, seed: int) -> float:
    """Error rate on same-class interpolants, one synthetic point per original.

    The interpolation stream is decoupled from the training stream by
    offsetting the seed.
    """
    model = train_linear(d, seed)
    synth = interpolate_same_class(d, d.n_samples, seed + 1)
    return model.error_rate(synth.features, synth.labels)


def _euclidean_margins(model: LinearModel, X: np.ndarray) -> np.ndarray:
    return model.decision_values(X) / np.linalg.norm(model.weights)
