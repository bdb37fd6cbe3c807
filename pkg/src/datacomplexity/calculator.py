"""Calculator facade: measure registry, fit, score, report and plot geometry.

The registry fixes the canonical measure order used everywhere a vector of
values appears (fit results, weights, reports, plots). Stochastic measures
receive ``seed XOR ordinal`` so one top-level seed reproduces the whole run
while keeping the individual streams decoupled.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .dataset import Dataset, build_dataset
from .errors import (
    MeasureEvaluationError,
    NotFittedError,
    UnknownMeasureError,
    WeightLengthMismatchError,
)
from .geometry import euclidean_matrix
from .measures import dimensionality, feature, imbalance, linearity, neighborhood
from .measures import network as network_measures
from .numerics import pca_spectrum

CATEGORIES = (
    "feature_based",
    "linearity",
    "neighborhood",
    "network",
    "dimensionality",
    "class_imbalance",
)

DEFAULT_COLORS = ("red", "orange", "yellow", "green", "teal", "blue")


class _Shared:
    """Fit-scoped cache so expensive intermediates are computed at most once."""

    def __init__(self, dataset: Dataset):
        self.dataset = dataset
        self._euclidean = None
        self._graph = None
        self._spectrum = None

    @property
    def euclidean(self):
        if self._euclidean is None:
            self._euclidean = euclidean_matrix(self.dataset)
        return self._euclidean

    @property
    def graph(self):
        if self._graph is None:
            self._graph = network_measures.build_epsilon_graph(self.dataset)
        return self._graph

    @property
    def spectrum(self):
        if self._spectrum is None:
            self._spectrum = pca_spectrum(self.dataset)
        return self._spectrum


@dataclass(frozen=True)
class MeasureDescriptor:
    """Registry entry: canonical id, category, determinism flag, evaluator."""

    id: str
    category: str
    deterministic: bool
    evaluate: Callable[[_Shared, int], float]


MEASURES: tuple[MeasureDescriptor, ...] = (
    MeasureDescriptor("f1", "feature_based", True, lambda s, _: feature.f1(s.dataset)),
    MeasureDescriptor("f1v", "feature_based", True, lambda s, _: feature.f1v(s.dataset)),
    MeasureDescriptor("f2", "feature_based", True, lambda s, _: feature.f2(s.dataset)),
    MeasureDescriptor("f3", "feature_based", True, lambda s, _: feature.f3(s.dataset)),
    MeasureDescriptor("f4", "feature_based", True, lambda s, _: feature.f4(s.dataset)),
    MeasureDescriptor("l1", "linearity", False, lambda s, seed: linearity.l1(s.dataset, seed)),
    MeasureDescriptor("l2", "linearity", False, lambda s, seed: linearity.l2(s.dataset, seed)),
    MeasureDescriptor("l3", "linearity", False, lambda s, seed: linearity.l3(s.dataset, seed)),
    MeasureDescriptor("n1", "neighborhood", True, lambda s, _: neighborhood.n1(s.dataset, s.euclidean)),
    MeasureDescriptor("n2", "neighborhood", True, lambda s, _: neighborhood.n2(s.dataset, s.euclidean)),
    MeasureDescriptor("n3", "neighborhood", True, lambda s, _: neighborhood.n3(s.dataset, s.euclidean)),
    MeasureDescriptor("n4", "neighborhood", False, lambda s, seed: neighborhood.n4(s.dataset, seed)),
    MeasureDescriptor("t1", "neighborhood", True, lambda s, _: neighborhood.t1(s.dataset, s.euclidean)),
    MeasureDescriptor("lsc", "neighborhood", True, lambda s, _: neighborhood.lsc(s.dataset, s.euclidean)),
    MeasureDescriptor("density", "network", True, lambda s, _: network_measures.density(s.graph)),
    MeasureDescriptor("clsCoef", "network", True, lambda s, _: network_measures.cls_coef(s.graph)),
    MeasureDescriptor("hubs", "network", True, lambda s, _: network_measures.hubs(s.graph)),
    MeasureDescriptor("t2", "dimensionality", True, lambda s, _: dimensionality.t2(s.dataset)),
    MeasureDescriptor("t3", "dimensionality", True, lambda s, _: dimensionality.t3(s.dataset, s.spectrum)),
    MeasureDescriptor("t4", "dimensionality", True, lambda s, _: dimensionality.t4(s.dataset, s.spectrum)),
    MeasureDescriptor("c1", "class_imbalance", True, lambda s, _: imbalance.c1(s.dataset)),
    MeasureDescriptor("c2", "class_imbalance", True, lambda s, _: imbalance.c2(s.dataset)),
)

CANONICAL_IDS = tuple(m.id for m in MEASURES)
_BY_ID = {m.id: (ordinal, m) for ordinal, m in enumerate(MEASURES)}


def canonical_selection(ids: Sequence[str] | None) -> tuple[str, ...]:
    """Resolve a user selection to canonical order, rejecting unknown ids."""
    if ids is None:
        return CANONICAL_IDS
    wanted = set()
    for mid in ids:
        if mid not in _BY_ID:
            raise UnknownMeasureError(
                f"unknown measure id {mid!r}; valid ids: {', '.join(CANONICAL_IDS)}"
            )
        wanted.add(mid)
    return tuple(mid for mid in CANONICAL_IDS if mid in wanted)


@dataclass(frozen=True)
class Wedge:
    """One measure wedge of the polar plot."""

    measure_id: str
    category: str
    color: str
    theta_start: float  # degrees, clockwise from 12 o'clock
    theta_end: float
    radius: float  # clamped to [0, 1]
    value: float


@dataclass(frozen=True)
class PolarPlotSpec:
    """Plot geometry: six fixed 60-degree sectors and one wedge per measure."""

    wedges: tuple[Wedge, ...]
    sectors: tuple[tuple[str, str, float, float], ...]  # (category, color, start, end)
    score_label: str


class ComplexityCalculator:
    """Computes a complexity vector for a binary classification dataset.

    Parameters
    ----------
    measures : optional sequence of measure ids, defaults to all 22.
    weights : optional positive weights, one per selected measure, used by
        :meth:`score` when no explicit weights are given there.
    seed : base seed for the stochastic measures (l1, l2, l3, n4).
    colors : six category colors for plotting.
    """

    def __init__(self, measures=None, weights=None, seed: int = 0, colors=None):
        self.measure_ids = canonical_selection(measures)
        self.weights = self._check_weights(weights)
        self.seed = int(seed)
        self.colors = tuple(colors) if colors is not None else DEFAULT_COLORS
        if len(self.colors) != len(CATEGORIES):
            raise ValueError(f"expected {len(CATEGORIES)} colors, got {len(self.colors)}")
        self._values: tuple[float, ...] | None = None
        self._dataset: Dataset | None = None

    def _check_weights(self, weights):
        if weights is None:
            return None
        weights = tuple(float(w) for w in weights)
        if len(weights) != len(self.measure_ids):
            raise WeightLengthMismatchError(
                f"{len(weights)} weights for {len(self.measure_ids)} measures"
            )
        if any(w <= 0 for w in weights):
            raise ValueError("weights must be positive")
        return weights

    # -- fitting ---------------------------------------------------------

    def fit(self, X, y=None) -> "ComplexityCalculator":
        """Evaluate every selected measure on a Dataset or on (X, y) arrays."""
        dataset = X if isinstance(X, Dataset) else build_dataset(X, y)
        shared = _Shared(dataset)
        values = []
        for mid in self.measure_ids:
            ordinal, desc = _BY_ID[mid]
            try:
                values.append(float(desc.evaluate(shared, self.seed ^ ordinal)))
            except Exception as exc:  # annotate with the offending measure
                raise MeasureEvaluationError(mid, exc) from exc
        self._values = tuple(values)
        self._dataset = dataset
        return self

    @property
    def complexity(self) -> list[float]:
        """Fitted measure values in canonical order."""
        self._require_fitted()
        return list(self._values)

    def _require_fitted(self):
        if self._values is None:
            raise NotFittedError("call fit() first")

    # -- aggregation -----------------------------------------------------

    def score(self, weights=None) -> float:
        """Weighted mean of the fitted values; uniform weights by default."""
        self._require_fitted()
        if weights is not None:
            weights = tuple(float(w) for w in weights)
            if len(weights) != len(self._values):
                raise WeightLengthMismatchError(
                    f"{len(weights)} weights for {len(self._values)} values"
                )
        else:
            weights = self.weights
        if weights is None:
            return float(np.mean(self._values))
        return float(np.average(self._values, weights=weights))

    def report(self) -> dict:
        """Dataset shape, class priors, unweighted score and per-measure values."""
        self._require_fitted()
        d = self._dataset
        return {
            "n_samples": d.n_samples,
            "n_features": d.n_features,
            "n_classes": 2,
            "classes": list(d.class_names),
            "prior_probability": list(d.split.priors),
            "score": float(np.mean(self._values)),
            "complexities": dict(zip(self.measure_ids, self._values)),
        }

    # -- plotting --------------------------------------------------------

    def plot_data(self) -> PolarPlotSpec:
        """Polar wedge layout: each category owns a fixed 60-degree sector.

        Selected measures split their category's sector evenly, so sparse
        categories are not visually dominated by dense ones. Radial extents
        are clamped to 1 (t2 and t3 may exceed it numerically).
        """
        self._require_fitted()
        sector_span = 360.0 / len(CATEGORIES)
        sectors = tuple(
            (cat, self.colors[k], k * sector_span, (k + 1) * sector_span)
            for k, cat in enumerate(CATEGORIES)
        )
        by_category: dict[str, list[tuple[str, float]]] = {c: [] for c in CATEGORIES}
        for mid, value in zip(self.measure_ids, self._values):
            by_category[_BY_ID[mid][1].category].append((mid, value))
        wedges = []
        for k, cat in enumerate(CATEGORIES):
            members = by_category[cat]
            if not members:
                continue
            span = sector_span / len(members)
            for j, (mid, value) in enumerate(members):
                start = k * sector_span + j * span
                wedges.append(
                    Wedge(
                        measure_id=mid,
                        category=cat,
                        color=self.colors[k],
                        theta_start=start,
                        theta_end=start + span,
                        radius=min(float(value), 1.0),
                        value=float(value),
                    )
                )
        return PolarPlotSpec(
            wedges=tuple(wedges),
            sectors=sectors,
            score_label=f"{self.score():.3f}",
        )
