"""Validated binary-classification dataset model and built-in reference datasets.

Every measure in this package reads a :class:`Dataset`: an immutable numeric
feature matrix plus a label vector already mapped to {0, 1}. Construction via
:func:`build_dataset` performs all validation, so downstream code can assume
finite values and exactly two classes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from importlib import resources

import numpy as np

from .errors import (
    EmptyDatasetError,
    NonBinaryLabelsError,
    NonFiniteFeatureError,
    ShapeMismatchError,
    UnknownFixtureError,
)

FIXTURE_NAMES = ("SEP4", "XOR4", "DUP4", "WDBC")


@dataclass(frozen=True)
class ClassSplit:
    """Index partition of a dataset by class, with counts and priors."""

    indices_class0: np.ndarray
    indices_class1: np.ndarray

    @property
    def counts(self) -> tuple[int, int]:
        return len(self.indices_class0), len(self.indices_class1)

    @property
    def priors(self) -> tuple[float, float]:
        n0, n1 = self.counts
        n = n0 + n1
        return n0 / n, n1 / n


@dataclass(frozen=True)
class Dataset:
    """Immutable n x m feature matrix with binary labels in {0, 1}.

    ``class_names`` holds the two original label values in sorted order;
    index into it with a mapped label to recover the raw value.
    """

    features: np.ndarray
    labels: np.ndarray
    class_names: tuple = (0, 1)

    @property
    def n_samples(self) -> int:
        return self.features.shape[0]

    @property
    def n_features(self) -> int:
        return self.features.shape[1]

    @cached_property
    def split(self) -> ClassSplit:
        return ClassSplit(
            indices_class0=np.flatnonzero(self.labels == 0),
            indices_class1=np.flatnonzero(self.labels == 1),
        )

    def class_rows(self, c: int) -> np.ndarray:
        idx = self.split.indices_class0 if c == 0 else self.split.indices_class1
        return self.features[idx]


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


def build_dataset(raw_features, raw_labels) -> Dataset:
    """Validate raw arrays and map the two label values to {0, 1}.

    Labels of any scalar or string type are accepted; the two distinct values
    are sorted and the smaller becomes class 0. Features must be finite reals.
    """
    X = np.asarray(raw_features, dtype=float)
    if X.ndim != 2:
        raise ShapeMismatchError(f"features must be 2-D, got ndim={X.ndim}")
    n, m = X.shape
    # numpy scalars become plain Python values so class_names serialize cleanly
    labels = [v.item() if isinstance(v, np.generic) else v for v in raw_labels]
    if len(labels) != n:
        raise ShapeMismatchError(
            f"{n} feature rows but {len(labels)} labels"
        )
    if n < 2 or m < 1:
        raise EmptyDatasetError(f"need n >= 2 and m >= 1, got n={n}, m={m}")
    if not np.isfinite(X).all():
        bad = np.argwhere(~np.isfinite(X))[0]
        raise NonFiniteFeatureError(
            f"non-finite feature value at row {bad[0]}, column {bad[1]}"
        )
    distinct = sorted(set(labels))
    if len(distinct) != 2:
        raise NonBinaryLabelsError(
            f"expected exactly 2 classes, found {len(distinct)}"
        )
    mapping = {distinct[0]: 0, distinct[1]: 1}
    y = np.fromiter((mapping[v] for v in labels), dtype=np.int64, count=n)
    return Dataset(
        features=_freeze(X),
        labels=_freeze(y),
        class_names=tuple(distinct),
    )


def _load_wdbc() -> Dataset:
    # 569x30 breast-cancer table bundled with the package; labels 0/1 in the
    # last column (0 = malignant, 212 rows; 1 = benign, 357 rows).
    import csv

    ref = resources.files("datacomplexity").joinpath("data/wdbc.csv")
    with ref.open("r", encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    body = rows[1:]
    X = [[float(v) for v in row[:-1]] for row in body]
    y = [int(row[-1]) for row in body]
    return build_dataset(X, y)


def fixture(name: str) -> Dataset:
    """Return one of the built-in reference datasets.

    SEP4  two linearly separable point pairs, one per class.
    XOR4  the four-point parity problem, not linearly separable.
    DUP4  both classes occupy the identical two points, total overlap.
    WDBC  the 569x30 Wisconsin breast-cancer table.
    """
    if name == "SEP4":
        return build_dataset(
            [[0.0, 0.0], [0.0, 1.0], [10.0, 0.0], [10.0, 1.0]], [0, 0, 1, 1]
        )
    if name == "XOR4":
        return build_dataset(
            [[0.0, 0.0], [1.0, 1.0], [0.0, 1.0], [1.0, 0.0]], [0, 0, 1, 1]
        )
    if name == "DUP4":
        return build_dataset(
            [[0.0, 0.0], [1.0, 1.0], [0.0, 0.0], [1.0, 1.0]], [0, 0, 1, 1]
        )
    if name == "WDBC":
        return _load_wdbc()
    raise UnknownFixtureError(
        f"unknown fixture {name!r}, expected one of {FIXTURE_NAMES}"
    )
