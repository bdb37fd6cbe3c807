"""Dimensionality measures t2, t3, t4: feature count versus dataset size."""
from __future__ import annotations

from ..dataset import Dataset
from ..numerics import VARIANCE_THRESHOLD, PcaSpectrum, components_for, pca_spectrum


def t2(d: Dataset) -> float:
    """Features per instance, m/n; exceeds 1 for wide datasets."""
    return d.n_features / d.n_samples


def t3(d: Dataset, spectrum: PcaSpectrum | None = None) -> float:
    """Components covering 95% of the variance, per instance."""
    return _components(d, spectrum) / d.n_samples


def t4(d: Dataset, spectrum: PcaSpectrum | None = None) -> float:
    """Components covering 95% of the variance, per original feature."""
    return _components(d, spectrum) / d.n_features


def _components(d: Dataset, spectrum: PcaSpectrum | None) -> int:
    if spectrum is None:
        spectrum = pca_spectrum(d)
    return components_for(spectrum, VARIANCE_THRESHOLD)
