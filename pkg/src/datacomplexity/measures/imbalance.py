"""Class imbalance measures c1, c2. Both are 0 exactly when classes balance."""
from __future__ import annotations

import math

from ..dataset import Dataset


def c1(d: Dataset) -> float:
    """One minus the normalized entropy of the class priors."""
    p0, p1 = d.split.priors
    entropy = -(p0 * math.log2(p0) + p1 * math.log2(p1))
    return 1.0 - entropy


def c2(d: Dataset) -> float:
    """Imbalance-ratio complexity 1 - 1/IR with IR = ((c-1)/c) sum n_c/(n - n_c)."""
    n0, n1 = d.split.counts
    n = n0 + n1
    ir = 0.5 * (n0 / (n - n0) + n1 / (n - n1))
    return 1.0 - 1.0 / ir
