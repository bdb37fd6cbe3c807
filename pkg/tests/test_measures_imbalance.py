"""Class imbalance measures c1 and c2."""
import math

import numpy as np
import pytest

from datacomplexity import build_dataset, c1, c2


def counts_dataset(n0, n1):
    n = n0 + n1
    X = np.arange(n, dtype=float).reshape(-1, 1)
    return build_dataset(X, [0] * n0 + [1] * n1)


def entropy_oracle(n0, n1):
    n = n0 + n1
    p0, p1 = n0 / n, n1 / n
    return -(p0 * math.log2(p0) + p1 * math.log2(p1))


class TestC1:
    def test_balanced_is_zero(self):
        assert c1(counts_dataset(20, 20)) == pytest.approx(0.0, abs=1e-12)

    def test_ninety_ten(self):
        assert c1(counts_dataset(90, 10)) == pytest.approx(
            1.0 - entropy_oracle(90, 10)
        )
        assert c1(counts_dataset(90, 10)) == pytest.approx(0.531, abs=5e-4)

    def test_wdbc(self, wdbc):
        assert c1(wdbc) == pytest.approx(0.047, abs=0.001)


class TestC2:
    def test_balanced_is_zero(self):
        assert c2(counts_dataset(15, 15)) == pytest.approx(0.0, abs=1e-12)

    def test_ninety_ten(self):
        ir = 0.5 * (90 / 10 + 10 / 90)
        assert c2(counts_dataset(90, 10)) == pytest.approx(1.0 - 1.0 / ir)
        assert c2(counts_dataset(90, 10)) == pytest.approx(0.780, abs=5e-4)

    def test_wdbc(self, wdbc):
        assert c2(wdbc) == pytest.approx(0.122, abs=0.001)


class TestInvariants:
    def test_feature_transformations_ignored(self):
        a = counts_dataset(12, 30)
        b = build_dataset(a.features * 100.0 - 7.0, a.labels)
        assert c1(a) == c1(b)
        assert c2(a) == c2(b)

    def test_strictly_increasing_with_imbalance(self):
        n = 60
        c1_values, c2_values = [], []
        for n0 in (30, 24, 18, 12, 6):
            d = counts_dataset(n0, n - n0)
            c1_values.append(c1(d))
            c2_values.append(c2(d))
        assert all(b > a for a, b in zip(c1_values, c1_values[1:]))
        assert all(b > a for a, b in zip(c2_values, c2_values[1:]))

    def test_half_open_unit_interval(self):
        for n0, n1 in [(1, 59), (5, 10), (33, 44), (2, 2)]:
            d = counts_dataset(n0, n1)
            assert 0.0 <= c1(d) < 1.0
            assert 0.0 <= c2(d) < 1.0
