"""Tests for ROC analysis and NDCG."""

import math

import numpy as np
from django.test import SimpleTestCase

from baselines import DISTANCE, SIMILARITY, MethodScore
from corpusio import DISSIMILAR, SIMILAR
from metrics import LINEAR, ndcg_at_k, roc_auc, roc_points

S, D = SIMILAR, DISSIMILAR


def auc_oracle(values, gold):
    """Share of (similar, dissimilar) pairs ordered correctly."""
    wins = 0.0
    positives = [v for v, g in zip(values, gold) if g == S]
    negatives = [v for v, g in zip(values, gold) if g == D]
    for p in positives:
        for n in negatives:
            wins += 1.0 if p > n else 0.5 if p == n else 0.0
    return wins / (len(positives) * len(negatives))


def ndcg_oracle(gains, k):
    def dcg(items):
        return sum((2 ** g - 1) / math.log2(i + 2)
                   for i, g in enumerate(items[:k]))

    ideal = dcg(sorted(gains, reverse=True))
    return dcg(gains) / ideal if ideal else 0.0


def random_labels(rng, n):
    gold = [S, D] + list(rng.choice([S, D], size=n - 2))
    return [gold[k] for k in rng.permutation(n)]


class RocAucTest(SimpleTestCase):
    """Test ``roc_auc``."""

    def test_perfect(self):
        """Test a perfect ranking."""
        self.assertEqual(roc_auc([0.9, 0.8, 0.1], [S, S, D]), 1.0)

    def test_flipped(self):
        """Test distances ranking dissimilar pairs first."""
        scores = [MethodScore(v, DISTANCE) for v in (0.9, 0.8, 0.1)]
        self.assertEqual(roc_auc(scores, [S, S, D]), 0.0)

    def test_ties(self):
        """Check that ties count one half."""
        self.assertEqual(roc_auc([0.3] * 4, [S, D, S, D]), 0.5)

    def test_orientation_complement(self):
        """Check that reversing the orientation complements the area."""
        rng = np.random.default_rng(1)
        for _ in range(100):
            n = rng.integers(2, 15)
            values = rng.integers(0, 5, size=n).astype(float)
            gold = random_labels(rng, n)
            total = (roc_auc([MethodScore(v, SIMILARITY) for v in values],
                             gold) +
                     roc_auc([MethodScore(v, DISTANCE) for v in values],
                             gold))
            self.assertAlmostEqual(total, 1.0, delta=1e-12)

    def test_single_class(self):
        """Check that both classes are needed."""
        with self.assertRaises(ValueError):
            roc_auc([0.1, 0.2], [S, S])

    def test_oracle(self):
        """Compare with counting every pair on random scores."""
        rng = np.random.default_rng(2)
        for _ in range(1000):
            n = rng.integers(2, 12)
            values = rng.integers(0, 6, size=n).astype(float)
            gold = random_labels(rng, n)
            self.assertAlmostEqual(roc_auc(values, gold),
                                   auc_oracle(values, gold), delta=1e-9)


class RocPointsTest(SimpleTestCase):
    """Test ``roc_points``."""

    def test_perfect(self):
        """Test the points of a perfect ranking."""
        points = roc_points([0.9, 0.8, 0.1], [S, S, D])
        self.assertEqual(points[0][:2], (0.0, 0.0))
        self.assertIn((0.0, 1.0, 0.8), points)
        self.assertEqual(points[-1][:2], (1.0, 1.0))

    def test_monotone(self):
        """Check that the curve never goes down."""
        rng = np.random.default_rng(3)
        values = rng.normal(size=20)
        points = roc_points(values, random_labels(rng, 20))
        self.assertEqual(len(points), 21)
        for before, after in zip(points, points[1:]):
            self.assertLessEqual(before[0], after[0])
            self.assertLessEqual(before[1], after[1])
            self.assertGreater(before[2], after[2])


class NdcgTest(SimpleTestCase):
    """Test ``ndcg_at_k``."""

    def test_ideal(self):
        """Test gains in decreasing order."""
        for k in (1, 2, 5, 10):
            self.assertEqual(ndcg_at_k([3, 2, 2, 1, 0], k), 1.0)

    def test_all_zero(self):
        """Test gains all equal to zero."""
        self.assertEqual(ndcg_at_k([0, 0, 0], 5), 0.0)

    def test_empty(self):
        """Test an empty ranking."""
        self.assertEqual(ndcg_at_k([], 5), 0.0)

    def test_hand_value(self):
        """Test a hand computed value."""
        self.assertAlmostEqual(ndcg_at_k([1, 2], 2), 0.7967, places=4)

    def test_linear(self):
        """Test the linear gain."""
        expected = ((1 + 2 / math.log2(3)) / (2 + 1 / math.log2(3)))
        self.assertAlmostEqual(ndcg_at_k([1, 2], 2, gain=LINEAR), expected)

    def test_unknown_gain(self):
        """Check that unknown gains are rejected."""
        with self.assertRaises(ValueError):
            ndcg_at_k([1, 0], 2, gain='quadratic')

    def test_equal_gain_ties(self):
        """Check that swapping equal gains changes nothing."""
        items = [('a', 2), ('b', 1), ('c', 2), ('d', 0), ('e', 1)]
        reordered = [items[2], items[4], items[0], items[3], items[1]]
        self.assertEqual(ndcg_at_k([g for _, g in items], 4),
                         ndcg_at_k([g for _, g in reordered], 4))

    def test_inversion_below_one(self):
        """Check that an inversion scores below one."""
        self.assertEqual(ndcg_at_k([2, 2, 1, 0], 3), 1.0)
        self.assertLess(ndcg_at_k([2, 1, 2, 0], 3), 1.0)

    def test_oracle(self):
        """Compare with a direct computation on random gains."""
        rng = np.random.default_rng(4)
        for _ in range(1000):
            gains = list(rng.integers(0, 4, size=rng.integers(1, 12)))
            k = int(rng.integers(1, 12))
            value = ndcg_at_k(gains, k)
            self.assertAlmostEqual(value, ndcg_oracle(gains, k), delta=1e-9)
            self.assertGreaterEqual(value, 0.0)
            self.assertLessEqual(value, 1.0 + 1e-12)
