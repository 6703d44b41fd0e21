"""Threshold-free and ranking metrics."""

import numpy as np
from scipy.stats import rankdata

from corpusio import SIMILAR

EXPONENTIAL = 'exponential'
LINEAR = 'linear'
GAINS = (EXPONENTIAL, LINEAR)


def _oriented(scores):
    """Accept ``MethodScore`` items or plain similarity values."""
    return np.array([getattr(s, 'oriented', s) for s in scores],
                    dtype=np.float64)


def _positives(gold):
    return np.array([label == SIMILAR for label in gold])


def roc_auc(scores, gold):
    """Area under the ROC curve of ``scores`` for the similar class.

    Computed with the rank statistic: the probability that a similar pair
    outscores a dissimilar one, ties counting one half.
    """
    values = _oriented(scores)
    positive = _positives(gold)
    n_pos, n_neg = positive.sum(), (~positive).sum()
    if not n_pos or not n_neg:
        raise ValueError('ROC analysis needs both classes')
    ranks = rankdata(values)
    return float((ranks[positive].sum() - n_pos * (n_pos + 1) / 2.0) /
                 (n_pos * n_neg))


def roc_points(scores, gold):
    """``(false positive rate, true positive rate, threshold)`` at every
    distinct score, from the strictest threshold down.

    Thresholds are given on the oriented scale.
    """
    values = _oriented(scores)
    positive = _positives(gold)
    n_pos, n_neg = positive.sum(), (~positive).sum()
    if not n_pos or not n_neg:
        raise ValueError('ROC analysis needs both classes')
    points = [(0.0, 0.0, float('inf'))]
    for threshold in np.unique(values)[::-1]:
        chosen = values >= threshold
        points.append((float((chosen & ~positive).sum() / n_neg),
                       float((chosen & positive).sum() / n_pos),
                       float(threshold)))
    return points


def dcg(gains, k, gain=EXPONENTIAL):
    gains = np.asarray(gains, dtype=np.float64)[:k]
    if gain == EXPONENTIAL:
        gains = np.power(2.0, gains) - 1.0
    elif gain != LINEAR:
        raise ValueError('Unknown gain: {0}'.format(gain))
    discounts = np.log2(np.arange(2, len(gains) + 2))
    return float(np.sum(gains / discounts))


def ndcg_at_k(gains, k, gain=EXPONENTIAL):
    """NDCG of the gains listed in ranked order, over the first ``k``.

    Lists shorter than ``k`` are scored as they are. A list without any
    relevant item scores 0.
    """
    ideal = dcg(sorted(gains, reverse=True), k, gain)
    if ideal == 0.0:
        return 0.0
    return dcg(gains, k, gain) / ideal
