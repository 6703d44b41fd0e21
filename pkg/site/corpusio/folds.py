"""Cross-validation folds over labeled pairs."""

import numpy as np
from django.core.exceptions import ImproperlyConfigured

from corpusio.corpus import FoldAssignment


def kfold_split(pair_count, k, seed):
    """Shuffle the pair indices with ``seed`` and deal them to ``k`` folds.

    Fold sizes differ by at most one.
    """
    if k < 2:
        raise ImproperlyConfigured('run.k_folds must be at least 2')
    if pair_count < k:
        raise ImproperlyConfigured(
            'Cannot split {0} pairs into {1} folds'.format(pair_count, k))
    order = np.random.default_rng(seed).permutation(pair_count)
    folds = np.empty(pair_count, dtype=np.int64)
    folds[order] = np.arange(pair_count) % k
    return FoldAssignment(folds, k)
