"""Inter-annotator agreement."""

import numpy as np


def fleiss_kappa(ratings):
    """Fleiss' kappa of an ``items x categories`` matrix of rater counts.

    Every item must be rated by the same number of raters, at least two.
    """
    ratings = np.asarray(ratings, dtype=np.float64)
    if ratings.ndim != 2 or not ratings.size:
        raise ValueError('Ratings must be a non-empty items x categories '
                         'matrix')
    raters = ratings.sum(axis=1)
    if not np.all(raters == raters[0]):
        raise ValueError('Every item needs the same number of raters')
    n = raters[0]
    if n < 2:
        raise ValueError('Agreement needs at least two raters')
    items = ratings.shape[0]
    shares = ratings.sum(axis=0) / (items * n)
    agreement = ((ratings * (ratings - 1)).sum(axis=1) / (n * (n - 1)))
    observed = agreement.mean()
    expected = np.sum(shares ** 2)
    if expected == 1.0:
        return 1.0
    return float((observed - expected) / (1.0 - expected))
