"""Maximum weight bipartite matching."""

import numpy as np
from scipy.optimize import linear_sum_assignment

from tensorcore import NonFiniteError


def hungarian_max_matching(weights):
    """Return the optimal ``(row, col)`` pairs and their total weight.

    Every row or every column is matched, whichever are fewer.
    """
    weights = np.asarray(weights, dtype=np.float64)
    if not np.all(np.isfinite(weights)):
        raise NonFiniteError('hungarian_max_matching')
    if weights.size == 0:
        return set(), 0.0
    rows, cols = linear_sum_assignment(weights, maximize=True)
    matching = {(int(i), int(j)) for i, j in zip(rows, cols)}
    return matching, float(weights[rows, cols].sum())
