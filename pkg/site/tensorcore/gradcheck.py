"""Central finite-difference checks of tape gradients."""

import numpy as np

from tensorcore.tensor import backward, no_grad


def numerical_gradient(func, param, h=1e-4):
    """Estimate d func() / d param by central differences."""
    grad = np.zeros_like(param.value)
    values = param.value
    with no_grad():
        for index in np.ndindex(values.shape):
            saved = values[index]
            values[index] = saved + h
            plus = func().item()
            values[index] = saved - h
            minus = func().item()
            values[index] = saved
            grad[index] = (plus - minus) / (2.0 * h)
    return grad


def relative_error(analytic, numeric, floor=1e-3):
    """Largest elementwise ``|a - n| / max(|a|, |n|, floor)``.

    The floor turns the measure into an absolute error for gradients whose
    magnitude is below it.
    """
    scale = np.maximum(np.maximum(np.abs(analytic), np.abs(numeric)), floor)
    if analytic.size == 0:
        return 0.0
    return float(np.max(np.abs(analytic - numeric) / scale))


def check_gradients(func, params, h=1e-4):
    """Return the largest relative error over ``params``.

    ``func`` rebuilds the scalar loss from the current parameter values
    each time it is called.
    """
    analytic = backward(func())
    worst = 0.0
    for param in params:
        expected = analytic.get(param, np.zeros_like(param.value))
        numeric = numerical_gradient(func, param, h)
        worst = max(worst, relative_error(expected, numeric))
    return worst
