"""L2-regularized logistic regression fitted by gradient descent."""

import logging
from dataclasses import dataclass

import numpy as np
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _
from scipy.special import expit, log_expit

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LrConfig(object):
    l2: float = 1e-3
    tolerance: float = 1e-6
    max_iterations: int = 5000


class LrModel(object):
    """Weights and bias of a fitted model."""

    def __init__(self, weights, bias, l2, trained=False):
        self.weights = np.asarray(weights, dtype=np.float64)
        self.bias = float(bias)
        self.l2 = l2
        self.trained = trained


def lr_loss(weights, bias, features, labels, l2):
    """Mean logistic loss plus ``l2 / 2 * |w|^2``, and its gradient."""
    logits = features @ weights + bias
    loss = -np.mean(labels * log_expit(logits) +
                    (1.0 - labels) * log_expit(-logits))
    loss += 0.5 * l2 * np.dot(weights, weights)
    residual = (expit(logits) - labels) / len(labels)
    return loss, features.T @ residual + l2 * weights, residual.sum()


def lr_train(features, labels, config=LrConfig()):
    """Fit on ``features`` with labels 1 for the positive class.

    The step size is the inverse of the Lipschitz constant of the
    gradient, so the loss never increases.
    """
    features = np.asarray(features, dtype=np.float64)
    labels = np.asarray(labels, dtype=np.float64)
    if len(np.unique(labels)) < 2:
        raise ValidationError(_('Logistic regression needs both classes.'),
                              code='single_class')
    n, d = features.shape
    spectral = np.linalg.norm(np.hstack([features, np.ones((n, 1))]), 2)
    step = 1.0 / (0.25 * spectral ** 2 / n + config.l2)
    weights, bias = np.zeros(d), 0.0
    loss, iteration = np.nan, 0
    for iteration in range(config.max_iterations):
        loss, grad_w, grad_b = lr_loss(weights, bias, features, labels,
                                       config.l2)
        if np.sqrt(np.dot(grad_w, grad_w) + grad_b ** 2) < config.tolerance:
            break
        weights = weights - step * grad_w
        bias = bias - step * grad_b
    logger.debug('Logistic regression stopped after %d iterations, loss '
                 '%.6f', iteration + 1, loss)
    return LrModel(weights, bias, config.l2, trained=True)


def lr_score(model, features):
    """Probability of the positive class for each row of ``features``."""
    return expit(np.asarray(features, dtype=np.float64) @ model.weights +
                 model.bias)
