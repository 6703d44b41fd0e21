"""Batch normalization over the leading axes of a tensor."""

import numpy as np

from tensorcore.exceptions import ShapeError
from tensorcore.ops import _record
from tensorcore.tensor import Parameter, as_tensor

TRAIN = 'train'
INFER = 'infer'


class BatchNormState(object):
    """Learned scale and shift plus the running statistics.

    Running statistics follow ``running = momentum * running + (1 -
    momentum) * batch`` after every training batch.
    """

    def __init__(self, features, momentum=0.99, epsilon=1e-3):
        if features < 1:
            raise ShapeError('batchnorm', (features,))
        self.gamma = Parameter(np.ones(features), name='gamma')
        self.beta = Parameter(np.zeros(features), name='beta')
        self.running_mean = np.zeros(features)
        self.running_var = np.ones(features)
        self.momentum = momentum
        self.epsilon = epsilon
        self.mode = TRAIN

    @property
    def features(self):
        return self.gamma.shape[0]


def batchnorm(x, state):
    """Normalize the last axis of ``x`` according to ``state.mode``."""
    x = as_tensor(x)
    features = x.shape[-1] if x.value.ndim else 0
    if features == 0 or features != state.features:
        raise ShapeError('batchnorm', x.shape, state.gamma.shape)
    flat = x.value.reshape(-1, features)
    batch = flat.shape[0]
    if state.mode == TRAIN:
        if batch < 1:
            raise ShapeError('batchnorm', x.shape)
        mu = flat.mean(axis=0)
        var = ((flat - mu) ** 2).mean(axis=0)
        state.running_mean = (state.momentum * state.running_mean +
                              (1.0 - state.momentum) * mu)
        state.running_var = (state.momentum * state.running_var +
                             (1.0 - state.momentum) * var)
    else:
        mu = state.running_mean
        var = state.running_var
    inv_std = 1.0 / np.sqrt(var + state.epsilon)
    xhat = (flat - mu) * inv_std
    gamma = state.gamma.value
    value = (gamma * xhat + state.beta.value).reshape(x.shape)
    training = state.mode == TRAIN

    def rule(g):
        g = g.reshape(-1, features)
        dgamma = np.sum(g * xhat, axis=0)
        dbeta = np.sum(g, axis=0)
        dxhat = g * gamma
        if training:
            dx = (inv_std / batch) * (
                batch * dxhat - dxhat.sum(axis=0) -
                xhat * np.sum(dxhat * xhat, axis=0))
        else:
            dx = dxhat * inv_std
        return dx.reshape(x.shape), dgamma, dbeta

    return _record('batchnorm', value, (x, state.gamma, state.beta), rule)
