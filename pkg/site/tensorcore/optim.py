"""The RMSprop optimizer."""

import numpy as np


class RmsPropState(object):
    """Squared-gradient accumulator of one parameter."""

    def __init__(self, accumulator, learning_rate=0.001, rho=0.9,
                 epsilon=1e-7):
        self.accumulator = np.asarray(accumulator, dtype=np.float64)
        self.learning_rate = learning_rate
        self.rho = rho
        self.epsilon = epsilon


def rmsprop_step(param, grad, state):
    """Return the updated parameter and state.

    ``accum = rho * accum + (1 - rho) * grad ** 2`` and
    ``param = param - lr * grad / (sqrt(accum) + epsilon)``. Neither input
    is modified.
    """
    accumulator = (state.rho * state.accumulator +
                   (1.0 - state.rho) * grad * grad)
    updated = param - (state.learning_rate * grad /
                       (np.sqrt(accumulator) + state.epsilon))
    return updated, RmsPropState(accumulator, state.learning_rate,
                                 state.rho, state.epsilon)


class RmsProp(object):
    """Apply ``rmsprop_step`` to a named set of parameters."""

    def __init__(self, parameters, learning_rate=0.001, rho=0.9,
                 epsilon=1e-7):
        self.parameters = parameters
        self.states = {
            name: RmsPropState(np.zeros_like(p.value), learning_rate,
                               rho, epsilon)
            for name, p in parameters.items()}

    def step(self, gradients):
        """Update every parameter that received a gradient."""
        for name, param in self.parameters.items():
            grad = gradients.get(param)
            if grad is None:
                continue
            param.value, self.states[name] = rmsprop_step(
                param.value, grad, self.states[name])
