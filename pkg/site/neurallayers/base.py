"""Parameter containers."""

import numpy as np

from tensorcore import BatchNormState, Parameter


def glorot_uniform(rng, fan_in, fan_out, shape=None):
    """Uniform values in +-sqrt(6 / (fan_in + fan_out))."""
    limit = np.sqrt(6.0 / (fan_in + fan_out))
    return rng.uniform(-limit, limit, size=shape or (fan_in, fan_out))


class Layer(object):
    """Base class of every block holding parameters.

    Parameters, batch normalization states and nested layers are found by
    walking the instance attributes in definition order, which gives every
    parameter a stable dotted name.
    """

    def named_parameters(self, prefix=''):
        for name, value in vars(self).items():
            if isinstance(value, Parameter):
                yield prefix + name, value
            elif isinstance(value, BatchNormState):
                yield prefix + name + '.gamma', value.gamma
                yield prefix + name + '.beta', value.beta
            elif isinstance(value, Layer):
                for item in value.named_parameters(prefix + name + '.'):
                    yield item

    def batchnorm_states(self, prefix=''):
        for name, value in vars(self).items():
            if isinstance(value, BatchNormState):
                yield prefix + name, value
            elif isinstance(value, Layer):
                for item in value.batchnorm_states(prefix + name + '.'):
                    yield item

    def parameters(self):
        return dict(self.named_parameters())

    def set_mode(self, mode):
        """Switch every batch normalization to ``train`` or ``infer``."""
        for _, state in self.batchnorm_states():
            state.mode = mode
