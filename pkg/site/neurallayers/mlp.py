"""Single-layer perceptron with batch normalization."""

import numpy as np

from neurallayers.base import Layer, glorot_uniform
from tensorcore import (BatchNormState, Parameter, ShapeError, batchnorm,
                        matmul, relu)


class Mlp(Layer):
    """``relu(batchnorm(x W_f + b_f))``; ``W_f`` is stored ``in x out``."""

    def __init__(self, input_size, output_size, rng):
        self.weight = Parameter(glorot_uniform(rng, input_size, output_size))
        self.bias = Parameter(np.zeros(output_size))
        self.norm = BatchNormState(output_size)

    @property
    def input_size(self):
        return self.weight.shape[0]

    def __call__(self, x):
        return mlp_reduce(x, self)


def mlp_reduce(x, params):
    if x.shape[-1] != params.input_size:
        raise ShapeError('mlp', x.shape, params.weight.shape)
    affine = matmul(x, params.weight) + params.bias
    return relu(batchnorm(affine, params.norm))
