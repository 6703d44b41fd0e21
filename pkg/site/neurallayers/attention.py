"""Multiplicative self-attention over a set of vectors."""

import numpy as np

from neurallayers.base import Layer, glorot_uniform
from tensorcore import Parameter, matmul, sigmoid, softmax, swap_last


class SelfAttention(Layer):
    """Bilinear weights ``W_a`` (``d x d``) and a scalar bias ``b_a``."""

    def __init__(self, size, rng):
        self.weight = Parameter(glorot_uniform(rng, size, size))
        self.bias = Parameter(np.zeros(1))

    def __call__(self, items):
        return self_attention(items, self)


def self_attention(items, params):
    """Reweight each item by its attention to the others.

    For items ``x`` of shape ``... x n x d``: ``a_ij = sigmoid(x_i W_a x_j
    + b_a)``, ``alpha_i = softmax_j(a_ij)`` and ``psi_i = sum_j alpha_ij
    x_j``. Permuting the items permutes the outputs the same way.
    """
    scores = matmul(matmul(items, params.weight), swap_last(items))
    weights = softmax(sigmoid(scores + params.bias), axis=-1)
    return matmul(weights, items)
