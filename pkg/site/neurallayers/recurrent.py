"""LSTM and bidirectional LSTM layers."""

import numpy as np

from neurallayers.base import Layer, glorot_uniform
from tensorcore import (Parameter, ShapeError, Tensor, concat, matmul,
                        sigmoid, slice_last, take, tanh)


class Lstm(Layer):
    """A single-direction LSTM.

    The input, forget, output and candidate gates are stacked along the
    last axis of ``kernel`` (``d x 4h``), ``recurrent`` (``h x 4h``) and
    ``bias`` (``4h``), in that order.
    """

    def __init__(self, input_size, hidden_size, rng):
        h = hidden_size
        self.kernel = Parameter(
            glorot_uniform(rng, input_size, 4 * h))
        self.recurrent = Parameter(glorot_uniform(rng, h, 4 * h))
        bias = np.zeros(4 * h)
        bias[h:2 * h] = 1.0
        self.bias = Parameter(bias)
        self.hidden_size = h

    def run(self, seq, reverse=False):
        """Return the last hidden state over ``seq`` (``... x T x d``)."""
        steps = seq.shape[-2]
        if steps == 0:
            raise ShapeError('lstm', seq.shape)
        h = self.hidden_size
        state = Tensor(np.zeros(seq.shape[:-2] + (h,)))
        cell = state
        order = range(steps - 1, -1, -1) if reverse else range(steps)
        for t in order:
            x = take(seq, t, axis=-2)
            z = matmul(x, self.kernel) + matmul(state, self.recurrent)
            z = z + self.bias
            i = sigmoid(slice_last(z, 0, h))
            f = sigmoid(slice_last(z, h, 2 * h))
            o = sigmoid(slice_last(z, 2 * h, 3 * h))
            g = tanh(slice_last(z, 3 * h, 4 * h))
            cell = f * cell + i * g
            state = o * tanh(cell)
        return state


class BiLstm(Layer):
    """Forward and backward LSTMs with separate parameters."""

    def __init__(self, input_size, hidden_size, rng):
        self.forward = Lstm(input_size, hidden_size, rng)
        self.backward = Lstm(input_size, hidden_size, rng)

    @property
    def output_size(self):
        return 2 * self.forward.hidden_size

    def __call__(self, seq):
        return bilstm_encode(seq, self)


def bilstm_encode(seq, params):
    """Concatenate the final forward and backward hidden states.

    ``seq`` has shape ``batch x T x d``; the result ``batch x 2h``. Padding
    steps are processed like any other step.
    """
    if seq.value.ndim < 3:
        raise ShapeError('bilstm', seq.shape)
    return concat([params.forward.run(seq),
                   params.backward.run(seq, reverse=True)], axis=-1)
