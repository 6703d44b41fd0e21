"""Token embedding layer."""

import numpy as np

from neurallayers.base import Layer
from tablecore import PAD_ID
from tensorcore import Parameter, lookup_rows


class Embedding(Layer):
    """Matrix ``weight`` of shape ``|V| x d``; row ``PAD_ID`` stays zero."""

    def __init__(self, weight):
        weight = np.array(weight, dtype=np.float64)
        weight[PAD_ID] = 0.0
        self.weight = Parameter(weight, name='embedding')

    @property
    def vocabulary_size(self):
        return self.weight.shape[0]

    @property
    def dimension(self):
        return self.weight.shape[1]

    def zero_padding(self):
        """Restore the padding row after an optimizer step."""
        self.weight.value[PAD_ID] = 0.0

    def __call__(self, ids):
        return embed(ids, self)


def embed(ids, params):
    """Look up the embedding of every id of the integer array ``ids``."""
    return lookup_rows(params.weight, ids)
