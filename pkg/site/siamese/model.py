"""The Siamese table similarity model."""

import logging
from dataclasses import dataclass

import numpy as np
from django.core.exceptions import ImproperlyConfigured

from neurallayers import (ATTENTION, VARIANTS, CaptionEncoder, Layer,
                          TabularEncoder, encode_caption, encode_content)
from tensorcore import INFER, ShapeError, concat, no_grad

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModelConfig(object):
    embedding_dim: int = 200
    hidden_size: int = 100
    mlp_size: int = 100
    variant: str = ATTENTION
    margin: float = 1.0
    use_caption: bool = True

    def __post_init__(self):
        for name in ('embedding_dim', 'hidden_size', 'mlp_size', 'margin'):
            if not getattr(self, name) > 0:
                raise ImproperlyConfigured(
                    'model.{0} must be positive'.format(name))
        if self.variant not in VARIANTS:
            raise ImproperlyConfigured(
                'model.variant must be one of {0}'.format(', '.join(VARIANTS)))


class TabSimModel(Layer):
    """One set of parameters shared by both tables of a pair.

    A table is represented by its caption vector followed by its content
    vector, or by the content vector alone when ``use_caption`` is off.
    """

    def __init__(self, vocab, embedding, shape, config, rng):
        if embedding.dimension != config.embedding_dim:
            raise ImproperlyConfigured(
                'Embedding of dimension {0}, model.embedding_dim is {1}'
                .format(embedding.dimension, config.embedding_dim))
        if embedding.vocabulary_size != len(vocab):
            raise ShapeError('embedding', embedding.weight.shape,
                             (len(vocab),))
        self.embedding = embedding
        if config.use_caption:
            self.caption_encoder = CaptionEncoder(
                embedding.dimension, config.hidden_size, rng)
        self.tabular_encoder = TabularEncoder(
            shape, embedding.dimension, config.hidden_size, config.mlp_size,
            rng, variant=config.variant)
        self.vocab = vocab
        self.shape = shape
        self.config = config
        self.set_mode(INFER)

    @property
    def margin(self):
        return self.config.margin

    @property
    def output_size(self):
        size = self.tabular_encoder.output_size
        if self.config.use_caption:
            size += self.caption_encoder.output_size
        return size


def build_model(vocab, embedding, shape, config, seed):
    """Create a model whose encoder weights are drawn with ``seed``."""
    model = TabSimModel(vocab, embedding, shape, config,
                        np.random.default_rng(seed))
    logger.debug('Model with %d parameter tensors, output size %d',
                 len(model.parameters()), model.output_size)
    return model


def _check_encoded(model, table):
    shape = model.shape
    if (table.content_ids.shape != shape.content_shape or
            table.caption_ids.shape != (shape.tokens_per_caption,)):
        raise ShapeError('represent', table.caption_ids.shape,
                         table.content_ids.shape)


def encode_batch(model, tables):
    """Represent a list of ``EncodedTable`` as a ``batch x size`` tensor."""
    for table in tables:
        _check_encoded(model, table)
    content = np.stack([t.content_ids for t in tables])
    vectors = encode_content(content, model.embedding, model.tabular_encoder)
    if not model.config.use_caption:
        return vectors
    captions = np.stack([t.caption_ids for t in tables])
    caption_vectors = encode_caption(captions, model.embedding,
                                     model.caption_encoder)
    return concat([caption_vectors, vectors], axis=-1)


def represent(model, table):
    """Return the vector of one table, with batch normalization in infer
    mode."""
    model.set_mode(INFER)
    with no_grad():
        return encode_batch(model, [table]).value[0]


def vector_distance(first, second):
    return float(np.sqrt(np.sum(np.square(first - second))))


def distance(model, query, candidate):
    """The Euclidean distance between the two table representations."""
    return vector_distance(represent(model, query),
                           represent(model, candidate))
