"""Mini-batch training of the Siamese model."""

import logging
from dataclasses import dataclass

import numpy as np
from django.core.exceptions import ImproperlyConfigured, ValidationError
from django.utils.translation import gettext_lazy as _

from siamese.loss import contrastive_loss
from siamese.model import encode_batch
from tensorcore import (INFER, TRAIN, RmsProp, backward, euclidean_norm,
                        mean, reshape, sub, take)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrainConfig(object):
    epochs: int = 30
    batch_size: int = 32
    seed: int = 0
    learning_rate: float = 0.001
    rho: float = 0.9
    epsilon: float = 1e-7

    def __post_init__(self):
        if self.epochs < 0:
            raise ImproperlyConfigured('train.epochs must not be negative')
        for name in ('batch_size', 'learning_rate', 'epsilon'):
            if not getattr(self, name) > 0:
                raise ImproperlyConfigured(
                    'train.{0} must be positive'.format(name))
        if not 0 < self.rho < 1:
            raise ImproperlyConfigured('train.rho must lie in (0, 1)')


def batch_loss(model, pairs, encoded):
    """Mean contrastive loss of ``pairs``.

    Both tables of every pair go through the encoders as one batch, so
    batch normalization sees ``2 * len(pairs)`` tables.
    """
    tables = ([encoded[p.query_id] for p in pairs] +
              [encoded[p.cand_id] for p in pairs])
    vectors = reshape(encode_batch(model, tables),
                      (2, len(pairs), model.output_size))
    distances = euclidean_norm(sub(take(vectors, 0, axis=0),
                                   take(vectors, 1, axis=0)), axis=-1)
    targets = np.array([p.target for p in pairs], dtype=np.float64)
    return mean(contrastive_loss(targets, distances, model.margin))


def train(model, pairs, encoded, config):
    """Fit ``model`` to the labeled ``pairs`` and return the epoch losses.

    ``encoded`` maps table ids to their ``EncodedTable``. Pairs are
    shuffled with ``config.seed`` at every epoch. The padding row of the
    embedding is reset after each RMSprop step.
    """
    pairs = list(pairs)
    if not pairs:
        raise ValidationError(_('No pairs to train on.'), code='empty_split')
    rng = np.random.default_rng(config.seed)
    optimizer = RmsProp(model.parameters(), config.learning_rate,
                        config.rho, config.epsilon)
    history = []
    model.set_mode(TRAIN)
    try:
        for epoch in range(config.epochs):
            order = rng.permutation(len(pairs))
            total = 0.0
            for start in range(0, len(pairs), config.batch_size):
                batch = [pairs[k] for k in
                         order[start:start + config.batch_size]]
                loss = batch_loss(model, batch, encoded)
                optimizer.step(backward(loss))
                model.embedding.zero_padding()
                total += loss.item() * len(batch)
            history.append(total / len(pairs))
            logger.info('Epoch %d/%d: mean loss %.6f', epoch + 1,
                        config.epochs, history[-1])
    finally:
        model.set_mode(INFER)
    return history
