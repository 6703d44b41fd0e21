"""Skip-gram word embeddings trained with negative sampling."""

import logging
from dataclasses import dataclass

import numpy as np
from django.core.exceptions import ImproperlyConfigured, ValidationError
from django.utils.translation import gettext_lazy as _
from scipy.special import expit, log_expit

from embeddings.vectors import EmbeddingFile
from tablecore import PAD_ID

logger = logging.getLogger(__name__)

NOISE_POWER = 0.75
MIN_LEARNING_RATE = 0.0001


@dataclass(frozen=True)
class SkipgramConfig(object):
    dimension: int = 200
    window: int = 5
    negatives: int = 5
    epochs: int = 5
    permutations_per_column: int = 10
    learning_rate: float = 0.025
    seed: int = 0
    batch_size: int = 256

    def __post_init__(self):
        for name in ('dimension', 'window', 'negatives', 'epochs',
                     'permutations_per_column', 'learning_rate',
                     'batch_size'):
            if not getattr(self, name) > 0:
                raise ImproperlyConfigured(
                    'skipgram.{0} must be positive'.format(name))


def initial_vectors(vocab_size, config):
    """Input vectors before training; the padding row is zero."""
    rng = np.random.default_rng(config.seed)
    vectors = (rng.random((vocab_size, config.dimension)) - 0.5)
    vectors /= config.dimension
    vectors[PAD_ID] = 0.0
    return vectors


def noise_table(pairs, vocab_size):
    """Cumulative unigram counts of the centers raised to ``NOISE_POWER``."""
    counts = np.bincount(pairs[:, 0], minlength=vocab_size)
    weights = counts.astype(np.float64) ** NOISE_POWER
    weights[PAD_ID] = 0.0
    return np.cumsum(weights)


def draw_negatives(cumulative, shape, rng):
    draws = rng.random(shape) * cumulative[-1]
    return np.searchsorted(cumulative, draws, side='right')


def _step(w_in, w_out, centers, contexts, negatives, alpha):
    """Ascend the negative sampling log-likelihood on one batch.

    Return the batch loss before the update. Negatives equal to the
    context of their pair are ignored.
    """
    targets = np.concatenate([contexts[:, None], negatives], axis=1)
    labels = np.zeros(targets.shape)
    labels[:, 0] = 1.0
    mask = np.ones(targets.shape)
    mask[:, 1:] = negatives != contexts[:, None]
    hidden = w_in[centers]
    outputs = w_out[targets]
    scores = np.einsum('bd,bkd->bk', hidden, outputs)
    probabilities = expit(scores)
    signs = 2.0 * labels - 1.0
    loss = -np.sum(mask * log_expit(signs * scores))
    errors = (labels - probabilities) * mask * alpha
    np.add.at(w_out, targets, errors[:, :, None] * hidden[:, None, :])
    np.add.at(w_in, centers, np.einsum('bk,bkd->bd', errors, outputs))
    return loss


def train_skipgram(pairs, vocab, config):
    """Train input vectors on the ``(center, context)`` id ``pairs``.

    Pairs are shuffled each epoch and processed by mini-batches. The
    learning rate decays linearly towards ``MIN_LEARNING_RATE``. Only the
    rows of tokens seen as centers move away from ``initial_vectors``.
    """
    pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    if not len(pairs):
        raise ValidationError(_('No co-occurrence pairs to train on.'),
                              code='empty_stream')
    size = len(vocab)
    w_in = initial_vectors(size, config)
    w_out = np.zeros((size, config.dimension))
    cumulative = noise_table(pairs, size)
    rng = np.random.default_rng([config.seed, 1])
    batches = -(-len(pairs) // config.batch_size)
    total_steps = config.epochs * batches
    step = 0
    for epoch in range(config.epochs):
        order = rng.permutation(len(pairs))
        loss = 0.0
        for start in range(0, len(pairs), config.batch_size):
            batch = pairs[order[start:start + config.batch_size]]
            progress = step / total_steps
            alpha = config.learning_rate - (
                config.learning_rate - MIN_LEARNING_RATE) * progress
            negatives = draw_negatives(
                cumulative, (len(batch), config.negatives), rng)
            loss += _step(w_in, w_out, batch[:, 0], batch[:, 1],
                          negatives, alpha)
            step += 1
        logger.info('Skip-gram epoch %d: mean loss %.6f', epoch + 1,
                    loss / len(pairs))
    w_in[PAD_ID] = 0.0
    return EmbeddingFile(list(vocab), w_in)
