"""Initialization strategies of the model embedding matrix."""

import dataclasses
import logging

from django.core.exceptions import ImproperlyConfigured

from embeddings.cooccurrence import COLUMN_LEVEL, TABLE_LEVEL, corpus_pairs
from embeddings.skipgram import train_skipgram
from embeddings.vectors import (load_pretrained, pretrained_matrix,
                                random_embedding)
from neurallayers import Embedding

logger = logging.getLogger(__name__)

RANDOM = 'random'
FILE = 'file'
TABLE_SKIPGRAM = 'table_skipgram'
COLUMN_SKIPGRAM = 'column_skipgram'
STRATEGIES = (RANDOM, FILE, TABLE_SKIPGRAM, COLUMN_SKIPGRAM)


def train_corpus_vectors(corpus, vocab, skipgram, level, table_ids=None):
    """Train an ``EmbeddingFile`` on the co-occurrences of ``corpus``."""
    pairs = corpus_pairs(corpus, vocab, skipgram, level=level,
                         table_ids=table_ids)
    return train_skipgram(pairs, vocab, skipgram)


def initial_embedding(strategy, vocab, dimension, seed, path=None,
                      corpus=None, table_ids=None, skipgram=None):
    """Build the starting ``Embedding`` of a model.

    ``random`` draws every row, ``file`` reads pretrained vectors from
    ``path`` and the two skip-gram strategies train vectors on the tables
    of ``corpus`` listed in ``table_ids``.
    """
    logger.debug('Embedding strategy %s, dimension %d', strategy, dimension)
    if strategy == RANDOM:
        return random_embedding(vocab, dimension, seed)
    if strategy == FILE:
        if not path:
            raise ImproperlyConfigured(
                'embeddings.path is required by the file strategy')
        return load_pretrained(path, vocab, dimension, seed)
    if strategy in (TABLE_SKIPGRAM, COLUMN_SKIPGRAM):
        if corpus is None or skipgram is None:
            raise ImproperlyConfigured(
                'The {0} strategy needs a corpus'.format(strategy))
        level = TABLE_LEVEL if strategy == TABLE_SKIPGRAM else COLUMN_LEVEL
        skipgram = dataclasses.replace(skipgram, dimension=dimension)
        vectors = train_corpus_vectors(corpus, vocab, skipgram, level,
                                       table_ids)
        return Embedding(pretrained_matrix(vectors, vocab, dimension, seed))
    raise ImproperlyConfigured(
        'Unknown embedding strategy: {0}'.format(strategy))
