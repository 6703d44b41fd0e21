"""Token co-occurrence pairs drawn from tables."""

import logging

import numpy as np

from tablecore import PAD_ID, tokenize

logger = logging.getLogger(__name__)

TABLE_LEVEL = 'table'
COLUMN_LEVEL = 'column'


def window_pairs(ids, window):
    """Return every ``(center, context)`` pair at most ``window`` apart.

    Both directions are emitted, so the result is symmetric.
    """
    ids = np.asarray(ids, dtype=np.int64)
    ids = ids[ids != PAD_ID]
    chunks = [np.empty((0, 2), dtype=np.int64)]
    for offset in range(1, min(window, len(ids) - 1) + 1):
        left, right = ids[:-offset], ids[offset:]
        chunks.append(np.stack([left, right], axis=1))
        chunks.append(np.stack([right, left], axis=1))
    return np.concatenate(chunks)


def _cell_ids(text, vocab):
    return [vocab.id_of(token) for token in tokenize(text)]


def column_cooccurrence_pairs(table, vocab, config, rng=None):
    """Pairs from ``config.permutations_per_column`` shuffles per column.

    Each shuffle reorders the cells of a column, linearizes their tokens
    and emits the window pairs of the result.
    """
    if rng is None:
        rng = np.random.default_rng(config.seed)
    chunks = [np.empty((0, 2), dtype=np.int64)]
    for column in table.columns():
        cells = [_cell_ids(text, vocab) for text in column]
        for _ in range(config.permutations_per_column):
            order = rng.permutation(len(cells))
            ids = [token for k in order for token in cells[k]]
            chunks.append(window_pairs(ids, config.window))
    return np.concatenate(chunks)


def table_cooccurrence_pairs(table, vocab, config, rng=None):
    """Pairs from the caption and the cells read row by row."""
    ids = _cell_ids(table.caption, vocab)
    for row in table.grid:
        for cell in row:
            ids.extend(_cell_ids(cell.text, vocab))
    return window_pairs(ids, config.window)


def corpus_pairs(corpus, vocab, config, level=COLUMN_LEVEL, table_ids=None):
    """Concatenate the pairs of the corpus tables in corpus order."""
    generate = {TABLE_LEVEL: table_cooccurrence_pairs,
                COLUMN_LEVEL: column_cooccurrence_pairs}[level]
    rng = np.random.default_rng(config.seed)
    wanted = None if table_ids is None else set(table_ids)
    chunks = [np.empty((0, 2), dtype=np.int64)]
    for table_id, table in corpus.tables.items():
        if wanted is None or table_id in wanted:
            chunks.append(generate(table, vocab, config, rng))
    pairs = np.concatenate(chunks)
    logger.debug('%d %s-level co-occurrence pairs', len(pairs), level)
    return pairs
