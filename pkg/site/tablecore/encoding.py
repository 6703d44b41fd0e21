"""Fixed-size integer encoding of tables."""

import numpy as np

from tablecore.tables import PAD_ID, EncodedTable
from tablecore.text import tokenize


def encode_tokens(tokens, vocab, size):
    """Map ``tokens`` to ids, cropped or padded with ``PAD_ID`` to ``size``."""
    ids = np.full(size, PAD_ID, dtype=np.int64)
    for k, token in enumerate(tokens[:size]):
        ids[k] = vocab.id_of(token)
    return ids


def encode_table(table, vocab, config):
    """Encode a horizontal table with expanded merged cells.

    The caption becomes ``config.tokens_per_caption`` ids and the content
    an ``n_rows x n_cols x tokens_per_cell`` array. Truncation keeps the
    first rows, columns and tokens.
    """
    caption_ids = encode_tokens(tokenize(table.caption), vocab,
                                config.tokens_per_caption)
    content_ids = np.full(config.content_shape, PAD_ID, dtype=np.int64)
    for i, row in enumerate(table.grid[:config.n_rows]):
        for j, cell in enumerate(row[:config.n_cols]):
            content_ids[i, j] = encode_tokens(tokenize(cell.text), vocab,
                                              config.tokens_per_cell)
    return EncodedTable(caption_ids, content_ids, table_id=table.id)
