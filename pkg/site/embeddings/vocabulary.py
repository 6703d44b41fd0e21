"""Token dictionaries."""

import logging

from tablecore import PAD_ID, UNK_ID, tokenize

logger = logging.getLogger(__name__)

PAD_TOKEN = '<pad>'
UNK_TOKEN = '<unk>'


class Vocabulary(object):
    """Map tokens to consecutive ids in insertion order.

    Id ``PAD_ID`` and ``UNK_ID`` are reserved; unknown tokens map to
    ``UNK_ID``.
    """

    def __init__(self, tokens=()):
        self._tokens = [PAD_TOKEN, UNK_TOKEN]
        self._ids = {PAD_TOKEN: PAD_ID, UNK_TOKEN: UNK_ID}
        for token in tokens:
            self.add(token)

    def __len__(self):
        return len(self._tokens)

    def __contains__(self, token):
        return token in self._ids

    def __iter__(self):
        return iter(self._tokens)

    def add(self, token):
        """Return the id of ``token``, adding it when new."""
        index = self._ids.get(token)
        if index is None:
            index = len(self._tokens)
            self._ids[token] = index
            self._tokens.append(token)
        return index

    def id_of(self, token):
        return self._ids.get(token, UNK_ID)

    def token_of(self, index):
        return self._tokens[index]

    def tokens(self):
        """Return the non-reserved tokens in id order."""
        return self._tokens[2:]


def table_tokens(table):
    """Yield the caption tokens then the cell tokens row by row."""
    for token in tokenize(table.caption):
        yield token
    for row in table.grid:
        for cell in row:
            for token in tokenize(cell.text):
                yield token


def build_vocab(corpus, table_ids=None):
    """Collect the tokens of the tables of ``corpus``.

    Only the tables in ``table_ids`` are read when it is given, so that a
    vocabulary may be restricted to a training split. Tables are visited in
    corpus order.
    """
    vocab = Vocabulary()
    wanted = None if table_ids is None else set(table_ids)
    for table_id, table in corpus.tables.items():
        if wanted is not None and table_id not in wanted:
            continue
        for token in table_tokens(table):
            vocab.add(token)
    logger.debug('Vocabulary of %d tokens', len(vocab))
    return vocab
