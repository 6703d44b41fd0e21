"""Synthetic corpora where similar tables share meaning but few words.

Every topic owns groups of synonyms. A table is written with one synonym
variant throughout; its similar candidates come from the same topic with
another variant and its dissimilar candidates from other topics.
"""

import logging

import numpy as np

from corpusio.corpus import (DISSIMILAR, PMC, SIMILAR, Corpus, LabeledPair,
                             QueryGroup)
from embeddings import EmbeddingFile
from tablecore import Cell, RawTable

logger = logging.getLogger(__name__)

CONSONANTS = 'bcdfghklmnprstvz'
VOWELS = 'aeiou'


class Lexicon(object):
    """Token ``words[topic][group][variant]`` of every synonym group."""

    def __init__(self, topics, groups=8, synonyms=3, seed=0):
        rng = np.random.default_rng(seed)
        used = set()
        self.words = []
        for _ in range(topics):
            topic = []
            for _ in range(groups):
                topic.append([self._new_word(rng, used)
                              for _ in range(synonyms)])
            self.words.append(topic)

    @staticmethod
    def _new_word(rng, used):
        while True:
            word = ''.join(rng.choice(list(CONSONANTS)) +
                           rng.choice(list(VOWELS)) for _ in range(3))
            if word not in used:
                used.add(word)
                return word

    @property
    def topics(self):
        return len(self.words)

    @property
    def groups(self):
        return len(self.words[0])

    @property
    def synonyms(self):
        return len(self.words[0][0])

    def word(self, topic, group, variant):
        return self.words[topic][group][variant]

    def entries(self):
        """Yield ``(topic, group, variant, word)`` in lexicon order."""
        for t, topic in enumerate(self.words):
            for g, group in enumerate(topic):
                for v, word in enumerate(group):
                    yield t, g, v, word


def synonym_vectors(lexicon, dimension, seed):
    """Vectors close within a synonym group and within a topic."""
    rng = np.random.default_rng(seed)
    topics = rng.normal(size=(lexicon.topics, dimension))
    groups = 0.5 * rng.normal(size=(lexicon.topics, lexicon.groups,
                                    dimension))
    tokens, rows = [], []
    for t, g, _, word in lexicon.entries():
        tokens.append(word)
        rows.append(topics[t] + groups[t, g] +
                    0.05 * rng.normal(size=dimension))
    return EmbeddingFile(tokens, np.array(rows).reshape(-1, dimension))


class _TableWriter(object):

    def __init__(self, lexicon, rng, n_rows, n_cols):
        self.lexicon = lexicon
        self.rng = rng
        self.n_rows = n_rows
        self.n_cols = n_cols

    def groups(self, count):
        return [int(g) for g in self.rng.choice(self.lexicon.groups,
                                                size=count, replace=False)]

    def table(self, table_id, topic, variant, header_groups,
              caption_groups):
        word = self.lexicon.word
        caption = ' '.join(word(topic, g, variant) for g in caption_groups)
        rows = [tuple(Cell(word(topic, g, variant)) for g in header_groups)]
        for _ in range(self.n_rows - 1):
            cells = self.rng.integers(self.lexicon.groups, size=self.n_cols)
            rows.append(tuple(Cell(word(topic, int(g), variant))
                              for g in cells))
        return RawTable(table_id, caption, grid=tuple(rows))


def generate_synthetic_corpus(n_queries, cands_per_query, vocab_topics, seed,
                              lexicon=None, n_rows=4, n_cols=4,
                              caption_length=3):
    """Generate query groups with balanced similar and dissimilar pairs.

    Half of the candidates of a query, rounded up, are similar. The first
    similar candidate reuses the caption groups of its query and is
    labeled ``(2, 2)``; the others draw fresh caption groups and are
    labeled ``(1, 2)``. Dissimilar candidates are labeled ``(0, 0)``.
    Candidate ids are numbered in a random order within each query, so
    their order says nothing about the labels.
    """
    if lexicon is None:
        lexicon = Lexicon(vocab_topics, seed=seed)
    rng = np.random.default_rng([seed, 2])
    writer = _TableWriter(lexicon, rng, n_rows, min(n_cols, lexicon.groups))
    caption_length = min(caption_length, lexicon.groups)
    tables, pairs, groups = {}, [], []
    similar_count = (cands_per_query + 1) // 2
    for q in range(n_queries):
        query_id = 'q{0:04d}'.format(q)
        topic = int(rng.integers(lexicon.topics))
        variant = int(rng.integers(lexicon.synonyms))
        header = writer.groups(writer.n_cols)
        caption = writer.groups(caption_length)
        tables[query_id] = writer.table(query_id, topic, variant, header,
                                        caption)
        slots = rng.permutation(cands_per_query)
        candidates = []
        for c in range(cands_per_query):
            cand_id = '{0}c{1}'.format(query_id, slots[c])
            if c < similar_count:
                shift = 1 + int(rng.integers(max(lexicon.synonyms - 1, 1)))
                other = (variant + shift) % lexicon.synonyms
                columns = [header[k] for k in rng.permutation(len(header))]
                fresh = c > 0
                labels = (1, 2) if fresh else (2, 2)
                table = writer.table(
                    cand_id, topic, other, columns,
                    writer.groups(caption_length) if fresh else caption)
                label = SIMILAR
            else:
                other_topic = (topic + 1 + int(rng.integers(
                    max(lexicon.topics - 1, 1)))) % lexicon.topics
                table = writer.table(
                    cand_id, other_topic,
                    int(rng.integers(lexicon.synonyms)),
                    writer.groups(writer.n_cols),
                    writer.groups(caption_length))
                labels = (0, 0)
                label = DISSIMILAR
            candidates.append((cand_id, table, labels, label))
        candidates.sort(key=lambda candidate: candidate[0])
        for cand_id, table, labels, label in candidates:
            tables[cand_id] = table
            pairs.append(LabeledPair(query_id, cand_id, labels[0],
                                     labels[1], label, sum(labels)))
        groups.append(QueryGroup(query_id,
                                 tuple(c[0] for c in candidates)))
    logger.debug('Generated %d tables and %d pairs', len(tables), len(pairs))
    return Corpus(tables, tuple(pairs), tuple(groups), PMC)
