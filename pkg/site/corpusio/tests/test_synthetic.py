"""Tests for the synthetic corpus generator."""

import numpy as np
from django.test import SimpleTestCase

from corpusio import (DISSIMILAR, SIMILAR, Lexicon, dumps_corpus,
                      generate_synthetic_corpus, loads_corpus,
                      synonym_vectors)
from embeddings import table_tokens


def jaccard(first, second):
    first, second = set(table_tokens(first)), set(table_tokens(second))
    return len(first & second) / len(first | second)


class SyntheticCorpusTest(SimpleTestCase):
    """Test ``generate_synthetic_corpus``."""

    def test_smallest(self):
        """Test a single query with two candidates."""
        corpus = generate_synthetic_corpus(1, 2, 4, 0)
        self.assertEqual(len(corpus.groups), 1)
        self.assertEqual(sorted(p.binary_label for p in corpus.pairs),
                         [DISSIMILAR, SIMILAR])
        self.assertEqual(len(corpus.tables), 3)

    def test_balanced(self):
        """Check that labels are balanced."""
        corpus = generate_synthetic_corpus(20, 4, 4, 1)
        labels = [p.binary_label for p in corpus.pairs]
        self.assertEqual(labels.count(SIMILAR), 40)
        self.assertEqual(labels.count(DISSIMILAR), 40)

    def test_low_lexical_overlap(self):
        """Check that similar tables share few words."""
        corpus = generate_synthetic_corpus(30, 4, 6, 2)
        overlaps = [jaccard(corpus.tables[p.query_id],
                            corpus.tables[p.cand_id])
                    for p in corpus.pairs if p.binary_label == SIMILAR]
        self.assertLess(np.mean(overlaps), 0.2)

    def test_same_topic(self):
        """Check that similar tables share their topic."""
        lexicon = Lexicon(4, seed=3)
        topic_of = {word: t for t, _, _, word in lexicon.entries()}
        corpus = generate_synthetic_corpus(10, 4, 4, 3, lexicon=lexicon)
        for pair in corpus.pairs:
            topics = [{topic_of[w] for w in table_tokens(corpus.tables[i])}
                      for i in (pair.query_id, pair.cand_id)]
            self.assertEqual(len(topics[0]), 1)
            self.assertEqual(topics[0] == topics[1],
                             pair.binary_label == SIMILAR)

    def test_deterministic(self):
        """Check that corpora depend on the seed only."""
        first = dumps_corpus(generate_synthetic_corpus(5, 4, 4, 7))
        second = dumps_corpus(generate_synthetic_corpus(5, 4, 4, 7))
        self.assertEqual(first, second)
        other = dumps_corpus(generate_synthetic_corpus(5, 4, 4, 8))
        self.assertNotEqual(first, other)

    def test_ids_hide_gains(self):
        """Check that id order does not rank candidates by gain."""
        corpus = generate_synthetic_corpus(100, 4, 8, 7)
        gain = {p.cand_id: p.rank_gain for p in corpus.pairs}
        ideal = 0
        best_positions = set()
        for group in corpus.groups:
            gains = [gain[c] for c in sorted(group.candidate_ids)]
            ideal += gains == sorted(gains, reverse=True)
            best_positions.add(gains.index(max(gains)))
        self.assertLess(ideal, 30)
        self.assertEqual(best_positions, {0, 1, 2, 3})

    def test_valid_document(self):
        """Check that a generated corpus is a valid document."""
        corpus = generate_synthetic_corpus(5, 3, 4, 0)
        reloaded = loads_corpus(dumps_corpus(corpus))
        self.assertEqual(reloaded.pairs, corpus.pairs)
        self.assertEqual(reloaded.groups, corpus.groups)


class SynonymVectorsTest(SimpleTestCase):

    def test_synonyms_closer(self):
        """Check that synonyms are closer than other topics."""
        lexicon = Lexicon(3, seed=0)
        vectors = synonym_vectors(lexicon, 16, 0)
        row = dict(vectors.rows())
        same = row[lexicon.word(0, 0, 0)] - row[lexicon.word(0, 0, 1)]
        other = row[lexicon.word(0, 0, 0)] - row[lexicon.word(1, 0, 0)]
        self.assertLess(np.linalg.norm(same), np.linalg.norm(other))
        self.assertEqual(len(vectors), 3 * 8 * 3)
