"""Tests for table encoding."""

import numpy as np
from django.test import SimpleTestCase

from embeddings import Vocabulary
from tablecore import (PAD_ID, UNK_ID, Cell, RawTable, ShapeConfig,
                       encode_table)


class EncodeTableTest(SimpleTestCase):
    """Test fixed-size encoding."""

    def setUp(self):
        self.vocab = Vocabulary()
        for token in 'cell counts per group and day'.split():
            self.vocab.add(token)

    def test_caption_padding(self):
        """Check that short captions are padded with zeros."""
        table = RawTable('t', 'Cell counts per group and')
        encoded = encode_table(table, self.vocab, ShapeConfig())
        self.assertEqual(encoded.caption_ids.shape, (12,))
        self.assertTrue(np.all(encoded.caption_ids[:5] >= 2))
        np.testing.assert_array_equal(encoded.caption_ids[5:], PAD_ID)

    def test_empty(self):
        """Test an empty table."""
        encoded = encode_table(RawTable('t'), self.vocab, ShapeConfig())
        self.assertEqual(encoded.caption_ids.shape, (12,))
        self.assertEqual(encoded.content_ids.shape, (9, 9, 4))
        self.assertFalse(encoded.caption_ids.any())
        self.assertFalse(encoded.content_ids.any())

    def test_truncation(self):
        """Only the first rows, columns and tokens survive."""
        grid = tuple(tuple(Cell('cell {0} {1} a b c'.format(i, j))
                           for j in range(15)) for i in range(15))
        self.vocab.add('7')
        encoded = encode_table(RawTable('t', '', grid=grid), self.vocab,
                               ShapeConfig(9, 9, 4, 12))
        self.assertEqual(encoded.content_ids.shape, (9, 9, 4))
        self.assertEqual(encoded.content_ids.size, 324)
        cell = self.vocab.id_of('cell')
        np.testing.assert_array_equal(encoded.content_ids[:, :, 0], cell)
        self.assertEqual(encoded.content_ids[7, 0, 1], self.vocab.id_of('7'))
        self.assertEqual(encoded.content_ids[0, 7, 2], self.vocab.id_of('7'))
        self.assertEqual(encoded.content_ids[0, 0, 3], UNK_ID)

    def test_unknown_tokens(self):
        """Check that unseen tokens map to the unknown id."""
        table = RawTable('t', 'unseen words', grid=((Cell('day x'),),))
        encoded = encode_table(table, self.vocab, ShapeConfig(2, 2, 3, 3))
        np.testing.assert_array_equal(encoded.caption_ids,
                                      [UNK_ID, UNK_ID, PAD_ID])
        np.testing.assert_array_equal(
            encoded.content_ids[0, 0], [self.vocab.id_of('day'), UNK_ID,
                                        PAD_ID])
        self.assertTrue(np.all(encoded.content_ids < len(self.vocab)))
