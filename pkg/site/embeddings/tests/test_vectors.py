"""Tests for word vector files."""

import os
import shutil
import tempfile

import numpy as np
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from embeddings import (EmbeddingFile, Vocabulary, WordVectors,
                        load_pretrained, random_embedding, random_matrix)
from tablecore import PAD_ID


class EmbeddingFileTest(SimpleTestCase):
    """Test reading and writing ``EmbeddingFile``."""

    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.path = os.path.join(self.directory, 'vectors.txt')

    def tearDown(self):
        shutil.rmtree(self.directory)

    def write(self, text):
        with open(self.path, 'w', encoding='utf-8') as output:
            output.write(text)

    def test_text_form(self):
        """Test the text form of vectors."""
        vectors = EmbeddingFile(['a', 'b'], [[0.1, 1.0], [-2.5, 1e-20]])
        self.assertEqual(vectors.dumps(),
                         '2 2\na 0.10000000000000001 1\n'
                         'b -2.5 9.9999999999999995e-21\n')

    def test_exact_values(self):
        """Check that written values read back exactly."""
        values = np.random.default_rng(3).normal(size=(4, 5))
        EmbeddingFile(['w', 'x', 'y', 'é'], values).write(self.path)
        vectors = EmbeddingFile.read(self.path)
        self.assertEqual(vectors.tokens, ['w', 'x', 'y', 'é'])
        self.assertEqual(vectors.vectors.tobytes(), values.tobytes())

    def test_empty(self):
        """Test a file without vectors."""
        self.write('0 200\n')
        vectors = EmbeddingFile.read(self.path)
        self.assertEqual(len(vectors), 0)
        self.assertEqual(vectors.dimension, 200)

    def test_bad_header(self):
        """Check that malformed headers are rejected."""
        for text in ('', 'two 3\n', '1\n', '0 0\n'):
            self.write(text)
            with self.assertRaises(ValidationError) as context:
                EmbeddingFile.read(self.path)
            self.assertEqual(context.exception.code, 'bad_header')

    def test_row_count(self):
        """Check that the header counts the rows."""
        self.write('2 2\na 1 2\n')
        with self.assertRaises(ValidationError) as context:
            EmbeddingFile.read(self.path)
        self.assertEqual(context.exception.code, 'bad_header')

    def test_ragged_row(self):
        """Check that every row has the header dimension."""
        self.write('2 2\na 1 2\nb 1 2 3\n')
        with self.assertRaises(ValidationError) as context:
            EmbeddingFile.read(self.path)
        self.assertEqual(context.exception.code, 'dimension_mismatch')
        self.assertEqual(context.exception.params['line'], 3)

    def test_not_numeric(self):
        """Check that values must be numbers."""
        self.write('1 2\na 1 b\n')
        with self.assertRaises(ValidationError) as context:
            EmbeddingFile.read(self.path)
        self.assertEqual(context.exception.code, 'parse')


class LoadPretrainedTest(SimpleTestCase):
    """Test ``load_pretrained``."""

    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.path = os.path.join(self.directory, 'vectors.txt')
        self.vocab = Vocabulary(['rain', 'snow', 'wind'])

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_full_coverage(self):
        """Test a file covering the whole vocabulary."""
        values = np.arange(12, dtype=np.float64).reshape(4, 3) + 1.0
        EmbeddingFile(['<pad>', 'wind', 'rain', 'snow'],
                      values).write(self.path)
        weight = load_pretrained(self.path, self.vocab, 3, 0).weight.value
        np.testing.assert_array_equal(weight[PAD_ID], np.zeros(3))
        np.testing.assert_array_equal(weight[self.vocab.id_of('wind')],
                                      values[1])
        np.testing.assert_array_equal(weight[self.vocab.id_of('rain')],
                                      values[2])
        np.testing.assert_array_equal(weight[self.vocab.id_of('snow')],
                                      values[3])

    def test_empty_file(self):
        """Check that an empty file gives random vectors."""
        with open(self.path, 'w') as output:
            output.write('0 200\n')
        weight = load_pretrained(self.path, self.vocab, 200, 7).weight.value
        np.testing.assert_array_equal(weight, random_matrix(5, 200, 7))
        self.assertTrue(np.all(weight[PAD_ID] == 0.0))
        self.assertTrue(np.all(np.abs(weight) <= 0.05))
        self.assertTrue(np.all(weight[1:] != 0.0))

    def test_dimension_mismatch(self):
        """Check that the file dimension must match."""
        EmbeddingFile(['rain'], np.ones((1, 100))).write(self.path)
        with self.assertRaises(ValidationError) as context:
            load_pretrained(self.path, self.vocab, 200, 0)
        self.assertEqual(context.exception.code, 'dimension_mismatch')

    def test_random_embedding(self):
        """Test seeded random embeddings."""
        embedding = random_embedding(self.vocab, 4, 1)
        self.assertEqual(embedding.weight.shape, (5, 4))
        np.testing.assert_array_equal(
            embedding.weight.value, random_embedding(self.vocab, 4, 1)
            .weight.value)


class WordVectorsTest(SimpleTestCase):

    def test_vectors_of(self):
        """Check that unknown words are skipped."""
        vocab = Vocabulary(['a', 'b'])
        words = WordVectors(vocab, np.arange(8.0).reshape(4, 2))
        np.testing.assert_array_equal(words.vectors_of(['b', 'z', 'a']),
                                      [[6.0, 7.0], [4.0, 5.0]])
        self.assertEqual(words.vectors_of([]).shape, (0, 2))
