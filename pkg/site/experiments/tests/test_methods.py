"""Tests for the method adapters."""

import numpy as np
from django.test import SimpleTestCase

from baselines import DISTANCE, SIMILARITY
from corpusio import generate_synthetic_corpus
from experiments.config import load_run_config
from experiments.methods import build_methods, fit_tabsim

SMALL = {'embeddings.dimension': '4', 'shape.n_rows': '2',
         'shape.n_cols': '2', 'shape.tokens_per_cell': '1',
         'shape.tokens_per_caption': '2', 'model.hidden_size': '2',
         'model.mlp_size': '3', 'train.epochs': '1',
         'train.batch_size': '4', 'skipgram.epochs': '1',
         'skipgram.permutations_per_column': '1'}


def small_config(**overrides):
    values = dict(SMALL, **overrides)
    return load_run_config(overrides=values, seed=5)


class BuildMethodsTest(SimpleTestCase):
    """Test ``build_methods`` and the fitted scorers."""

    def setUp(self):
        self.corpus = generate_synthetic_corpus(6, 2, 3, 5, n_rows=2,
                                                n_cols=2)
        self.train = np.arange(8)

    def test_names(self):
        """Check that repeated method names are built once."""
        config = small_config(**{'run.methods': 'lr, jaccard, lr, tabsim_l'})
        self.assertEqual([m.name for m in build_methods(config)],
                         ['lr', 'jaccard', 'tabsim_l'])

    def test_orientations(self):
        """Test the orientation of every method score."""
        config = small_config(**{'embeddings.strategy': 'column_skipgram'})
        for method in build_methods(config):
            scorer = method.fit(self.corpus, self.train, 5)
            score = scorer.score('q0000', 'q0000c0')
            expected = (DISTANCE if method.name.startswith('tabsim')
                        else SIMILARITY)
            self.assertEqual(score.orientation, expected, method.name)
            self.assertTrue(np.isfinite(score.value), method.name)
            self.assertIn(scorer.classify(score), ('similar', 'dissimilar'))

    def test_cosine_identity(self):
        """Test similarity scores of a table with itself."""
        config = small_config(**{'run.methods': 'cosine, fusion, jaccard'})
        for method in build_methods(config):
            scorer = method.fit(self.corpus, self.train, 5)
            self.assertAlmostEqual(scorer.score('q0001', 'q0001').value, 1.0,
                                   msg=method.name)

    def test_tabsim_threshold(self):
        """Check that the threshold is half the margin."""
        config = small_config(**{'run.methods': 'tabsim',
                                 'model.margin': '3.0'})
        scorer = build_methods(config)[0].fit(self.corpus, self.train, 5)
        self.assertEqual(scorer.threshold, 1.5)
        self.assertEqual(scorer.score('q0002', 'q0002').value, 0.0)

    def test_fit_tabsim_history(self):
        """Test the loss history of a fitted model."""
        config = small_config(**{'train.epochs': '3'})
        model, encoded, history = fit_tabsim(config, self.corpus, self.train,
                                             5)
        self.assertEqual(len(history), 3)
        self.assertEqual(set(encoded), set(self.corpus.tables))
        self.assertEqual(model.config.variant, 'attention')
