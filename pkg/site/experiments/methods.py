"""The similarity methods compared by the ``evaluate`` command."""

import dataclasses
import logging

import numpy as np

from baselines import (DISTANCE, MethodScore, caption_tokens, content_tokens,
                       google_fusion_score, lr_score, lr_train,
                       pair_features, table_cosine, table_jaccard, tfidf_fit)
from corpusio import SIMILAR
from embeddings import WordVectors, build_vocab, initial_embedding
from metrics import Method, Scorer
from neurallayers import ATTENTION, SEQUENCE
from siamese import TableVectors, build_model, train
from tablecore import encode_table

logger = logging.getLogger(__name__)


def encode_tables(corpus, vocab, shape):
    return {table_id: encode_table(table, vocab, shape)
            for table_id, table in corpus.tables.items()}


def split_embedding(config, corpus, table_ids, seed):
    """Vocabulary of ``table_ids`` and its initial embedding."""
    vocab = build_vocab(corpus, table_ids)
    embedding = initial_embedding(
        config.strategy, vocab, config.model.embedding_dim, seed,
        path=config.embeddings_path, corpus=corpus, table_ids=table_ids,
        skipgram=dataclasses.replace(config.skipgram, seed=seed))
    return vocab, embedding


def fit_tabsim(config, corpus, train_indices, seed, variant=None):
    """Train a model on the pairs at ``train_indices``.

    The vocabulary and the embedding come from the tables of these pairs
    only. Returns the model, every table encoded, and the epoch losses.
    """
    table_ids = corpus.table_ids_of(train_indices)
    vocab, embedding = split_embedding(config, corpus, table_ids, seed)
    model = build_model(vocab, embedding, config.shape,
                        config.model_config(variant), seed)
    encoded = encode_tables(corpus, vocab, config.shape)
    history = train(model, [corpus.pairs[k] for k in train_indices],
                    encoded, dataclasses.replace(config.train, seed=seed))
    return model, encoded, history


class TabSimScorer(Scorer):
    orientation = DISTANCE

    def __init__(self, vectors):
        self.vectors = vectors
        self.threshold = vectors.model.margin / 2.0

    def score(self, query_id, cand_id):
        return MethodScore(self.vectors.distance(query_id, cand_id),
                           DISTANCE)


class TabSimMethod(Method):
    """The Siamese model, with attention or with sequence encoders."""

    def __init__(self, config, variant=ATTENTION):
        self.config = config
        self.variant = variant
        self.name = 'tabsim' if variant == ATTENTION else 'tabsim_l'

    def fit(self, corpus, train_indices, seed):
        model, encoded, _ = fit_tabsim(self.config, corpus, train_indices,
                                       seed, self.variant)
        return TabSimScorer(TableVectors(model, encoded))


class TableScorer(Scorer):
    """Apply a function of two ``RawTable`` to table ids."""

    def __init__(self, corpus, function):
        self.tables = corpus.tables
        self.function = function

    def score(self, query_id, cand_id):
        return self.function(self.tables[query_id], self.tables[cand_id])


class JaccardMethod(Method):
    name = 'jaccard'

    def fit(self, corpus, train_indices, seed):
        return TableScorer(corpus, table_jaccard)


class EmbeddingMethod(Method):
    """Unsupervised scores over word vectors of the training tables."""

    def __init__(self, config, name, function):
        self.config = config
        self.name = name
        self.function = function

    def word_vectors(self, corpus, train_indices, seed):
        vocab, embedding = split_embedding(
            self.config, corpus, corpus.table_ids_of(train_indices), seed)
        return WordVectors.from_embedding(vocab, embedding)

    def fit(self, corpus, train_indices, seed):
        vectors = self.word_vectors(corpus, train_indices, seed)
        return TableScorer(
            corpus, lambda query, cand: self.function(query, cand, vectors))


class LrScorer(Scorer):

    def __init__(self, corpus, model, tfidf, vectors):
        self.tables = corpus.tables
        self.model = model
        self.tfidf = tfidf
        self.vectors = vectors

    def score(self, query_id, cand_id):
        features = pair_features(self.tables[query_id], self.tables[cand_id],
                                 self.tfidf, self.vectors)
        return MethodScore(float(lr_score(self.model, features[None])[0]))


class LrMethod(EmbeddingMethod):
    """Logistic regression on tf-idf and embedding differences."""

    def __init__(self, config):
        super(LrMethod, self).__init__(config, 'lr', None)

    def fit(self, corpus, train_indices, seed):
        vectors = self.word_vectors(corpus, train_indices, seed)
        documents = []
        for table_id in corpus.table_ids_of(train_indices):
            table = corpus.tables[table_id]
            documents.extend([caption_tokens(table), content_tokens(table)])
        tfidf = tfidf_fit(documents)
        pairs = [corpus.pairs[k] for k in train_indices]
        features = np.array([
            pair_features(corpus.tables[p.query_id], corpus.tables[p.cand_id],
                          tfidf, vectors) for p in pairs])
        labels = [1.0 if p.binary_label == SIMILAR else 0.0 for p in pairs]
        model = lr_train(features, labels, self.config.lr)
        return LrScorer(corpus, model, tfidf, vectors)


def build_method(name, config):
    if name == 'tabsim':
        return TabSimMethod(config, ATTENTION)
    if name == 'tabsim_l':
        return TabSimMethod(config, SEQUENCE)
    if name == 'jaccard':
        return JaccardMethod()
    if name == 'cosine':
        return EmbeddingMethod(config, 'cosine', table_cosine)
    if name == 'fusion':
        return EmbeddingMethod(config, 'fusion', google_fusion_score)
    if name == 'lr':
        return LrMethod(config)
    raise ValueError('Unknown method: {0}'.format(name))


def build_methods(config):
    """One method per distinct name of ``config.methods``, in order."""
    names = list(dict.fromkeys(config.methods))
    logger.debug('Methods: %s', ', '.join(names))
    return [build_method(name, config) for name in names]
