"""Small corpora and models shared by the tests."""

import numpy as np

from corpusio import Lexicon, generate_synthetic_corpus, synonym_vectors
from embeddings import build_vocab, pretrained_matrix, random_embedding
from neurallayers import Embedding
from siamese import ModelConfig, build_model
from tablecore import ShapeConfig, encode_table

TINY_SHAPE = ShapeConfig(2, 2, 2, 3)


def encode_corpus(corpus, vocab, shape):
    return {table_id: encode_table(table, vocab, shape)
            for table_id, table in corpus.tables.items()}


def tiny_setup(seed=0, shape=TINY_SHAPE, queries=3, use_caption=True,
               variant='attention', dimension=3, hidden=2, mlp=3):
    """A random model with the encoded tables of a synthetic corpus."""
    corpus = generate_synthetic_corpus(queries, 2, 3, seed)
    vocab = build_vocab(corpus)
    config = ModelConfig(embedding_dim=dimension, hidden_size=hidden,
                         mlp_size=mlp, variant=variant,
                         use_caption=use_caption)
    model = build_model(vocab, random_embedding(vocab, dimension, seed),
                        shape, config, seed)
    return model, corpus, encode_corpus(corpus, vocab, shape)


def synonym_setup(queries=24, seed=0, dimension=8):
    """A model initialized with synonym vectors on a synthetic corpus."""
    lexicon = Lexicon(4, seed=seed)
    corpus = generate_synthetic_corpus(queries, 4, 4, seed, lexicon=lexicon)
    vocab = build_vocab(corpus)
    shape = ShapeConfig(4, 4, 1, 3)
    vectors = synonym_vectors(lexicon, dimension, seed)
    embedding = Embedding(pretrained_matrix(vectors, vocab, dimension, seed))
    config = ModelConfig(embedding_dim=dimension, hidden_size=8, mlp_size=8)
    model = build_model(vocab, embedding, shape, config, seed)
    return model, corpus, encode_corpus(corpus, vocab, shape)


def perturb(model, seed):
    """Move every parameter away from its initial value."""
    rng = np.random.default_rng(seed)
    for param in model.parameters().values():
        param.value = param.value + rng.normal(scale=0.1,
                                               size=param.shape)
