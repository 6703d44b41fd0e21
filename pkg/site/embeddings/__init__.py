"""Vocabularies and word embeddings."""

from embeddings.cooccurrence import (COLUMN_LEVEL, TABLE_LEVEL,
                                     column_cooccurrence_pairs, corpus_pairs,
                                     table_cooccurrence_pairs, window_pairs)
from embeddings.skipgram import SkipgramConfig, initial_vectors, train_skipgram
from embeddings.strategies import (COLUMN_SKIPGRAM, FILE, RANDOM, STRATEGIES,
                                   TABLE_SKIPGRAM, initial_embedding,
                                   train_corpus_vectors)
from embeddings.vectors import (EmbeddingFile, WordVectors, load_pretrained,
                                pretrained_matrix, random_embedding,
                                random_matrix)
from embeddings.vocabulary import (PAD_TOKEN, UNK_TOKEN, Vocabulary,
                                   build_vocab, table_tokens)
