"""Pair features of the logistic regression baseline."""

import numpy as np

from baselines.bags import caption_tokens, content_tokens
from baselines.tfidf import tfidf_vector
from baselines.vectors import avg_embedding


def text_vector(tokens, tfidf, vectors):
    return np.concatenate([tfidf_vector(tfidf, tokens),
                           avg_embedding(tokens, vectors)])


def pair_features(query, candidate, tfidf, vectors):
    """Absolute caption and content differences of two tables."""
    parts = []
    for extract in (caption_tokens, content_tokens):
        parts.append(np.abs(text_vector(extract(query), tfidf, vectors) -
                            text_vector(extract(candidate), tfidf, vectors)))
    return np.concatenate(parts)
