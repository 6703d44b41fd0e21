"""Word embedding table similarity."""

import numpy as np

from baselines.bags import caption_tokens, content_tokens
from baselines.matching import hungarian_max_matching
from baselines.scores import MethodScore
from tablecore import tokenize


def avg_embedding(tokens, vectors):
    """Mean vector of the in-vocabulary ``tokens``; zero when none is."""
    rows = vectors.vectors_of(tokens)
    if not len(rows):
        return np.zeros(vectors.dimension)
    return rows.mean(axis=0)


def sum_embedding(tokens, vectors):
    return vectors.vectors_of(tokens).sum(axis=0)


def cosine(first, second):
    """Cosine similarity, 0 when either vector is zero."""
    norms = np.linalg.norm(first) * np.linalg.norm(second)
    if norms == 0.0:
        return 0.0
    return float(np.clip(np.dot(first, second) / norms, -1.0, 1.0))


def table_cosine(query, candidate, vectors):
    """Mean of the caption and content cosines of averaged embeddings."""
    caption = cosine(avg_embedding(caption_tokens(query), vectors),
                     avg_embedding(caption_tokens(candidate), vectors))
    content = cosine(avg_embedding(content_tokens(query), vectors),
                     avg_embedding(content_tokens(candidate), vectors))
    return MethodScore((caption + content) / 2.0)


def column_vectors(table, vectors):
    """One summed embedding per column."""
    return [sum_embedding([t for text in column for t in tokenize(text)],
                          vectors)
            for column in table.columns()]


def cosine_matrix(first, second):
    return np.array([[cosine(u, v) for v in second] for u in first]).reshape(
        len(first), len(second))


def google_fusion_score(query, candidate, vectors):
    """Column matching on summed column embeddings, averaged with the
    caption cosine.

    The matching weight is divided by the smaller number of columns.
    """
    first = column_vectors(query, vectors)
    second = column_vectors(candidate, vectors)
    tabular = 0.0
    if first and second:
        _, total = hungarian_max_matching(cosine_matrix(first, second))
        tabular = total / min(len(first), len(second))
    caption = cosine(sum_embedding(caption_tokens(query), vectors),
                     sum_embedding(caption_tokens(candidate), vectors))
    return MethodScore((caption + tabular) / 2.0)
