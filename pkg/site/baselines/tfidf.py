"""Term frequency times inverse document frequency."""

import numpy as np
from sklearn.feature_extraction.text import CountVectorizer


def _as_tokens(document):
    return document


class TfIdfModel(object):
    """Raw counts weighted by ``ln(documents / document frequency)``."""

    def __init__(self, vectorizer, document_frequency, documents):
        self.vectorizer = vectorizer
        self.document_frequency = document_frequency
        self.documents = documents
        self.idf = np.log(documents / document_frequency)

    @property
    def dimension(self):
        return len(self.idf)

    @property
    def terms(self):
        return self.vectorizer.get_feature_names_out()


def tfidf_fit(documents):
    """Fit on token lists; every stored term occurs in some document."""
    documents = [list(tokens) for tokens in documents]
    vectorizer = CountVectorizer(analyzer=_as_tokens)
    frequency = np.zeros(0)
    if any(documents):
        counts = vectorizer.fit_transform(documents)
        frequency = np.asarray((counts > 0).sum(axis=0),
                               dtype=np.float64).ravel()
    return TfIdfModel(vectorizer, frequency, len(documents))


def tfidf_vector(model, tokens):
    """Dense tf-idf weights of one token list; unknown terms are dropped."""
    if not model.dimension:
        return np.zeros(0)
    counts = model.vectorizer.transform([list(tokens)]).toarray().ravel()
    return counts * model.idf
