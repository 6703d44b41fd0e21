"""Corpus types."""

from dataclasses import dataclass, field

import numpy as np

SIMILAR = 'similar'
DISSIMILAR = 'dissimilar'

PMC = 'pmc'
KEYWORD = 'keyword'
ALIGNMENT = 'alignment'
STYLES = (PMC, KEYWORD, ALIGNMENT)


@dataclass(frozen=True)
class LabeledPair(object):
    """A judged table pair.

    ``rank_gain`` is the graded relevance of ``cand_id`` for ``query_id``.
    ``ratings`` optionally holds how many annotators chose each category.
    """
    query_id: str
    cand_id: str
    caption_label: int
    content_label: int
    binary_label: str
    rank_gain: int
    ratings: tuple = ()

    @property
    def target(self):
        """The contrastive target: 0 for similar pairs, 1 otherwise."""
        return 0 if self.binary_label == SIMILAR else 1

    @property
    def key(self):
        return frozenset((self.query_id, self.cand_id))


@dataclass(frozen=True)
class QueryGroup(object):
    query_id: str
    candidate_ids: tuple


@dataclass(frozen=True)
class Corpus(object):
    """Tables by id, the labeled pairs and the ranking groups.

    Tables keep the order of the corpus document.
    """
    tables: dict = field(default_factory=dict)
    pairs: tuple = ()
    groups: tuple = ()
    style: str = PMC

    def targets(self, indices=None):
        pairs = self.pairs if indices is None else [
            self.pairs[k] for k in indices]
        return np.array([p.target for p in pairs], dtype=np.int64)

    def table_ids_of(self, indices):
        """Ids of the tables referenced by the pairs at ``indices``."""
        ids = set()
        for k in indices:
            ids.update((self.pairs[k].query_id, self.pairs[k].cand_id))
        return [table_id for table_id in self.tables if table_id in ids]

    def pair_index(self):
        """Map each unordered pair to its position in ``pairs``."""
        return {pair.key: k for k, pair in enumerate(self.pairs)}

    def ratings(self):
        """Stack the annotator counts of the pairs that carry them."""
        rows = [pair.ratings for pair in self.pairs if pair.ratings]
        if not rows:
            return np.zeros((0, 0), dtype=np.int64)
        return np.array(rows, dtype=np.int64)


@dataclass(frozen=True)
class FoldAssignment(object):
    """The fold of every pair."""
    fold_of_pair: np.ndarray
    k: int

    def test_indices(self, fold):
        return np.flatnonzero(self.fold_of_pair == fold)

    def train_indices(self, fold):
        return np.flatnonzero(self.fold_of_pair != fold)

    def sizes(self):
        return np.bincount(self.fold_of_pair, minlength=self.k)
