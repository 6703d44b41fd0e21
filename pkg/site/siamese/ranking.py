"""Distances between cached table representations."""

from siamese.loss import classify
from siamese.model import represent, vector_distance


class TableVectors(object):
    """Represent each table once and serve distances between them.

    Every table is encoded alone, so its vector never depends on which
    tables it is compared with and ``distance(a, b) == distance(b, a)``.
    """

    def __init__(self, model, encoded):
        self.model = model
        self.encoded = encoded
        self._vectors = {}

    def vector(self, table_id):
        if table_id not in self._vectors:
            self._vectors[table_id] = represent(self.model,
                                                self.encoded[table_id])
        return self._vectors[table_id]

    def distance(self, first_id, second_id):
        return vector_distance(self.vector(first_id), self.vector(second_id))

    def classify(self, first_id, second_id):
        return classify(self.distance(first_id, second_id),
                        self.model.margin)


def rank_candidates(model, query, candidates):
    """Order ``candidates`` by ascending distance to ``query``.

    Ties are broken by ascending table id. Returns ``(table_id, distance)``
    items.
    """
    target = represent(model, query)
    scored = [(vector_distance(target, represent(model, candidate)),
               candidate.table_id) for candidate in candidates]
    return [(table_id, d) for d, table_id in sorted(scored)]
