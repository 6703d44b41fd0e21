"""Gold label rules of the three corpus styles."""

import logging

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from corpusio.corpus import DISSIMILAR, SIMILAR, LabeledPair

logger = logging.getLogger(__name__)

SIMILAR_GRADE = 2


def check_label(label, name='label', top=2):
    if (isinstance(label, bool) or not isinstance(label, int) or
            label not in range(top + 1)):
        raise ValidationError(
            _('%(name)s must be an integer in [0, %(top)s], got %(label)r.'),
            code='label_range',
            params={'name': name, 'top': top, 'label': label})
    return label


def aggregate_pmc_label(caption_label, content_label):
    """A pair is dissimilar only when caption and content both are."""
    check_label(caption_label, 'caption_label')
    check_label(content_label, 'content_label')
    if caption_label == 0 and content_label == 0:
        return DISSIMILAR
    return SIMILAR


def pmc_rank_gain(caption_label, content_label):
    return caption_label + content_label


def map_alignment_label(label):
    """Return ``(binary_label, rank_gain)`` of an alignment label."""
    check_label(label, 'alignment')
    return (SIMILAR if label else DISSIMILAR), label


def derive_pairs_from_query_relevance(judgments):
    """Derive table pairs from graded keyword query judgments.

    ``judgments`` maps each query to ``(table_id, grade)`` items with grades
    in [0, 3]. Tables graded at least ``SIMILAR_GRADE`` are similar to each
    other and dissimilar to the rest; pairs of two lower graded tables are
    left out. Tables are ordered by id within a query so the result does not
    depend on the judgment order. The first query labelling an unordered
    pair wins.
    """
    pairs = []
    seen = set()
    for query in sorted(judgments):
        grades = {}
        for table_id, grade in judgments[query]:
            grades[table_id] = check_label(grade, 'grade', top=3)
        ids = sorted(grades)
        for i, first in enumerate(ids):
            for second in ids[i + 1:]:
                high = [t for t in (first, second)
                        if grades[t] >= SIMILAR_GRADE]
                if not high:
                    continue
                if len(high) == 2:
                    query_id, cand_id, label = first, second, SIMILAR
                else:
                    query_id = high[0]
                    cand_id = second if query_id == first else first
                    label = DISSIMILAR
                key = frozenset((query_id, cand_id))
                if key in seen:
                    logger.debug('Pair %s/%s already labeled', query_id,
                                 cand_id)
                    continue
                seen.add(key)
                score = 2 if label == SIMILAR else 0
                pairs.append(LabeledPair(query_id, cand_id, score, score,
                                         label, grades[cand_id]))
    return pairs
