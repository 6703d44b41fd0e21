"""Reading and writing corpus documents.

A corpus document is a UTF-8 JSON object with the keys ``style``,
``tables``, ``pairs`` and, optionally, ``groups``. Pair objects carry
``caption_label`` and ``content_label`` in the ``pmc`` style, ``grade`` in
the ``keyword`` style and ``alignment`` in the ``alignment`` style. Any
pair may also carry ``ratings``, the number of annotators per category.
"""

import io
import json
import logging

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from corpusio.corpus import (ALIGNMENT, KEYWORD, PMC, STYLES, Corpus,
                             LabeledPair, QueryGroup)
from corpusio.labels import (aggregate_pmc_label,
                             derive_pairs_from_query_relevance,
                             map_alignment_label, pmc_rank_gain)
from tablecore import (HORIZONTAL, VERTICAL, Cell, RawTable,
                       expand_merged_cells, normalize_orientation)

logger = logging.getLogger(__name__)

ORIENTATIONS = {'h': HORIZONTAL, 'v': VERTICAL}


def _parse_error(message, **params):
    return ValidationError(message, code='parse', params=params)


def _field(item, name, where, kind=None):
    try:
        value = item[name]
    except (KeyError, TypeError):
        raise _parse_error(_('Missing field "%(field)s" in %(where)s.'),
                           field=name, where=where)
    if kind is not None and not isinstance(value, kind):
        raise _parse_error(_('Field "%(field)s" of %(where)s has a wrong '
                             'type.'), field=name, where=where)
    return value


def _span(cell, name, where):
    value = cell.get(name, 1)
    if isinstance(value, bool) or not isinstance(value, int):
        raise _parse_error(_('Field "%(field)s" of %(where)s must be an '
                             'integer.'), field=name, where=where)
    return value


def parse_cell(cell, where):
    if not isinstance(cell, dict):
        raise _parse_error(_('Cells of %(where)s must be objects.'),
                           where=where)
    return Cell(str(_field(cell, 'text', where)),
                _span(cell, 'row_span', where),
                _span(cell, 'col_span', where))


def parse_table(item, position):
    """Build a horizontal ``RawTable`` with expanded merged cells."""
    where = 'table {0}'.format(position)
    table_id = _field(item, 'id', where, str)
    if not table_id:
        raise _parse_error(_('Empty table id in %(where)s.'), where=where)
    where = 'table "{0}"'.format(table_id)
    orientation = item.get('orientation', 'h')
    if not isinstance(orientation, str) or orientation not in ORIENTATIONS:
        raise _parse_error(_('Unknown orientation "%(value)s" in '
                             '%(where)s.'), value=orientation, where=where)
    grid = []
    for row in _field(item, 'grid', where, list):
        if not isinstance(row, list):
            raise _parse_error(_('Rows of %(where)s must be arrays.'),
                               where=where)
        grid.append(tuple(parse_cell(cell, where) for cell in row))
    table = RawTable(table_id, str(item.get('caption', '')),
                     ORIENTATIONS[orientation],
                     expand_merged_cells(tuple(grid)),
                     bool(item.get('header', True)))
    return normalize_orientation(table)


def _ratings(item, where):
    ratings = item.get('ratings', [])
    if not isinstance(ratings, list) or not all(
            isinstance(n, int) and not isinstance(n, bool) and n >= 0
            for n in ratings):
        raise _parse_error(_('Ratings of %(where)s must be an array of '
                             'non-negative counts.'), where=where)
    return tuple(ratings)


def parse_pairs(items, style):
    """Apply the labeling rule of ``style`` to the pair objects."""
    if style == KEYWORD:
        judgments = {}
        for position, item in enumerate(items):
            where = 'judgment {0}'.format(position)
            judgments.setdefault(str(_field(item, 'query', where)), []).append(
                (_field(item, 'cand', where, str),
                 _field(item, 'grade', where)))
        return derive_pairs_from_query_relevance(judgments)
    pairs = []
    for position, item in enumerate(items):
        where = 'pair {0}'.format(position)
        query = _field(item, 'query', where, str)
        cand = _field(item, 'cand', where, str)
        if style == PMC:
            caption = _field(item, 'caption_label', where)
            content = _field(item, 'content_label', where)
            label = aggregate_pmc_label(caption, content)
            gain = pmc_rank_gain(caption, content)
        else:
            alignment = _field(item, 'alignment', where)
            label, gain = map_alignment_label(alignment)
            caption = content = alignment
        pairs.append(LabeledPair(query, cand, caption, content, label, gain,
                                 _ratings(item, where)))
    return pairs


def derive_groups(pairs):
    """One group per query, candidates in order of appearance."""
    groups = {}
    for pair in pairs:
        groups.setdefault(pair.query_id, []).append(pair.cand_id)
    return tuple(QueryGroup(query, tuple(cands))
                 for query, cands in groups.items())


def validate(corpus):
    """Check pair references, duplicate pairs and group membership."""
    seen = set()
    for pair in corpus.pairs:
        for table_id in (pair.query_id, pair.cand_id):
            if table_id not in corpus.tables:
                raise ValidationError(
                    _('Pair references unknown table "%(id)s".'),
                    code='dangling_id', params={'id': table_id})
        if pair.key in seen:
            raise ValidationError(
                _('Pair "%(query)s"/"%(cand)s" is listed twice.'),
                code='duplicate_pair',
                params={'query': pair.query_id, 'cand': pair.cand_id})
        seen.add(pair.key)
    if len({len(p.ratings) for p in corpus.pairs if p.ratings}) > 1:
        raise _parse_error(_('Ratings must count the same categories for '
                             'every pair.'))
    for group in corpus.groups:
        if len(set(group.candidate_ids)) != len(group.candidate_ids):
            raise ValidationError(
                _('Group "%(query)s" repeats a candidate.'),
                code='duplicate_pair', params={'query': group.query_id})
        for cand in group.candidate_ids:
            if frozenset((group.query_id, cand)) not in seen:
                raise ValidationError(
                    _('Group "%(query)s" lists "%(id)s" without a pair.'),
                    code='dangling_id',
                    params={'query': group.query_id, 'id': cand})
    return corpus


def loads_corpus(text):
    try:
        document = json.loads(text)
    except ValueError as error:
        raise _parse_error(_('Invalid corpus document at line %(line)s, '
                             'column %(column)s: %(reason)s'),
                           line=getattr(error, 'lineno', 0),
                           column=getattr(error, 'colno', 0),
                           reason=getattr(error, 'msg', str(error)))
    if not isinstance(document, dict):
        raise _parse_error(_('A corpus document must be an object.'))
    style = document.get('style', PMC)
    if not isinstance(style, str) or style not in STYLES:
        raise _parse_error(_('Unknown corpus style "%(style)s".'),
                           style=style)
    tables = {}
    for position, item in enumerate(_field(document, 'tables', 'corpus',
                                           list)):
        table = parse_table(item, position)
        if table.id in tables:
            raise _parse_error(_('Table id "%(id)s" is not unique.'),
                               id=table.id)
        tables[table.id] = table
    pairs = tuple(parse_pairs(_field(document, 'pairs', 'corpus', list),
                              style))
    if 'groups' in document:
        groups = tuple(
            QueryGroup(_field(item, 'query', 'group', str),
                       tuple(_field(item, 'candidates', 'group', list)))
            for item in _field(document, 'groups', 'corpus', list))
    else:
        groups = derive_groups(pairs)
    corpus = validate(Corpus(tables, pairs, groups, style))
    logger.debug('Loaded %d tables, %d pairs and %d groups', len(tables),
                 len(pairs), len(groups))
    return corpus


def load_corpus(path):
    """Read and validate the corpus document at ``path``."""
    with io.open(path, encoding='utf-8') as source:
        return loads_corpus(source.read())


def table_document(table):
    return {
        'id': table.id,
        'caption': table.caption,
        'orientation': 'h' if table.orientation == HORIZONTAL else 'v',
        'header': table.has_header_row,
        'grid': [[{'text': cell.text} for cell in row] for row in table.grid],
    }


def pair_document(pair, style):
    item = {'query': pair.query_id, 'cand': pair.cand_id}
    if style == ALIGNMENT:
        item['alignment'] = pair.rank_gain
    else:
        item['caption_label'] = pair.caption_label
        item['content_label'] = pair.content_label
    if pair.ratings:
        item['ratings'] = list(pair.ratings)
    return item


def dumps_corpus(corpus):
    """Serialize ``corpus`` as a document with sorted keys.

    Keyword corpora are written with their derived pair labels in the
    ``pmc`` style.
    """
    style = ALIGNMENT if corpus.style == ALIGNMENT else PMC
    document = {
        'style': style,
        'tables': [table_document(t) for t in corpus.tables.values()],
        'pairs': [pair_document(p, style) for p in corpus.pairs],
        'groups': [{'query': g.query_id, 'candidates': list(g.candidate_ids)}
                   for g in corpus.groups],
    }
    return json.dumps(document, sort_keys=True, indent=1,
                      ensure_ascii=False) + '\n'


def dump_corpus(corpus, path):
    with io.open(path, 'w', encoding='utf-8', newline='\n') as output:
        output.write(dumps_corpus(corpus))
