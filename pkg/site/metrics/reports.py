"""Evaluation reports as documents and summary rows."""

import io
import json
import math

from metrics.errors import error_overlap

SUMMARY_COLUMNS = ('method', 'precision', 'recall', 'f1', 'accuracy', 'auc',
                   'ndcg@5', 'ndcg@10')


def _number(value):
    return None if math.isnan(value) else value


def _pairs(ids):
    return [list(pair_id) for pair_id in sorted(ids)]


def report_document(report):
    return {
        'method': report.method,
        'folds': [dict({'fold': f.fold, 'size': f.size},
                       **{k: _number(v) for k, v in f.scores().items()})
                  for f in report.folds],
        'mean': {k: _number(v) for k, v in report.mean().items()},
        'false_negatives': _pairs(report.false_negatives),
        'false_positives': _pairs(report.false_positives),
        'roc': [{'fpr': fpr, 'tpr': tpr,
                 'threshold': None if math.isinf(t) else t}
                for fpr, tpr, t in report.roc],
    }


def overlap_document(reports, methods):
    """Venn region sizes of the errors of ``methods``.

    Regions are keyed by their method names joined with ``+``.
    """
    overlap = error_overlap({
        name: (reports[name].false_negatives, reports[name].false_positives)
        for name in methods})
    return {kind: {'+'.join(inside): size
                   for inside, size in regions.items()}
            for kind, regions in overlap.items()}


def dumps_reports(reports, overlap_methods=(), agreement=None):
    """Serialize ``reports`` with the optional error overlap and the
    inter-annotator agreement of the corpus."""
    document = {'reports': [report_document(r) for r in reports.values()]}
    if agreement is not None:
        document['agreement'] = {'fleiss_kappa': agreement}
    if overlap_methods:
        document['error_overlap'] = {
            'methods': list(overlap_methods),
            'regions': overlap_document(reports, overlap_methods),
        }
    return json.dumps(document, sort_keys=True, indent=1,
                      ensure_ascii=False) + '\n'


def dump_reports(reports, path, overlap_methods=(), agreement=None):
    with io.open(path, 'w', encoding='utf-8', newline='\n') as output:
        output.write(dumps_reports(reports, overlap_methods, agreement))


def summary_rows(reports):
    """Tab-separated mean scores, one line per method after a header."""
    lines = ['\t'.join(SUMMARY_COLUMNS)]
    for report in reports.values():
        mean = report.mean()
        lines.append('\t'.join(
            [report.method] +
            ['{0:.4f}'.format(mean.get(name, float('nan')))
             for name in SUMMARY_COLUMNS[1:]]))
    return '\n'.join(lines) + '\n'
