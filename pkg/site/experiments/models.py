"""Experiments models."""

import math

from django.db.models import (CASCADE, Avg, CharField, DateTimeField,
                              FloatField, ForeignKey, IntegerField, Manager,
                              Model, PositiveIntegerField)
from django.utils.translation import gettext_lazy as _

SCORES = ('precision', 'recall', 'f1', 'accuracy', 'auc', 'ndcg_5',
          'ndcg_10')


class EvaluationRun(Model):
    """One cross-validation run over a corpus."""
    corpus = CharField(_('corpus'), max_length=255)
    seed = IntegerField(_('seed'))
    k_folds = PositiveIntegerField(_('folds'))
    created = DateTimeField(_('created'), auto_now_add=True)

    def __str__(self):
        return u'{0}'.format(self.id)

    class Meta(object):
        """Evaluation run metadata."""
        ordering = ['-created']
        get_latest_by = 'created'


def _stored(value):
    return None if value is None or math.isnan(value) else value


class MethodResultManager(Manager):
    """Custom manager for method results.

    Fold rows carry their fold number; the row with a null fold holds the
    mean computed by the evaluation.
    """

    def record(self, run, reports):
        """Store every fold and the mean of each ``EvalReport``."""
        rows = []
        for report in reports.values():
            for fold in report.folds:
                rows.append(self._row(run, report.method, fold.fold,
                                      fold.scores()))
            rows.append(self._row(run, report.method, None, report.mean()))
        return self.bulk_create(rows)

    def _row(self, run, method, fold, scores):
        values = {name: _stored(scores.get(name.replace('_', '@')))
                  for name in SCORES}
        return self.model(run=run, method=method, fold=fold, **values)

    def mean_scores(self, run):
        """Average the fold rows of ``run`` per method.

        The returned values are named ``mean_<score>``; undefined fold
        scores are left out of the averages.
        """
        qs = self.filter(run=run, fold__isnull=False)
        return qs.values('method').annotate(
            **{'mean_' + name: Avg(name) for name in SCORES}).order_by(
                'method')


class MethodResult(Model):
    """Scores of one method on one fold of a run."""
    run = ForeignKey(EvaluationRun, verbose_name=_('run'),
                     on_delete=CASCADE)
    method = CharField(_('method'), max_length=20, db_index=True)
    fold = PositiveIntegerField(_('fold'), null=True, blank=True)
    precision = FloatField(_('precision'))
    recall = FloatField(_('recall'))
    f1 = FloatField(_('F1'))
    accuracy = FloatField(_('accuracy'))
    auc = FloatField(_('AUC'), null=True)
    ndcg_5 = FloatField(_('NDCG@5'), null=True)
    ndcg_10 = FloatField(_('NDCG@10'), null=True)

    objects = MethodResultManager()

    def __str__(self):
        return u'{0}'.format(self.id)

    class Meta(object):
        """Method result metadata."""
        ordering = ('run', 'method', 'fold')
