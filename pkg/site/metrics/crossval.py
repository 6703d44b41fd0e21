"""K-fold evaluation of table similarity methods.

A method is fitted on the training pairs of every fold, then scores the
test pairs. Classification metrics use the threshold of the fitted
scorer; ranking metrics order the test candidates of every query group.
"""

import logging
from dataclasses import dataclass, field

import numpy as np
from django.core.exceptions import ImproperlyConfigured
from joblib import Parallel, delayed

from baselines.scores import DISTANCE, SIMILARITY
from corpusio import DISSIMILAR, SIMILAR, kfold_split
from metrics.classification import prf_macro
from metrics.errors import error_sets
from metrics.ranking import EXPONENTIAL, ndcg_at_k, roc_auc, roc_points

logger = logging.getLogger(__name__)

NDCG_CUTOFFS = (5, 10)


class Scorer(object):
    """A method fitted on one training split."""

    orientation = SIMILARITY
    threshold = 0.5

    def score(self, query_id, cand_id):
        """Return the ``MethodScore`` of a pair of table ids."""
        raise NotImplementedError

    def classify(self, score):
        if score.orientation == DISTANCE:
            similar = score.value < self.threshold
        else:
            similar = score.value >= self.threshold
        return SIMILAR if similar else DISSIMILAR


class Method(object):
    """A named, possibly trainable, similarity method.

    ``parallel_safe`` methods share no mutable state between fits, so their
    folds may be evaluated concurrently.
    """

    name = None
    parallel_safe = True

    def fit(self, corpus, train_indices, seed):
        """Return a ``Scorer`` trained on the pairs at ``train_indices``."""
        raise NotImplementedError


@dataclass
class FoldReport(object):
    fold: int
    size: int
    precision: float
    recall: float
    f1: float
    accuracy: float
    auc: float
    ndcg: dict
    false_negatives: set = field(default_factory=set)
    false_positives: set = field(default_factory=set)

    def scores(self):
        values = {'precision': self.precision, 'recall': self.recall,
                  'f1': self.f1, 'accuracy': self.accuracy,
                  'auc': self.auc}
        for cutoff, value in sorted(self.ndcg.items()):
            values['ndcg@{0}'.format(cutoff)] = value
        return values


@dataclass
class EvalReport(object):
    """The folds of one method plus its pooled ROC curve."""
    method: str
    folds: list
    roc: list = field(default_factory=list)

    def mean(self):
        """Mean of every score over the folds where it is defined."""
        rows = [fold.scores() for fold in self.folds]
        means = {}
        for name in rows[0]:
            values = np.array([row[name] for row in rows], dtype=np.float64)
            means[name] = (float(np.nanmean(values))
                           if not np.all(np.isnan(values)) else float('nan'))
        return means

    @property
    def false_negatives(self):
        return set().union(*[fold.false_negatives for fold in self.folds])

    @property
    def false_positives(self):
        return set().union(*[fold.false_positives for fold in self.folds])


def _safe_auc(scores, gold):
    try:
        return roc_auc(scores, gold)
    except ValueError:
        return float('nan')


def group_ndcg(corpus, scored, cutoffs=NDCG_CUTOFFS, gain=EXPONENTIAL):
    """Mean NDCG over the query groups with scored candidates.

    ``scored`` maps pair indices to their ``MethodScore``. Candidates are
    ranked by decreasing similarity, ties by table id. Groups without any
    scored candidate are skipped, and so are groups whose scored
    candidates all have gain 0. No group left gives ``nan``.
    """
    index = corpus.pair_index()
    values = {cutoff: [] for cutoff in cutoffs}
    for group in corpus.groups:
        ranked = []
        for cand_id in group.candidate_ids:
            k = index.get(frozenset((group.query_id, cand_id)))
            if k in scored:
                ranked.append((-scored[k].oriented, cand_id,
                               corpus.pairs[k].rank_gain))
        gains = [gain_value for _, _, gain_value in sorted(ranked)]
        if not any(gains):
            continue
        for cutoff in cutoffs:
            values[cutoff].append(ndcg_at_k(gains, cutoff, gain))
    return {cutoff: float(np.mean(v)) if v else float('nan')
            for cutoff, v in values.items()}


def evaluate_fold(corpus, method, folds, fold, seed, cutoffs=NDCG_CUTOFFS,
                  gain=EXPONENTIAL):
    """Fit ``method`` on the training split of ``fold`` and score its test
    split.

    Returns the ``FoldReport`` plus the test scores and gold labels.
    """
    train_indices = folds.train_indices(fold)
    test_indices = folds.test_indices(fold)
    scorer = method.fit(corpus, train_indices, seed + fold)
    scored, predictions, gold, pair_ids = {}, [], [], []
    for k in test_indices:
        pair = corpus.pairs[k]
        score = scorer.score(pair.query_id, pair.cand_id)
        scored[int(k)] = score
        predictions.append(scorer.classify(score))
        gold.append(pair.binary_label)
        pair_ids.append((pair.query_id, pair.cand_id))
    precision, recall, f1, accuracy = prf_macro(predictions, gold)
    false_negatives, false_positives = error_sets(pair_ids, predictions,
                                                  gold)
    scores = [scored[int(k)] for k in test_indices]
    report = FoldReport(
        fold=fold, size=len(test_indices), precision=precision,
        recall=recall, f1=f1, accuracy=accuracy,
        auc=_safe_auc(scores, gold),
        ndcg=group_ndcg(corpus, scored, cutoffs, gain),
        false_negatives=false_negatives, false_positives=false_positives)
    logger.info('%s fold %d: f1 %.4f accuracy %.4f auc %.4f', method.name,
                fold, f1, accuracy, report.auc)
    return report, scores, gold


def evaluate_cv(corpus, methods, k_folds=5, seed=0, parallel=False,
                cutoffs=NDCG_CUTOFFS, gain=EXPONENTIAL):
    """Cross-validate every method on the same folds.

    Returns an ``EvalReport`` per method name, in the order of
    ``methods``. Folds run concurrently only when ``parallel`` is set and
    every method is ``parallel_safe``.
    """
    if not methods:
        raise ImproperlyConfigured('run.methods must name at least one '
                                   'method')
    folds = kfold_split(len(corpus.pairs), k_folds, seed)
    jobs = [(method, fold) for method in methods for fold in range(k_folds)]
    if parallel and not all(method.parallel_safe for method in methods):
        logger.warning('Evaluating folds sequentially: some methods are '
                       'not safe to run concurrently')
        parallel = False
    if parallel:
        results = Parallel(n_jobs=-1, prefer='threads')(
            delayed(evaluate_fold)(corpus, method, folds, fold, seed,
                                   cutoffs, gain)
            for method, fold in jobs)
    else:
        results = [evaluate_fold(corpus, method, folds, fold, seed, cutoffs,
                                 gain)
                   for method, fold in jobs]
    reports = {}
    for method in methods:
        outcome = [r for (m, _), r in zip(jobs, results) if m is method]
        scores = [s for _, fold_scores, _ in outcome for s in fold_scores]
        gold = [g for _, _, fold_gold in outcome for g in fold_gold]
        try:
            roc = roc_points(scores, gold)
        except ValueError:
            roc = []
        reports[method.name] = EvalReport(
            method.name, [report for report, _, _ in outcome], roc)
    return reports
