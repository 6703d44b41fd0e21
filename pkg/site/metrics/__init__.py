"""Classification, ranking and agreement metrics and the k-fold driver."""

from metrics.agreement import fleiss_kappa
from metrics.classification import (CLASSES, ConfusionCounts, per_class,
                                    prf_macro)
from metrics.crossval import (NDCG_CUTOFFS, EvalReport, FoldReport, Method,
                              Scorer, evaluate_cv, evaluate_fold, group_ndcg)
from metrics.errors import error_overlap, error_sets, venn_regions
from metrics.ranking import (EXPONENTIAL, GAINS, LINEAR, dcg, ndcg_at_k,
                             roc_auc, roc_points)
from metrics.reports import (SUMMARY_COLUMNS, dump_reports, dumps_reports,
                             overlap_document, report_document,
                             summary_rows)
