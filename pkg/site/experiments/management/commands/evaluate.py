import io
import logging

from django.core.exceptions import ImproperlyConfigured

from experiments.management.base import ExperimentCommand
from experiments.methods import build_methods
from experiments.models import SCORES, EvaluationRun, MethodResult
from metrics import dump_reports, evaluate_cv, fleiss_kappa, summary_rows

logger = logging.getLogger(__name__)


def _format(value):
    return 'nan' if value is None else '{0:.4f}'.format(value)


class Command(ExperimentCommand):
    """Cross-validate the configured methods and store their scores."""
    help = 'Evaluate table similarity methods with k-fold cross validation'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--parallel-eval', action='store_true',
                            dest='parallel_eval',
                            help='evaluate folds concurrently')
        parser.add_argument('--no-record', action='store_true',
                            dest='no_record',
                            help='do not store the run in the database')

    def agreement(self, corpus):
        ratings = corpus.ratings()
        if not len(ratings):
            return None
        try:
            return fleiss_kappa(ratings)
        except ValueError as e:
            logger.warning('No inter-annotator agreement: %s', e)
            return None

    def run(self, config, *args, **options):
        if not config.methods:
            raise ImproperlyConfigured('run.methods is empty')
        corpus = self.load_corpus(config)
        reports = evaluate_cv(corpus, build_methods(config), config.k_folds,
                              config.seed, parallel=options['parallel_eval'],
                              cutoffs=config.ndcg_cutoffs, gain=config.gain)
        overlap = tuple(config.overlap)
        if not set(overlap) <= set(reports):
            logger.warning('Error overlap skipped: %s not all evaluated',
                           ', '.join(overlap))
            overlap = ()
        dump_reports(reports, config.output_path('reports.json'), overlap,
                     self.agreement(corpus))
        summary = summary_rows(reports)
        with io.open(config.output_path('summary.tsv'), 'w', encoding='utf-8',
                     newline='\n') as output:
            output.write(summary)
        if options['no_record']:
            self.stdout.write(summary, ending='')
            return
        run = EvaluationRun.objects.create(corpus=config.corpus,
                                           seed=config.seed,
                                           k_folds=config.k_folds)
        MethodResult.objects.record(run, reports)
        self.stdout.write('\t'.join(('method',) + SCORES))
        for row in MethodResult.objects.mean_scores(run):
            self.stdout.write('\t'.join(
                [row['method']] +
                [_format(row['mean_' + name]) for name in SCORES]))
