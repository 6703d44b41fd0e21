"""The base class of the experiment commands."""

import logging

from django.core.exceptions import ImproperlyConfigured, ValidationError
from django.core.management.base import BaseCommand, CommandError
from django.utils.translation import gettext_lazy as _

from corpusio import load_corpus
from experiments.config import dotted_names, load_run_config
from experiments.methods import encode_tables
from siamese import load_checkpoint
from tensorcore import LookupRangeError, NonFiniteError, ShapeError

logger = logging.getLogger(__name__)

CONFIG_ERROR = 2
DATA_ERROR = 3
INTERNAL_ERROR = 4


class ExperimentCommand(BaseCommand):
    """Parse the run configuration and map failures to exit codes.

    Subclasses implement ``run(config, *args, **options)``.
    """

    def add_arguments(self, parser):
        parser.add_argument('--config', dest='manifest',
                            help='INI experiment manifest')
        parser.add_argument('--seed', type=int, help='random seed of the run')
        parser.add_argument('--out', help='output directory')
        for name in dotted_names():
            parser.add_argument('--' + name, dest=name,
                                metavar=name.split('.')[1].upper())

    def handle(self, *args, **options):
        try:
            config = load_run_config(
                options['manifest'],
                {name: options.get(name) for name in dotted_names()},
                options['seed'], options['out'])
            self.run(config, *args, **options)
        except ImproperlyConfigured as e:
            raise CommandError(str(e), returncode=CONFIG_ERROR)
        except ValidationError as e:
            raise CommandError('; '.join(e.messages), returncode=DATA_ERROR)
        except (ShapeError, LookupRangeError, NonFiniteError,
                AssertionError) as e:
            logger.exception('Internal error')
            raise CommandError(str(e), returncode=INTERNAL_ERROR)

    def load_corpus(self, config):
        return load_corpus(config.corpus_path())

    def checkpoint_tables(self, config, corpus, checkpoint, table_ids):
        """Load the model of ``checkpoint`` and encode the corpus with it.

        Every id of ``table_ids`` must name a table of ``corpus``.
        """
        model, _metadata = load_checkpoint(
            config.require_file(checkpoint, '--checkpoint'))
        for table_id in table_ids:
            if table_id not in corpus.tables:
                raise ValidationError(_('Unknown table %(table)s.'),
                                      code='dangling_id',
                                      params={'table': table_id})
        return model, encode_tables(corpus, model.vocab, model.shape)

    def run(self, config, *args, **options):
        raise NotImplementedError
