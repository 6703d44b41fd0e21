import io

import numpy as np
from django.core.exceptions import ImproperlyConfigured

from corpusio import kfold_split
from experiments.management.base import ExperimentCommand
from experiments.methods import fit_tabsim
from siamese import save_checkpoint


class Command(ExperimentCommand):
    """Train a model and write its checkpoint and epoch losses."""
    help = 'Train the table similarity model'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--fold', type=int,
                            help='train on the training split of this fold')

    def run(self, config, *args, **options):
        corpus = self.load_corpus(config)
        fold = options.get('fold')
        if fold is None:
            indices = np.arange(len(corpus.pairs))
        else:
            if not 0 <= fold < config.k_folds:
                raise ImproperlyConfigured(
                    '--fold must lie in [0, {0})'.format(config.k_folds))
            folds = kfold_split(len(corpus.pairs), config.k_folds,
                                config.seed)
            indices = folds.train_indices(fold)
        model, _, history = fit_tabsim(config, corpus, indices, config.seed)
        checkpoint = config.output_path('model.ckpt')
        save_checkpoint(model, checkpoint,
                        {'seed': config.seed, 'fold': fold,
                         'strategy': config.strategy})
        losses = config.output_path('losses.tsv')
        with io.open(losses, 'w', encoding='utf-8', newline='\n') as output:
            output.write('epoch\tloss\n')
            for epoch, loss in enumerate(history, 1):
                output.write('{0}\t{1:.17g}\n'.format(epoch, loss))
        self.stdout.write('Checkpoint written to {0}'.format(checkpoint))
