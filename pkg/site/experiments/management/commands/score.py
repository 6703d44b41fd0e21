from experiments.management.base import ExperimentCommand
from siamese import classify, distance


class Command(ExperimentCommand):
    """Print the distance of two tables and their predicted label."""
    help = 'Score a pair of tables with a trained model'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('first')
        parser.add_argument('second')
        parser.add_argument('--checkpoint', required=True)

    def run(self, config, *args, **options):
        corpus = self.load_corpus(config)
        first, second = options['first'], options['second']
        model, encoded = self.checkpoint_tables(
            config, corpus, options['checkpoint'], (first, second))
        value = distance(model, encoded[first], encoded[second])
        self.stdout.write('{0:.17g}\t{1}'.format(
            value, classify(value, model.margin)))
