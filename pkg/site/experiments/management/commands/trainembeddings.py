from django.core.exceptions import ImproperlyConfigured

from embeddings import (COLUMN_LEVEL, COLUMN_SKIPGRAM, TABLE_LEVEL,
                        TABLE_SKIPGRAM, build_vocab, train_corpus_vectors)
from experiments.management.base import ExperimentCommand

LEVELS = {TABLE_SKIPGRAM: TABLE_LEVEL, COLUMN_SKIPGRAM: COLUMN_LEVEL}


class Command(ExperimentCommand):
    """Train skip-gram vectors on the tables of a corpus."""
    help = 'Train word embeddings on a corpus'

    def run(self, config, *args, **options):
        if config.strategy not in LEVELS:
            raise ImproperlyConfigured(
                'embeddings.strategy must be one of {0} to train vectors'
                .format(', '.join(LEVELS)))
        corpus = self.load_corpus(config)
        vocab = build_vocab(corpus)
        vectors = train_corpus_vectors(corpus, vocab, config.skipgram,
                                       LEVELS[config.strategy])
        path = config.output_path('embeddings.txt')
        vectors.write(path)
        self.stdout.write('{0} vectors of dimension {1} written to {2}'
                          .format(len(vectors), vectors.dimension, path))
