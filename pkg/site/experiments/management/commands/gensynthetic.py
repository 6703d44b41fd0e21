from corpusio import (Lexicon, dump_corpus, generate_synthetic_corpus,
                      synonym_vectors)
from experiments.management.base import ExperimentCommand


class Command(ExperimentCommand):
    """Write a synthetic corpus and the synonym vectors of its words."""
    help = 'Generate a synthetic corpus'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--queries', type=int, default=100)
        parser.add_argument('--candidates', type=int, default=4)
        parser.add_argument('--topics', type=int, default=8)
        parser.add_argument('--rows', type=int, default=4)
        parser.add_argument('--cols', type=int, default=4)

    def run(self, config, *args, **options):
        lexicon = Lexicon(options['topics'], seed=config.seed)
        corpus = generate_synthetic_corpus(
            options['queries'], options['candidates'], options['topics'],
            config.seed, lexicon=lexicon, n_rows=options['rows'],
            n_cols=options['cols'])
        corpus_path = config.output_path('corpus.json')
        dump_corpus(corpus, corpus_path)
        vectors_path = config.output_path('vectors.txt')
        synonym_vectors(lexicon, config.model.embedding_dim,
                        config.seed).write(vectors_path)
        self.stdout.write('Corpus of {0} pairs written to {1}'.format(
            len(corpus.pairs), corpus_path))
        self.stdout.write('Vectors written to {0}'.format(vectors_path))
