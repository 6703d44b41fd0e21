from experiments.management.base import ExperimentCommand
from siamese import rank_candidates


class Command(ExperimentCommand):
    """Rank the candidates of a query table by distance.

    Candidates are the query group when the corpus has one, every other
    table otherwise.
    """
    help = 'Rank candidate tables for a query table'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('query')
        parser.add_argument('--checkpoint', required=True)

    def run(self, config, *args, **options):
        corpus = self.load_corpus(config)
        query = options['query']
        candidates = [t for t in corpus.tables if t != query]
        for group in corpus.groups:
            if group.query_id == query:
                candidates = list(group.candidate_ids)
        model, encoded = self.checkpoint_tables(
            config, corpus, options['checkpoint'], [query] + candidates)
        ranked = rank_candidates(model, encoded[query],
                                 [encoded[c] for c in candidates])
        for position, (table_id, value) in enumerate(ranked, 1):
            self.stdout.write('{0}\t{1}\t{2:.17g}'.format(position, table_id,
                                                          value))
