"""Corpus documents, gold labels, folds and synthetic corpora."""

from corpusio.corpus import (ALIGNMENT, DISSIMILAR, KEYWORD, PMC, SIMILAR,
                             STYLES, Corpus, FoldAssignment, LabeledPair,
                             QueryGroup)
from corpusio.document import (derive_groups, dump_corpus, dumps_corpus,
                               load_corpus, loads_corpus)
from corpusio.folds import kfold_split
from corpusio.labels import (aggregate_pmc_label,
                             derive_pairs_from_query_relevance,
                             map_alignment_label, pmc_rank_gain)
from corpusio.synthetic import (Lexicon, generate_synthetic_corpus,
                                synonym_vectors)
