"""Overlap of the misclassified pairs of several methods."""

import itertools

from corpusio import DISSIMILAR, SIMILAR


def error_sets(pair_ids, predictions, gold):
    """Return the false negative and false positive pair ids."""
    false_negatives, false_positives = set(), set()
    for pair_id, predicted, actual in zip(pair_ids, predictions, gold):
        if actual == SIMILAR and predicted == DISSIMILAR:
            false_negatives.add(pair_id)
        elif actual == DISSIMILAR and predicted == SIMILAR:
            false_positives.add(pair_id)
    return false_negatives, false_positives


def venn_regions(sets):
    """Sizes of the regions of the Venn diagram of named sets.

    Keys are tuples of the names whose sets contain the region and no
    other; every non-empty combination is listed.
    """
    names = list(sets)
    regions = {}
    for size in range(1, len(names) + 1):
        for inside in itertools.combinations(names, size):
            region = set.intersection(*[set(sets[n]) for n in inside])
            for name in names:
                if name not in inside:
                    region -= sets[name]
            regions[inside] = len(region)
    return regions


def error_overlap(errors):
    """Venn region sizes of the FN sets and of the FP sets.

    ``errors`` maps each method to its ``(FN set, FP set)``.
    """
    return {
        'fn': venn_regions({m: fn for m, (fn, _) in errors.items()}),
        'fp': venn_regions({m: fp for m, (_, fp) in errors.items()}),
    }
