"""Classification metrics over the similar and dissimilar classes."""

from dataclasses import dataclass

from corpusio import DISSIMILAR, SIMILAR

CLASSES = (SIMILAR, DISSIMILAR)


@dataclass(frozen=True)
class ConfusionCounts(object):
    """Counts of one class taken as the positive class."""
    tp: int
    fp: int
    fn: int
    tn: int

    @classmethod
    def of(cls, positive, predictions, gold):
        counts = {'tp': 0, 'fp': 0, 'fn': 0, 'tn': 0}
        for predicted, actual in zip(predictions, gold):
            if predicted == positive:
                counts['tp' if actual == positive else 'fp'] += 1
            else:
                counts['fn' if actual == positive else 'tn'] += 1
        return cls(**counts)

    @property
    def precision(self):
        return _ratio(self.tp, self.tp + self.fp)

    @property
    def recall(self):
        return _ratio(self.tp, self.tp + self.fn)

    @property
    def f1(self):
        return _ratio(2 * self.tp, 2 * self.tp + self.fp + self.fn)


def _ratio(numerator, denominator):
    return numerator / denominator if denominator else 0.0


def per_class(predictions, gold):
    return {label: ConfusionCounts.of(label, predictions, gold)
            for label in CLASSES}


def prf_macro(predictions, gold):
    """Macro precision, recall, F1 and the accuracy.

    The macro value is the unweighted mean over both classes; an undefined
    ratio counts as 0.
    """
    predictions, gold = list(predictions), list(gold)
    if len(predictions) != len(gold):
        raise ValueError('{0} predictions for {1} gold labels'.format(
            len(predictions), len(gold)))
    if not gold:
        raise ValueError('Cannot score an empty prediction set')
    counts = per_class(predictions, gold).values()
    precision = sum(c.precision for c in counts) / len(CLASSES)
    recall = sum(c.recall for c in counts) / len(CLASSES)
    f1 = sum(c.f1 for c in counts) / len(CLASSES)
    accuracy = sum(p == g for p, g in zip(predictions, gold)) / len(gold)
    return precision, recall, f1, accuracy
