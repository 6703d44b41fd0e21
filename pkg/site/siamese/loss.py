"""Contrastive loss and the distance threshold."""

from corpusio import DISSIMILAR, SIMILAR
from tensorcore import as_tensor, mul, relu, square, sub


def contrastive_loss(targets, distances, margin):
    """``(1 - y) D^2 / 2 + y max(0, m - D)^2 / 2``, elementwise.

    ``y`` is 0 for similar pairs and 1 for dissimilar ones.
    """
    targets = as_tensor(targets)
    distances = as_tensor(distances)
    similar = mul(sub(1.0, targets), square(distances))
    dissimilar = mul(targets, square(relu(sub(margin, distances))))
    return mul(similar + dissimilar, 0.5)


def classify(distance, margin):
    """Tables closer than half the margin are similar."""
    return SIMILAR if distance < margin / 2.0 else DISSIMILAR
