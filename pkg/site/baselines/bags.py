"""Bag-of-words table similarity."""

from baselines.scores import MethodScore
from tablecore import tokenize


def caption_tokens(table):
    return tokenize(table.caption)


def content_tokens(table):
    """The tokens of every cell, row by row."""
    return [token for row in table.grid for cell in row
            for token in tokenize(cell.text)]


def bag_of_words(tokens):
    return frozenset(tokens)


def jaccard(first, second):
    """``|a & b| / |a | b|``; two empty bags are identical."""
    union = first | second
    if not union:
        return 1.0
    return len(first & second) / len(union)


def table_jaccard(query, candidate):
    """Mean of the caption and content Jaccard similarities."""
    caption = jaccard(bag_of_words(caption_tokens(query)),
                      bag_of_words(caption_tokens(candidate)))
    content = jaccard(bag_of_words(content_tokens(query)),
                      bag_of_words(content_tokens(candidate)))
    return MethodScore((caption + content) / 2.0)
