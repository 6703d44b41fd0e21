"""Text tokenization."""

import re

PUNCTUATION = '!"#$%&()*+,-./:;<=>?@[\\]^_`{|}~\t\n'

_decimal_point = re.compile(r'(?<=\d)\.(?=\d)')
_marker = '\x00'
_strip = str.maketrans({c: ' ' for c in PUNCTUATION})


def tokenize(text):
    """Split ``text`` into lowercase tokens.

    Punctuation characters act as separators and are dropped, except for
    a decimal point between two digits so that numbers stay whole.
    """
    text = _decimal_point.sub(_marker, text.lower())
    text = text.translate(_strip).replace(_marker, '.')
    return text.split()
