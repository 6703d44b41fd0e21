"""Word vector files and embedding initialization."""

import io
import logging

import numpy as np
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from neurallayers import Embedding
from tablecore import PAD_ID

logger = logging.getLogger(__name__)

INIT_SCALE = 0.05


class EmbeddingFile(object):
    """Tokens with one vector each.

    The text form is a ``"<count> <dim>"`` header followed by one line per
    token: the token then its values, space separated. Values are written
    with 17 significant digits so that reading a file back is exact.
    """

    def __init__(self, tokens, vectors):
        vectors = np.asarray(vectors, dtype=np.float64)
        if vectors.ndim != 2 or vectors.shape[0] != len(tokens):
            raise ValidationError(
                _('%(count)s tokens for a %(shape)s matrix.'),
                code='dimension_mismatch',
                params={'count': len(tokens), 'shape': vectors.shape})
        self.tokens = list(tokens)
        self.vectors = vectors

    @property
    def dimension(self):
        return self.vectors.shape[1]

    def __len__(self):
        return len(self.tokens)

    def rows(self):
        return zip(self.tokens, self.vectors)

    def dumps(self):
        lines = ['{0} {1}'.format(len(self), self.dimension)]
        for token, vector in self.rows():
            values = ' '.join(format(float(v), '.17g') for v in vector)
            lines.append('{0} {1}'.format(token, values))
        return '\n'.join(lines) + '\n'

    def write(self, path):
        with io.open(path, 'w', encoding='utf-8', newline='\n') as output:
            output.write(self.dumps())
        logger.info('Wrote %d vectors of dimension %d to %s', len(self),
                    self.dimension, path)

    @classmethod
    def loads(cls, text):
        lines = text.split('\n')
        header = lines[0].split()
        try:
            count, dimension = [int(value) for value in header]
        except ValueError:
            raise ValidationError(_('Malformed header: "%(header)s".'),
                                  code='bad_header',
                                  params={'header': lines[0]})
        if count < 0 or dimension < 1:
            raise ValidationError(_('Malformed header: "%(header)s".'),
                                  code='bad_header',
                                  params={'header': lines[0]})
        body = [line for line in lines[1:] if line.strip()]
        if len(body) != count:
            raise ValidationError(
                _('Header announces %(count)s rows, found %(found)s.'),
                code='bad_header', params={'count': count,
                                           'found': len(body)})
        tokens = []
        vectors = np.zeros((count, dimension))
        for number, line in enumerate(body, start=2):
            fields = line.split(' ')
            if len(fields) != dimension + 1:
                raise ValidationError(
                    _('Line %(line)s holds %(found)s values instead of '
                      '%(dimension)s.'), code='dimension_mismatch',
                    params={'line': number, 'found': len(fields) - 1,
                            'dimension': dimension})
            tokens.append(fields[0])
            try:
                vectors[len(tokens) - 1] = [float(v) for v in fields[1:]]
            except ValueError:
                raise ValidationError(_('Line %(line)s is not numeric.'),
                                      code='parse', params={'line': number})
        return cls(tokens, vectors)

    @classmethod
    def read(cls, path):
        with io.open(path, encoding='utf-8', newline='\n') as source:
            return cls.loads(source.read())


def random_matrix(vocab_size, dimension, seed):
    """Uniform values in +-``INIT_SCALE`` with a zero padding row."""
    rng = np.random.default_rng(seed)
    matrix = rng.uniform(-INIT_SCALE, INIT_SCALE,
                         size=(vocab_size, dimension))
    matrix[PAD_ID] = 0.0
    return matrix


def random_embedding(vocab, dimension, seed):
    return Embedding(random_matrix(len(vocab), dimension, seed))


def pretrained_matrix(vectors, vocab, dimension, seed):
    """Copy the rows of ``vectors`` known to ``vocab`` over a random init."""
    if vectors.dimension != dimension:
        raise ValidationError(
            _('Vectors of dimension %(found)s, %(dimension)s expected.'),
            code='dimension_mismatch',
            params={'found': vectors.dimension,
                    'dimension': dimension})
    matrix = random_matrix(len(vocab), dimension, seed)
    copied = 0
    for token, vector in vectors.rows():
        if token in vocab:
            matrix[vocab.id_of(token)] = vector
            copied += 1
    matrix[PAD_ID] = 0.0
    logger.debug('Copied %d of %d vocabulary rows', copied, len(vocab))
    return matrix


def load_pretrained(path, vocab, dimension, seed):
    """Build an ``Embedding`` from the word vector file at ``path``."""
    vectors = EmbeddingFile.read(path)
    return Embedding(pretrained_matrix(vectors, vocab, dimension, seed))


class WordVectors(object):
    """Read-only token lookup over an embedding matrix."""

    def __init__(self, vocab, matrix):
        self.vocab = vocab
        self.matrix = np.asarray(matrix, dtype=np.float64)

    @classmethod
    def from_embedding(cls, vocab, embedding):
        return cls(vocab, embedding.weight.value.copy())

    @property
    def dimension(self):
        return self.matrix.shape[1]

    def vectors_of(self, tokens):
        """Stack the vectors of the in-vocabulary ``tokens``."""
        ids = [self.vocab.id_of(t) for t in tokens if t in self.vocab]
        return self.matrix[np.asarray(ids, dtype=np.int64)].reshape(
            len(ids), self.dimension)
