"""Binary checkpoints of trained models.

Layout, all integers little-endian:

* 8 bytes: the magic ``TABSIMCK``;
* uint32: format version;
* uint32: length of the header in bytes;
* the header, UTF-8 JSON with sorted keys, holding the shape and model
  configurations, the vocabulary, the metadata and the name and shape of
  every tensor;
* the tensors in header order, as little-endian 64-bit reals.

Tensors are the model parameters followed by the running mean and variance
of every batch normalization.
"""

import dataclasses
import io
import json
import logging
import struct

import numpy as np
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from embeddings import Vocabulary
from neurallayers import Embedding
from siamese.model import ModelConfig, TabSimModel
from tablecore import ShapeConfig

logger = logging.getLogger(__name__)

MAGIC = b'TABSIMCK'
VERSION = 1
PREFIX = struct.Struct('<8sII')
DTYPE = np.dtype('<f8')


def _bad(message, **params):
    return ValidationError(message, code='bad_checkpoint', params=params)


def model_tensors(model):
    """Yield ``(name, array)`` for everything a checkpoint stores."""
    for name, param in model.named_parameters():
        yield name, param.value
    for name, state in model.batchnorm_states():
        yield name + '.running_mean', state.running_mean
        yield name + '.running_var', state.running_var


def dumps_checkpoint(model, metadata=None):
    tensors = list(model_tensors(model))
    header = {
        'shape': dataclasses.asdict(model.shape),
        'model': dataclasses.asdict(model.config),
        'vocabulary': list(model.vocab),
        'metadata': metadata or {},
        'tensors': [{'name': name, 'shape': list(value.shape)}
                    for name, value in tensors],
    }
    encoded = json.dumps(header, sort_keys=True,
                         separators=(',', ':')).encode('utf-8')
    parts = [PREFIX.pack(MAGIC, VERSION, len(encoded)), encoded]
    parts.extend(np.ascontiguousarray(value, dtype=DTYPE).tobytes()
                 for _, value in tensors)
    return b''.join(parts)


def save_checkpoint(model, path, metadata=None):
    with io.open(path, 'wb') as output:
        output.write(dumps_checkpoint(model, metadata))
    logger.info('Saved checkpoint to %s', path)


def _read_header(data):
    if len(data) < PREFIX.size:
        raise _bad(_('Truncated checkpoint.'))
    magic, version, length = PREFIX.unpack_from(data)
    if magic != MAGIC:
        raise _bad(_('Not a checkpoint file.'))
    if version != VERSION:
        raise _bad(_('Unsupported checkpoint version %(version)s.'),
                   version=version)
    end = PREFIX.size + length
    try:
        header = json.loads(data[PREFIX.size:end].decode('utf-8'))
    except ValueError:
        raise _bad(_('Corrupt checkpoint header.'))
    return header, end


def loads_checkpoint(data):
    """Rebuild the model stored in ``data``; return it with its metadata."""
    header, offset = _read_header(data)
    try:
        shape = ShapeConfig(**header['shape'])
        config = ModelConfig(**header['model'])
        vocab = Vocabulary(header['vocabulary'][2:])
    except (KeyError, TypeError):
        raise _bad(_('Incomplete checkpoint header.'))
    embedding = Embedding(np.zeros((len(vocab), config.embedding_dim)))
    model = TabSimModel(vocab, embedding, shape, config,
                        np.random.default_rng(0))
    expected = dict(model_tensors(model))
    names = [item['name'] for item in header['tensors']]
    if sorted(names) != sorted(expected):
        raise _bad(_('Checkpoint tensors do not match the model.'))
    values = {}
    for item in header['tensors']:
        count = int(np.prod(item['shape'], dtype=np.int64))
        size = count * DTYPE.itemsize
        if offset + size > len(data):
            raise _bad(_('Truncated checkpoint.'))
        values[item['name']] = np.frombuffer(
            data, dtype=DTYPE, count=count, offset=offset).reshape(
                item['shape']).astype(np.float64)
        offset += size
    if offset != len(data):
        raise _bad(_('Trailing bytes after the checkpoint tensors.'))
    params = model.parameters()
    states = dict(model.batchnorm_states())
    for name, value in values.items():
        if value.shape != expected[name].shape:
            raise _bad(_('Tensor %(name)s has shape %(shape)s.'), name=name,
                       shape=value.shape)
        if name in params:
            params[name].value = value
        else:
            state_name, field = name.rsplit('.', 1)
            setattr(states[state_name], field, value)
    return model, header['metadata']


def load_checkpoint(path):
    with io.open(path, 'rb') as source:
        return loads_checkpoint(source.read())
