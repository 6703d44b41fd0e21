"""Differentiable operations.

Every operation computes its forward value with ``numpy``, rejects
non-finite results and, when recording is enabled, attaches a
``TapeNode`` whose rule returns the gradient for each input.
"""

import numpy as np

from tensorcore.exceptions import (LookupRangeError, NonFiniteError,
                                   ShapeError)
from tensorcore.tensor import (Tensor, TapeNode, as_tensor,
                               is_grad_enabled)


def _record(op, value, inputs, rule):
    """Build the result tensor of ``op``."""
    if not np.all(np.isfinite(value)):
        raise NonFiniteError(op)
    node = None
    if is_grad_enabled() and any(t.requires_grad for t in inputs):
        node = TapeNode(op, inputs, rule)
    return Tensor(value, node=node)


def _unbroadcast(grad, shape):
    """Sum ``grad`` over the axes that broadcasting expanded."""
    while grad.ndim > len(shape):
        grad = grad.sum(axis=0)
    for axis, size in enumerate(shape):
        if size == 1 and grad.shape[axis] != 1:
            grad = grad.sum(axis=axis, keepdims=True)
    return grad


def _broadcast_shape(op, a, b):
    try:
        return np.broadcast_shapes(a.shape, b.shape)
    except ValueError:
        raise ShapeError(op, a.shape, b.shape)


def add(a, b):
    a, b = as_tensor(a), as_tensor(b)
    _broadcast_shape('add', a, b)

    def rule(g):
        return _unbroadcast(g, a.shape), _unbroadcast(g, b.shape)

    return _record('add', a.value + b.value, (a, b), rule)


def sub(a, b):
    a, b = as_tensor(a), as_tensor(b)
    _broadcast_shape('sub', a, b)

    def rule(g):
        return _unbroadcast(g, a.shape), _unbroadcast(-g, b.shape)

    return _record('sub', a.value - b.value, (a, b), rule)


def mul(a, b):
    """Elementwise product with broadcasting."""
    a, b = as_tensor(a), as_tensor(b)
    _broadcast_shape('mul', a, b)

    def rule(g):
        return (_unbroadcast(g * b.value, a.shape),
                _unbroadcast(g * a.value, b.shape))

    return _record('mul', a.value * b.value, (a, b), rule)


def matmul(a, b):
    """Matrix product over the two last axes, batched over the others."""
    a, b = as_tensor(a), as_tensor(b)
    if a.value.ndim < 2 or b.value.ndim < 2 or a.shape[-1] != b.shape[-2]:
        raise ShapeError('matmul', a.shape, b.shape)
    try:
        value = np.matmul(a.value, b.value)
    except ValueError:
        raise ShapeError('matmul', a.shape, b.shape)

    def rule(g):
        ga = np.matmul(g, np.swapaxes(b.value, -1, -2))
        gb = np.matmul(np.swapaxes(a.value, -1, -2), g)
        return _unbroadcast(ga, a.shape), _unbroadcast(gb, b.shape)

    return _record('matmul', value, (a, b), rule)


def concat(tensors, axis=-1):
    tensors = [as_tensor(t) for t in tensors]
    try:
        value = np.concatenate([t.value for t in tensors], axis=axis)
    except ValueError:
        raise ShapeError('concat', *[t.shape for t in tensors])
    bounds = np.cumsum([t.shape[axis] for t in tensors])[:-1]

    def rule(g):
        return tuple(np.split(g, bounds, axis=axis))

    return _record('concat', value, tensors, rule)


def reshape(a, shape):
    a = as_tensor(a)
    try:
        value = a.value.reshape(shape)
    except ValueError:
        raise ShapeError('reshape', a.shape, shape)

    def rule(g):
        return (g.reshape(a.shape),)

    return _record('reshape', value, (a,), rule)


def transpose(a, axes):
    a = as_tensor(a)
    inverse = np.argsort(axes)

    def rule(g):
        return (np.transpose(g, inverse),)

    return _record('transpose', np.transpose(a.value, axes), (a,), rule)


def swap_last(a):
    """Exchange the two last axes."""
    axes = list(range(a.value.ndim))
    axes[-1], axes[-2] = axes[-2], axes[-1]
    return transpose(a, axes)


def take(a, index, axis):
    """Select position ``index`` along ``axis``, dropping that axis."""
    a = as_tensor(a)
    if not -a.shape[axis] <= index < a.shape[axis]:
        raise ShapeError('take', a.shape, (index,))
    value = np.take(a.value, index, axis=axis)

    def rule(g):
        grad = np.zeros_like(a.value)
        selector = [slice(None)] * a.value.ndim
        selector[axis] = index
        grad[tuple(selector)] = g
        return (grad,)

    return _record('take', value, (a,), rule)


def slice_last(a, start, stop):
    """Keep entries ``start:stop`` of the last axis."""
    a = as_tensor(a)
    if not 0 <= start < stop <= a.shape[-1]:
        raise ShapeError('slice_last', a.shape, (start, stop))

    def rule(g):
        grad = np.zeros_like(a.value)
        grad[..., start:stop] = g
        return (grad,)

    return _record('slice_last', a.value[..., start:stop], (a,), rule)


def sigmoid(a):
    a = as_tensor(a)
    s = 0.5 * (1.0 + np.tanh(0.5 * a.value))

    def rule(g):
        return (g * s * (1.0 - s),)

    return _record('sigmoid', s, (a,), rule)


def tanh(a):
    a = as_tensor(a)
    t = np.tanh(a.value)

    def rule(g):
        return (g * (1.0 - t * t),)

    return _record('tanh', t, (a,), rule)


def relu(a):
    a = as_tensor(a)
    mask = a.value > 0

    def rule(g):
        return (g * mask,)

    return _record('relu', np.where(mask, a.value, 0.0), (a,), rule)


def softmax(a, axis=-1):
    a = as_tensor(a)
    shifted = a.value - np.max(a.value, axis=axis, keepdims=True)
    e = np.exp(shifted)
    s = e / np.sum(e, axis=axis, keepdims=True)

    def rule(g):
        return (s * (g - np.sum(g * s, axis=axis, keepdims=True)),)

    return _record('softmax', s, (a,), rule)


def euclidean_norm(a, axis=-1):
    """The L2 norm along ``axis``; its gradient at the origin is zero."""
    a = as_tensor(a)
    norm = np.sqrt(np.sum(a.value * a.value, axis=axis))

    def rule(g):
        n = np.expand_dims(norm, axis)
        scale = np.divide(np.expand_dims(g, axis), n,
                          out=np.zeros_like(n), where=n > 0)
        return (scale * a.value,)

    return _record('euclidean_norm', norm, (a,), rule)


def lookup_rows(table, ids):
    """Gather the rows of ``table`` indexed by the integer array ``ids``."""
    table = as_tensor(table)
    ids = np.asarray(ids, dtype=np.int64)
    if ids.size and (ids.min() < 0 or ids.max() >= table.shape[0]):
        raise LookupRangeError(
            'lookup_rows: id out of range [0, {0})'.format(table.shape[0]))

    def rule(g):
        grad = np.zeros_like(table.value)
        np.add.at(grad, ids, g)
        return (grad,)

    return _record('lookup_rows', table.value[ids], (table,), rule)


def total(a, axis=None):
    """Sum over ``axis`` (all axes when ``None``)."""
    a = as_tensor(a)
    value = np.sum(a.value, axis=axis)

    def rule(g):
        if axis is not None:
            g = np.expand_dims(g, axis)
        return (np.broadcast_to(g, a.shape).copy(),)

    return _record('total', value, (a,), rule)


def mean(a, axis=None):
    a = as_tensor(a)
    count = a.value.size if axis is None else a.shape[axis]
    return mul(total(a, axis=axis), 1.0 / count)


def square(a):
    a = as_tensor(a)

    def rule(g):
        return (2.0 * g * a.value,)

    return _record('square', a.value * a.value, (a,), rule)
