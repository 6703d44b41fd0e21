"""Tensors and the gradient tape.

A ``Tensor`` wraps a 64-bit ``numpy`` array. When gradient recording is
enabled, every operation whose inputs require a gradient attaches a
``TapeNode`` to its result. The tape is the acyclic graph of these nodes;
``backward`` walks it in reverse topological order and visits every node
exactly once.
"""

import threading
from contextlib import contextmanager

import numpy as np

from tensorcore.exceptions import ShapeError

_mode = threading.local()


def is_grad_enabled():
    """``True`` when operations record tape nodes in this thread."""
    return getattr(_mode, 'enabled', True)


@contextmanager
def no_grad():
    """Disable tape recording in the current thread."""
    previous = is_grad_enabled()
    _mode.enabled = False
    try:
        yield
    finally:
        _mode.enabled = previous


class TapeNode(object):
    """A recorded operation.

    ``rule`` maps the gradient of the result to a tuple holding one
    gradient per input (``None`` for inputs that need none). Forward values
    needed by the rule are captured when the node is built.
    """
    __slots__ = ('op', 'inputs', 'rule')

    def __init__(self, op, inputs, rule):
        self.op = op
        self.inputs = tuple(inputs)
        self.rule = rule

    def __repr__(self):
        return 'TapeNode({0})'.format(self.op)


class Tensor(object):
    """A dense array of reals, optionally attached to the tape."""
    __slots__ = ('value', 'node', 'name')

    def __init__(self, value, node=None, name=None):
        self.value = np.asarray(value, dtype=np.float64)
        self.node = node
        self.name = name

    @property
    def shape(self):
        return self.value.shape

    @property
    def requires_grad(self):
        return self.node is not None

    def item(self):
        return float(self.value)

    def __repr__(self):
        label = self.name or (self.node.op if self.node else 'const')
        return 'Tensor({0}, shape={1})'.format(label, self.shape)

    def __add__(self, other):
        from tensorcore import ops
        return ops.add(self, other)

    def __radd__(self, other):
        from tensorcore import ops
        return ops.add(other, self)

    def __sub__(self, other):
        from tensorcore import ops
        return ops.sub(self, other)

    def __rsub__(self, other):
        from tensorcore import ops
        return ops.sub(other, self)

    def __mul__(self, other):
        from tensorcore import ops
        return ops.mul(self, other)

    def __rmul__(self, other):
        from tensorcore import ops
        return ops.mul(other, self)

    def __neg__(self):
        from tensorcore import ops
        return ops.mul(self, -1.0)

    def __matmul__(self, other):
        from tensorcore import ops
        return ops.matmul(self, other)


class Parameter(Tensor):
    """A learned tensor; the leaves the tape differentiates against."""
    __slots__ = ()

    @property
    def requires_grad(self):
        return True


def as_tensor(value):
    """Wrap ``value`` in a constant tensor unless it already is one."""
    if isinstance(value, Tensor):
        return value
    return Tensor(value)


def _topological_order(root):
    """Return the tensors reachable from ``root``, inputs first."""
    order = []
    seen = set()
    stack = [(root, False)]
    while stack:
        tensor, expanded = stack.pop()
        if expanded:
            order.append(tensor)
            continue
        if id(tensor) in seen:
            continue
        seen.add(id(tensor))
        stack.append((tensor, True))
        if tensor.node is not None:
            for parent in tensor.node.inputs:
                if parent.requires_grad and id(parent) not in seen:
                    stack.append((parent, False))
    return order


def backward(loss):
    """Differentiate the scalar ``loss`` with respect to every parameter.

    Returns a dictionary mapping each ``Parameter`` reached from ``loss``
    to its gradient array.
    """
    if loss.value.size != 1:
        raise ShapeError('backward', loss.shape)
    grads = {id(loss): np.ones_like(loss.value)}
    gradients = {}
    for tensor in reversed(_topological_order(loss)):
        grad = grads.pop(id(tensor), None)
        if grad is None:
            continue
        if isinstance(tensor, Parameter):
            gradients[tensor] = grad
        if tensor.node is None:
            continue
        local = tensor.node.rule(grad)
        for parent, parent_grad in zip(tensor.node.inputs, local):
            if parent_grad is None or not parent.requires_grad:
                continue
            key = id(parent)
            if key in grads:
                grads[key] = grads[key] + parent_grad
            else:
                grads[key] = parent_grad
    return gradients
