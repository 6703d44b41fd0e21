"""Dense tensors with reverse-mode differentiation."""

from tensorcore.batchnorm import INFER, TRAIN, BatchNormState, batchnorm
from tensorcore.exceptions import (LookupRangeError, NonFiniteError,
                                   ShapeError)
from tensorcore.ops import (add, concat, euclidean_norm, lookup_rows,
                            matmul, mean, mul, relu, reshape, sigmoid,
                            slice_last, softmax, square, sub, swap_last,
                            take, tanh, total, transpose)
from tensorcore.optim import RmsProp, RmsPropState, rmsprop_step
from tensorcore.tensor import (Parameter, TapeNode, Tensor, as_tensor,
                               backward, is_grad_enabled, no_grad)
