"""Tests for tensor operations."""

import numpy as np
from django.test import SimpleTestCase

from tensorcore import (NonFiniteError, Parameter, ShapeError, Tensor,
                        concat, euclidean_norm, lookup_rows, matmul, mean,
                        mul, relu, reshape, sigmoid, slice_last, softmax,
                        square, swap_last, take, tanh, total, transpose)
from tensorcore.gradcheck import check_gradients
from tensorcore.tensor import no_grad


class ForwardTest(SimpleTestCase):
    """Check forward values against their definitions."""

    def test_softmax_uniform(self):
        """Equal logits give equal weights."""
        s = softmax(Tensor([0.0, 0.0, 0.0]))
        np.testing.assert_allclose(s.value, [1 / 3.0] * 3, rtol=1e-15)

    def test_softmax_sums_to_one(self):
        """Outputs are positive and sum to one along the axis."""
        rng = np.random.default_rng(3)
        s = softmax(Tensor(rng.normal(size=(4, 7)) * 10), axis=-1)
        self.assertTrue(np.all(s.value > 0))
        np.testing.assert_allclose(s.value.sum(axis=-1), 1.0, atol=1e-9)

    def test_relu(self):
        """Test relu values."""
        np.testing.assert_array_equal(relu(Tensor([-1.0, 0.0, 2.0])).value,
                                      [0.0, 0.0, 2.0])

    def test_euclidean_norm(self):
        """The 3-4-5 triangle."""
        self.assertEqual(euclidean_norm(Tensor([3.0, 4.0])).item(), 5.0)

    def test_sigmoid_tanh(self):
        """Test sigmoid and tanh at zero."""
        self.assertEqual(sigmoid(Tensor(0.0)).item(), 0.5)
        self.assertEqual(tanh(Tensor(0.0)).item(), 0.0)

    def test_shape_mismatch(self):
        """Errors name the operation and the shapes."""
        with self.assertRaises(ShapeError) as ctx:
            matmul(Tensor(np.ones((2, 3))), Tensor(np.ones((2, 3))))
        self.assertIn('matmul', str(ctx.exception))
        self.assertIn('(2, 3)', str(ctx.exception))
        with self.assertRaises(ShapeError):
            mul(Tensor(np.ones(3)), Tensor(np.ones(4)))

    def test_non_finite(self):
        """NaN results are rejected."""
        with self.assertRaises(NonFiniteError):
            mul(Tensor([np.inf]), Tensor([0.0]))

    def test_lookup_range(self):
        """Test row lookups and out of range ids."""
        table = Tensor(np.arange(6.0).reshape(3, 2))
        np.testing.assert_array_equal(lookup_rows(table, [2, 0]).value,
                                      [[4.0, 5.0], [0.0, 1.0]])
        with self.assertRaises(IndexError):
            lookup_rows(table, [3])

    def test_deterministic(self):
        """Fixed inputs give bit-identical outputs."""
        rng = np.random.default_rng(0)
        a = rng.normal(size=(5, 4))
        b = rng.normal(size=(4, 3))
        first = softmax(matmul(Tensor(a), Tensor(b))).value
        second = softmax(matmul(Tensor(a), Tensor(b))).value
        self.assertEqual(first.tobytes(), second.tobytes())

    def test_no_grad(self):
        """No tape node is recorded when recording is disabled."""
        p = Parameter(np.ones(3))
        with no_grad():
            self.assertIsNone(total(p).node)
        self.assertIsNotNone(total(p).node)


class GradientTest(SimpleTestCase):
    """Compare every operation against central differences."""

    def setUp(self):
        self.rng = np.random.default_rng(11)

    def param(self, *shape):
        return Parameter(self.rng.normal(size=shape))

    def assertGradients(self, func, params):
        self.assertLess(check_gradients(func, params), 1e-4)

    def test_elementwise(self):
        """Check gradients of the elementwise operations."""
        for seed in range(5):
            self.rng = np.random.default_rng(seed)
            a, b = self.param(3, 4), self.param(4)
            weights = Tensor(self.rng.normal(size=(3, 4)))
            self.assertGradients(
                lambda: total(mul(weights, sigmoid(a) * tanh(b) - a)),
                [a, b])
            self.assertGradients(lambda: total(square(a + b) * weights),
                                 [a, b])

    def test_matmul_batched(self):
        """Check gradients of a batched product."""
        for seed in range(5):
            self.rng = np.random.default_rng(seed)
            a, b = self.param(2, 3, 4), self.param(4, 5)
            weights = Tensor(self.rng.normal(size=(2, 3, 5)))
            self.assertGradients(lambda: total(matmul(a, b) * weights),
                                 [a, b])
            c = self.param(2, 3, 4)
            self.assertGradients(
                lambda: total(matmul(a, swap_last(c)) * 0.5), [a, c])

    def test_softmax(self):
        """Check gradients of softmax."""
        for seed in range(5):
            self.rng = np.random.default_rng(seed)
            a = self.param(3, 4)
            weights = Tensor(self.rng.normal(size=(3, 4)))
            self.assertGradients(lambda: total(softmax(a, axis=-1) * weights),
                                 [a])
            self.assertGradients(lambda: total(softmax(a, axis=0) * weights),
                                 [a])

    def test_norm(self):
        """Check gradients of the Euclidean norm."""
        for seed in range(5):
            self.rng = np.random.default_rng(seed)
            a = self.param(3, 4)
            self.assertGradients(lambda: total(euclidean_norm(a)), [a])

    def test_norm_at_origin(self):
        """The gradient of the norm of a zero vector is zero."""
        from tensorcore import backward
        a = Parameter(np.zeros(3))
        grads = backward(euclidean_norm(a))
        np.testing.assert_array_equal(grads[a], np.zeros(3))

    def test_structural(self):
        """Check gradients of reshapes, slices and concatenations."""
        for seed in range(5):
            self.rng = np.random.default_rng(seed)
            a, b = self.param(2, 3), self.param(2, 2)
            self.assertGradients(
                lambda: total(mul(reshape(transpose(
                    concat([a, b], axis=1), (1, 0)), (5, 2)),
                    Tensor(np.arange(10.0).reshape(5, 2)))), [a, b])
            self.assertGradients(
                lambda: mean(take(a, 1, axis=1) * slice_last(b, 0, 1)),
                [a, b])

    def test_lookup_rows(self):
        """Only looked-up rows receive a gradient."""
        from tensorcore import backward
        table = self.param(5, 3)
        ids = np.array([[1, 3], [3, 0]])
        weights = Tensor(self.rng.normal(size=(2, 2, 3)))
        self.assertGradients(lambda: total(lookup_rows(table, ids) * weights),
                             [table])
        grads = backward(total(lookup_rows(table, ids) * weights))
        np.testing.assert_array_equal(grads[table][[2, 4]], 0.0)
