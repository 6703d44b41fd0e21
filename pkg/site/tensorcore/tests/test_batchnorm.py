"""Tests for batch normalization."""

import numpy as np
from django.test import SimpleTestCase

from tensorcore import (INFER, TRAIN, BatchNormState, Parameter, ShapeError,
                        Tensor, batchnorm, total)
from tensorcore.gradcheck import check_gradients


class BatchNormTest(SimpleTestCase):
    """Test normalization modes."""

    def test_train_statistics(self):
        """Training output has zero mean and unit variance per feature."""
        rng = np.random.default_rng(5)
        x = rng.normal(size=(64, 3)) * 1000.0 + 7.0
        state = BatchNormState(3)
        y = batchnorm(Tensor(x), state).value
        np.testing.assert_allclose(y.mean(axis=0), 0.0, atol=1e-6)
        np.testing.assert_allclose(y.var(axis=0), 1.0, atol=1e-6)

    def test_identical_rows(self):
        """A batch without variance maps onto the shift."""
        state = BatchNormState(2)
        state.beta.value[:] = [0.5, -1.0]
        y = batchnorm(Tensor(np.tile([3.0, 4.0], (5, 1))), state).value
        np.testing.assert_allclose(y, np.tile([0.5, -1.0], (5, 1)))

    def test_infer_matches_train(self):
        """Inference with the batch statistics reproduces training."""
        rng = np.random.default_rng(6)
        x = rng.normal(size=(10, 4))
        state = BatchNormState(4)
        trained = batchnorm(Tensor(x), state).value
        state.running_mean = x.mean(axis=0)
        state.running_var = x.var(axis=0)
        state.mode = INFER
        inferred = batchnorm(Tensor(x), state).value
        np.testing.assert_allclose(inferred, trained, atol=1e-6)

    def test_running_update(self):
        """Running statistics move with the stated momentum."""
        x = np.array([[1.0], [3.0]])
        state = BatchNormState(1)
        batchnorm(Tensor(x), state)
        np.testing.assert_allclose(state.running_mean, [0.02])
        np.testing.assert_allclose(state.running_var, [0.99 + 0.01])

    def test_zero_features(self):
        """Check that a state without features is rejected."""
        with self.assertRaises(ShapeError):
            BatchNormState(0)
        with self.assertRaises(ShapeError):
            batchnorm(Tensor(np.ones((3, 2))), BatchNormState(3))

    def test_gradients(self):
        """Both modes pass the finite-difference check."""
        for seed in range(5):
            rng = np.random.default_rng(seed)
            x = Parameter(rng.normal(size=(6, 3)))
            weights = Tensor(rng.normal(size=(6, 3)))
            state = BatchNormState(3)
            state.gamma.value[:] = rng.normal(size=3)
            state.beta.value[:] = rng.normal(size=3)
            params = [x, state.gamma, state.beta]
            for mode in (TRAIN, INFER):
                state.mode = mode
                error = check_gradients(
                    lambda: total(batchnorm(x, state) * weights), params)
                self.assertLess(error, 1e-4)
