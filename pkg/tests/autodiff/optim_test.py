"""
Tests for the Adam optimizer.
"""

import unittest

import numpy as np

from hwk.autodiff.optim import adam_step
from hwk.utils.errors import ShapeMismatch


class AdamTestCase(unittest.TestCase):
    """
    Tests for adam_step.
    """

    def test_first_step_moves_by_learning_rate(self):
        """
        Verifies that the bias-corrected first step moves each weight by lr against its gradient sign.
        """
        params = [np.array([1.0, -1.0, 0.5])]
        grads = [np.array([0.3, -20.0, 0.0])]
        new_params, state = adam_step(params, grads, lr=0.01)

        np.testing.assert_allclose(new_params[0], [0.99, -0.99, 0.5], atol=1e-6)
        self.assertEqual(state.t, 1)
        np.testing.assert_allclose(params[0], [1.0, -1.0, 0.5])

    def test_none_gradient_is_zero(self):
        """
        Verifies that a missing gradient leaves its parameter unchanged.
        """
        new_params, _ = adam_step([np.ones(2), np.ones(3)], [None, np.ones(3)])

        np.testing.assert_allclose(new_params[0], np.ones(2))

    def test_minimizes_quadratic(self):
        """
        Verifies that repeated steps approach the minimum of (p - 3)^2.
        """
        params, state = [np.array([0.0])], None
        for _ in range(300):
            params, state = adam_step(params, [2.0 * (params[0] - 3.0)], state, lr=0.05)

        self.assertLess(abs(params[0][0] - 3.0), 0.5)

    def test_shape_errors(self):
        """
        Verifies that mismatched gradient counts and shapes are refused.
        """
        with self.assertRaises(ShapeMismatch):
            adam_step([np.ones(2)], [])
        with self.assertRaises(ShapeMismatch):
            adam_step([np.ones(2)], [np.ones(3)])
