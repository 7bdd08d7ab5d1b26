"""
Tests for tensors and the recording tape.
"""

import unittest

import numpy as np

from hwk.autodiff import ops
from hwk.autodiff.tensor import Tensor, active_tape, backward, parameter, recording
from hwk.utils.errors import NoTape, ShapeMismatch


class TapeTestCase(unittest.TestCase):
    """
    Tests for recording and backward.
    """

    def test_gradient_accumulates_over_uses(self):
        """
        Verifies that a tensor used twice receives the sum of both gradients.
        """
        x = parameter([1.0, -2.0, 3.0])
        with recording():
            loss = ops.reduce_sum(x * x)
        backward(loss)

        np.testing.assert_allclose(x.grad, [2.0, -4.0, 6.0])

    def test_constants_get_no_gradient(self):
        """
        Verifies that tensors not requiring gradients are left without one.
        """
        x, c = parameter([1.0, 2.0]), Tensor([3.0, 4.0])
        with recording():
            loss = ops.reduce_sum(x * c)
        backward(loss)

        np.testing.assert_allclose(x.grad, [3.0, 4.0])
        self.assertIsNone(c.grad)

    def test_no_recording_outside_tape(self):
        """
        Verifies that operations outside a recording context leave no tape to differentiate.
        """
        x = parameter([1.0])
        loss = ops.reduce_sum(x * x)

        self.assertIsNone(active_tape())
        with self.assertRaises(NoTape):
            backward(loss)

    def test_single_backward_pass(self):
        """
        Verifies that a tape cannot be replayed.
        """
        x = parameter([1.0])
        with recording() as tape:
            loss = ops.reduce_sum(x * x)
        backward(loss)

        self.assertEqual(len(tape), 2)
        with self.assertRaises(NoTape):
            backward(loss)

    def test_scalar_loss_required(self):
        """
        Verifies that backward refuses a non-scalar output.
        """
        x = parameter([1.0, 2.0])
        with recording():
            out = x * x
        with self.assertRaises(ShapeMismatch):
            backward(out)

    def test_nested_recording_restores_outer_tape(self):
        """
        Verifies that leaving an inner recording context reactivates the outer tape.
        """
        with recording() as outer:
            with recording() as inner:
                self.assertIs(active_tape(), inner)
            self.assertIs(active_tape(), outer)
        self.assertIsNone(active_tape())

    def test_item(self):
        """
        Verifies item on one element and its refusal on several.
        """
        self.assertEqual(Tensor([[2.5]]).item(), 2.5)
        with self.assertRaises(ShapeMismatch):
            Tensor([1.0, 2.0]).item()
