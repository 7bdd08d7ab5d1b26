"""
Tests for the one-vs-rest reduction.
"""

import unittest

import numpy as np

from hwk.linear.ovr import one_vs_rest_predict, one_vs_rest_predict_proba, one_vs_rest_train
from hwk.utils.errors import SingleClass


def three_clusters(seed=0, size=20):
    rng = np.random.RandomState(seed)
    centers = [(4.0, 0.0), (-4.0, 0.0), (0.0, 4.0)]
    X = np.vstack([rng.normal(center, 0.5, (size, 2)) for center in centers])
    y = np.repeat([0, 1, 2], size)
    return X, y


class OneVsRestTestCase(unittest.TestCase):
    """
    Tests for one_vs_rest_train and its predictions.
    """

    def test_three_classes(self):
        """
        Verifies that three well separated clusters are recovered and probabilities sum to one per row.
        """
        X, y = three_clusters()
        ovr = one_vs_rest_train(X, y, C=10.0, seed=0, epochs=40)

        self.assertEqual(len(ovr.models), 3)
        self.assertEqual(ovr.classes, (0, 1, 2))
        predictions = one_vs_rest_predict(ovr, X)
        self.assertGreaterEqual(np.mean(predictions == y), 0.95)
        np.testing.assert_allclose(one_vs_rest_predict_proba(ovr, X).sum(axis=1), 1.0)

    def test_two_classes_single_model(self):
        """
        Verifies that a binary problem trains exactly one model.
        """
        X, y = three_clusters()
        keep = y < 2
        ovr = one_vs_rest_train(X[keep], y[keep], C=10.0, seed=0, epochs=20)

        self.assertTrue(ovr.binary)
        self.assertEqual(len(ovr.models), 1)
        self.assertEqual(list(one_vs_rest_predict(ovr, X[keep])), list(y[keep]))

    def test_single_class(self):
        """
        Verifies that a single class is refused.
        """
        with self.assertRaises(SingleClass):
            one_vs_rest_train(np.ones((4, 2)), [1, 1, 1, 1])
