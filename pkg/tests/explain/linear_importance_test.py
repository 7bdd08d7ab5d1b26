"""
Tests for global linear model importance.
"""

import unittest

import numpy as np

from hwk.explain.linear_importance import dense_slot_importance, linear_importance
from hwk.features.tfidf import Vocabulary
from hwk.linear.model import LinearModel
from hwk.utils.errors import DimensionMismatch, NotFitted


class LinearImportanceTestCase(unittest.TestCase):
    """
    Tests for linear_importance and dense_slot_importance.
    """

    def setUp(self):
        self.vocab = Vocabulary([u'x', u'y', u'z'], np.ones(3), (1, 1), 3)

    def model(self, weights, **kwargs):
        return LinearModel(weights, 0.0, 'logistic', 'l2', 1.0, **kwargs)

    def test_order_by_signed_weight(self):
        """
        Verifies the descending signed order and the top_k cut.
        """
        model = self.model([0.3, -0.2, 0.1])

        self.assertEqual(linear_importance(model, self.vocab, top_k=2), [(u'x', 0.3), (u'z', 0.1)])
        self.assertEqual([t for t, _ in linear_importance(model, self.vocab)], [u'x', u'z', u'y'])

    def test_single_nonzero_weight(self):
        """
        Verifies that zero weights are left out.
        """
        self.assertEqual(linear_importance(self.model([0.0, 0.5, 0.0]), self.vocab), [(u'y', 0.5)])

    def test_reduced_model(self):
        """
        Verifies that a model trained on selected columns reports its weights on the original n-grams.
        """
        model = self.model([0.4], selected_features=[2], input_dimension=3)
        self.assertEqual(linear_importance(model, self.vocab), [(u'z', 0.4)])

    def test_dense_slots(self):
        """
        Verifies that the slots after the n-grams are ranked by magnitude.
        """
        model = self.model([0.1, 0.0, 0.0, -0.5, 0.2])
        self.assertEqual(dense_slot_importance(model, self.vocab, ['fre', 'fkgl']), [('fre', -0.5), ('fkgl', 0.2)])
        with self.assertRaises(DimensionMismatch):
            dense_slot_importance(model, self.vocab, ['fre'])

    def test_errors(self):
        """
        Verifies NotFitted without a model and DimensionMismatch for a model narrower than the vocabulary.
        """
        with self.assertRaises(NotFitted):
            linear_importance(None, self.vocab)
        with self.assertRaises(DimensionMismatch):
            linear_importance(self.model([0.1, 0.2]), self.vocab)
