"""
Tests for fitted linear models.
"""

import os
import shutil
import tempfile
import unittest

import numpy as np
from mock import Mock

from hwk.linear import model as linear_model
from hwk.linear.model import HINGE, L2, LOGISTIC, LinearModel, calibrate, check_vocabulary
from hwk.linear.sgd import train
from hwk.utils.errors import DimensionMismatch, ModelFormatError, VocabularyMismatch


class LinearModelTestCase(unittest.TestCase):
    """
    Tests for decision values, probabilities and the model file.
    """

    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.model = LinearModel([1.0, -2.0], 0.5, LOGISTIC, L2, 1.0, vocabulary_checksum='abc')

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_margins_and_probabilities(self):
        """
        Verifies margins, sigmoid probabilities and the per-row shape of batches.
        """
        X = np.array([[1.0, 0.0], [0.0, 1.0]])

        np.testing.assert_allclose(linear_model.decision_function(self.model, X), [1.5, -1.5])
        single = linear_model.predict_proba(self.model, np.array([1.0, 0.0]))
        self.assertEqual(single.shape, (2,))
        self.assertAlmostEqual(single[1], 1.0 / (1.0 + np.exp(-1.5)))
        batch = linear_model.predict_proba(self.model, X)
        np.testing.assert_allclose(batch.sum(axis=1), [1.0, 1.0])
        self.assertEqual(list(linear_model.predict(self.model, X)), [1, 0])

    def test_zero_margin_goes_to_first_class(self):
        """
        Verifies that a margin of exactly zero predicts classes[0].
        """
        model = LinearModel([1.0], 0.0, LOGISTIC, L2, 1.0, classes=(0, 1))

        self.assertEqual(list(linear_model.predict(model, np.array([[0.0]]))), [0])

    def test_wrong_width(self):
        """
        Verifies that rows of the wrong width raise DimensionMismatch.
        """
        with self.assertRaises(DimensionMismatch):
            linear_model.decision_function(self.model, np.ones((1, 3)))

    def test_save_and_load(self):
        """
        Verifies that a saved model loads with identical weights, options and checksum.
        """
        path = os.path.join(self.directory, 'model.txt')
        self.model.replace(calibration=2.5).save(path)
        loaded = LinearModel.load(path)

        self.assertEqual(list(loaded.weights), [1.0, -2.0])
        self.assertEqual((loaded.bias, loaded.loss, loaded.penalty, loaded.C), (0.5, LOGISTIC, L2, 1.0))
        self.assertEqual(loaded.calibration, 2.5)
        self.assertEqual(loaded.vocabulary_checksum, 'abc')
        self.assertIsNone(loaded.selected_features)

    def test_bad_model_file(self):
        """
        Verifies that foreign or truncated files raise ModelFormatError.
        """
        with self.assertRaises(ModelFormatError):
            LinearModel.parse(u'other-format\t1\n')
        text = self.model.serialize()
        with self.assertRaises(ModelFormatError):
            LinearModel.parse(text.rsplit(u'\n', 2)[0])

    def test_vocabulary_check(self):
        """
        Verifies that a vocabulary with another checksum is refused.
        """
        check_vocabulary(self.model, Mock(checksum=Mock(return_value='abc')))
        with self.assertRaises(VocabularyMismatch):
            check_vocabulary(self.model, Mock(checksum=Mock(return_value='xyz')))


class CalibrationTestCase(unittest.TestCase):
    """
    Tests for calibrate.
    """

    def test_hinge_calibration(self):
        """
        Verifies that calibration keeps a positive slope so probabilities agree with the margin sign.
        """
        rng = np.random.RandomState(3)
        X = np.vstack([rng.normal(1.0, 1.0, (40, 2)), rng.normal(-1.0, 1.0, (40, 2))])
        y = np.array([1] * 40 + [0] * 40)
        model = calibrate(train(X, y, loss=HINGE, C=1.0, seed=0, epochs=10), X, y)

        self.assertGreater(model.calibration, 0.0)
        probabilities = linear_model.predict_proba(model, X)
        margins = linear_model.decision_function(model, X)
        self.assertTrue(np.all((probabilities[:, 1] > 0.5) == (margins > 0)))

    def test_single_class_holdout(self):
        """
        Verifies that a held-out set with one class keeps the identity slope.
        """
        model = LinearModel([1.0], 0.0, HINGE, L2, 1.0)

        self.assertEqual(calibrate(model, np.array([[1.0], [2.0]]), [1, 1]).calibration, 1.0)
