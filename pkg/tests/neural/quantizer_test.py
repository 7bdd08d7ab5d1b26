# -*- coding: utf-8 -*-
"""
Tests for backward character quantization.
"""

import unittest

import numpy as np

from hwk.neural.quantizer import ALPHABET, CharQuantizer, quantize
from hwk.utils.errors import ConfigError


class QuantizerTestCase(unittest.TestCase):
    """
    Tests for CharQuantizer and quantize.
    """

    def setUp(self):
        self.q = CharQuantizer()

    def test_alphabet(self):
        """
        Verifies the 70 character alphabet.
        """
        self.assertEqual(len(ALPHABET), 70)
        self.assertEqual(self.q.size, 70)

    def test_backward_layout(self):
        """
        Verifies that the last character lands in column 0 and the rest of the matrix stays empty.
        """
        matrix = quantize(u'ab', self.q)

        self.assertEqual(matrix.shape, (70, 140))
        self.assertEqual(matrix[1, 0], 1.0)
        self.assertEqual(matrix[0, 1], 1.0)
        self.assertEqual(matrix.sum(), 2.0)

    def test_unknown_and_case(self):
        """
        Verifies that uppercase letters are lowered and characters outside the alphabet give empty columns.
        """
        matrix = quantize(u'A€z', self.q)

        self.assertEqual(matrix[25, 0], 1.0)
        self.assertEqual(matrix[:, 1].sum(), 0.0)
        self.assertEqual(matrix[0, 2], 1.0)

    def test_long_text_keeps_last_characters(self):
        """
        Verifies that only the last max_len characters are encoded.
        """
        q = CharQuantizer(max_len=3)

        self.assertEqual(list(q.indices(u'abcdef')), [5, 4, 3])
        self.assertEqual(list(q.indices(u'')), [-1, -1, -1])

    def test_batch(self):
        """
        Verifies batch shapes, including the empty batch.
        """
        rows = self.q.encode_batch([u'hi', u'there'])

        self.assertEqual(rows.shape, (2, 140))
        self.assertEqual(self.q.one_hot(rows).shape, (2, 70, 140))
        self.assertEqual(self.q.encode_batch([]).shape, (0, 140))
        np.testing.assert_array_equal(self.q.one_hot(rows)[1], quantize(u'there', self.q))

    def test_bad_configuration(self):
        """
        Verifies that duplicate characters and non-positive lengths are refused.
        """
        with self.assertRaises(ConfigError):
            CharQuantizer(alphabet=u'abca')
        with self.assertRaises(ConfigError):
            CharQuantizer(max_len=0)
