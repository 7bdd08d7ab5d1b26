"""
Tests for neural training, best-epoch selection and the repeat harness.
"""

import os
import shutil
import tempfile
import unittest

import numpy as np
from mock import Mock

from hwk.neural.hyper import cnn_hyper, gru_hyper
from hwk.neural.quantizer import CharQuantizer
from hwk.neural.training import (
    CnnNetwork,
    GruNetwork,
    evaluate_repeats,
    predict,
    predict_proba,
    train_classifier,
    write_history
)
from hwk.utils.errors import LengthMismatch, UnlabeledDataset
from hwk.utils.report_utils import read_csv


def word_data():
    # class 1 tweets contain id 2, class 0 tweets contain id 3
    inputs = np.array([[0, 4, 2], [0, 2, 5], [4, 5, 2], [0, 0, 2], [0, 4, 3], [0, 3, 5], [4, 5, 3], [0, 0, 3]])
    return inputs, [1, 1, 1, 1, 0, 0, 0, 0]


def separable_words(n=64, seed=0):
    # one indicative id per sequence: 2 for class 1, 3 for class 0, among filler ids 4 to 9
    rng = np.random.RandomState(seed)
    labels = np.arange(n) % 2
    inputs = rng.randint(4, 10, size=(n, 6))
    inputs[np.arange(n), rng.randint(0, 6, size=n)] = np.where(labels == 1, 2, 3)
    return inputs, labels.tolist()


def separable_characters(n=64, seed=0):
    # xxx marks class 1 and zzz class 0 inside 20 characters of filler
    rng = np.random.RandomState(seed)
    texts = []
    for i in range(n):
        chars = list(rng.choice(list(u'abcdefgh'), size=20))
        start = rng.randint(2, 15)
        chars[start:start + 3] = list(u'xxx' if i % 2 else u'zzz')
        texts.append(u''.join(chars))
    return texts, [i % 2 for i in range(n)]


def accuracy(network, result, inputs, labels):
    return np.mean(predict(network, result.params, inputs) == np.asarray(labels))


class TrainClassifierTestCase(unittest.TestCase):
    """
    Tests for train_classifier and the prediction helpers.
    """

    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.network = GruNetwork(gru_hyper('tiny', vocab_size=6, seq_len=3, batch=4, lr=0.05))

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_history_and_best_epoch(self):
        """
        Verifies one history row per epoch and that the kept epoch has the best validation macro-F1.
        """
        inputs, labels = word_data()
        result = train_classifier(self.network, inputs, labels, inputs, labels, epochs=5, seed=0)

        self.assertEqual([row.epoch for row in result.history], [1, 2, 3, 4, 5])
        scores = [row.val_macro_f1 for row in result.history]
        self.assertEqual(result.best_epoch, scores.index(max(scores)) + 1)
        self.assertTrue(all(row.train_loss > 0 for row in result.history))

    def test_learns_separable_words(self):
        """
        Verifies that a single indicative word is learned.
        """
        inputs, labels = word_data()
        result = train_classifier(self.network, inputs, labels, inputs, labels, epochs=40, seed=1)

        self.assertEqual(predict(self.network, result.params, inputs).tolist(), labels)

    def test_same_seed_same_model(self):
        """
        Verifies that the seed fully determines the trained parameters.
        """
        inputs, labels = word_data()
        first = train_classifier(self.network, inputs, labels, inputs, labels, epochs=2, seed=4)
        second = train_classifier(self.network, inputs, labels, inputs, labels, epochs=2, seed=4)

        self.assertEqual(first.history, second.history)
        for name in first.params:
            np.testing.assert_array_equal(first.params[name].data, second.params[name].data)

    def test_character_network(self):
        """
        Verifies that the character network trains on quantizer indices and predicts probability rows.
        """
        hyper = cnn_hyper('tiny')
        network = CnnNetwork(hyper, CharQuantizer(max_len=hyper.max_len))
        inputs = network.quantizer.encode_batch([u'love you', u'i hate you', u'nice day', u'hate them'])
        labels = [0, 1, 0, 1]
        result = train_classifier(network, inputs, labels, inputs, labels, epochs=1, seed=0)
        probabilities = predict_proba(network, result.params, inputs)

        self.assertEqual(probabilities.shape, (4, 2))
        np.testing.assert_allclose(probabilities.sum(axis=1), np.ones(4))
        self.assertEqual(predict_proba(network, result.params, inputs[:0]).shape, (0, 2))

    def test_word_network_fits_64_examples(self):
        """
        Verifies that the word network reaches 95% training accuracy on 64 examples within 200 epochs.
        """
        inputs, labels = separable_words()
        network = GruNetwork(gru_hyper('tiny', vocab_size=10, seq_len=6, batch=16, lr=0.05))
        result = train_classifier(network, inputs, labels, inputs, labels, epochs=200, seed=0)

        self.assertGreaterEqual(accuracy(network, result, inputs, labels), 0.95)

    def test_character_network_fits_64_examples(self):
        """
        Verifies that the character network reaches 95% training accuracy on 64 examples within 200 epochs.
        """
        texts, labels = separable_characters()
        network = CnnNetwork(cnn_hyper('tiny', batch=16, lr=0.02))
        inputs = network.quantizer.encode_batch(texts)
        result = train_classifier(network, inputs, labels, inputs, labels, epochs=200, seed=0)

        self.assertGreaterEqual(accuracy(network, result, inputs, labels), 0.95)

    def test_first_epoch_loss_near_ln2(self):
        """
        Verifies that both networks start close to uniform predictions on balanced labels.
        """
        inputs, labels = separable_words()
        word_network = GruNetwork(gru_hyper('tiny', vocab_size=10, seq_len=6, batch=16))
        texts, char_labels = separable_characters()
        char_network = CnnNetwork(cnn_hyper('tiny', batch=16))
        char_inputs = char_network.quantizer.encode_batch(texts)

        for network, x, y in ((word_network, inputs, labels), (char_network, char_inputs, char_labels)):
            result = train_classifier(network, x, y, x, y, epochs=1, seed=0)
            self.assertAlmostEqual(result.history[0].train_loss, np.log(2), delta=0.1)

    def test_errors(self):
        """
        Verifies that mismatched labels and an empty validation split are refused.
        """
        inputs, labels = word_data()
        with self.assertRaises(LengthMismatch):
            train_classifier(self.network, inputs, labels[:-1], inputs, labels, epochs=1, seed=0)
        with self.assertRaises(UnlabeledDataset):
            train_classifier(self.network, inputs, labels, inputs[:0], [], epochs=1, seed=0)

    def test_write_history(self):
        """
        Verifies the history CSV columns and values.
        """
        inputs, labels = word_data()
        result = train_classifier(self.network, inputs, labels, inputs, labels, epochs=2, seed=0)
        path = os.path.join(self.directory, 'history.csv')
        write_history(result.history, path)
        frame = read_csv(path)

        self.assertEqual(list(frame.columns), ['epoch', 'train_loss', 'val_macro_f1'])
        self.assertEqual(frame['epoch'].tolist(), [1, 2])


class EvaluateRepeatsTestCase(unittest.TestCase):
    """
    Tests for evaluate_repeats.
    """

    def test_summary(self):
        """
        Verifies that every seed is run once and the scores are summarised.
        """
        run_fn = Mock(side_effect=lambda seed: 0.1 * seed)
        summary = evaluate_repeats(run_fn, [1, 2, 3])

        self.assertEqual([c[0][0] for c in run_fn.call_args_list], [1, 2, 3])
        self.assertEqual(summary.seeds, [1, 2, 3])
        self.assertAlmostEqual(summary.mean, 0.2)
        self.assertAlmostEqual(summary.std, np.std([0.1, 0.2, 0.3]))
