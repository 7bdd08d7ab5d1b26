"""
Mini-batch Adam training of the neural classifiers with best-epoch selection on validation macro-F1, and
the repeated-seed evaluation harness.
"""

import logging
from collections import OrderedDict, namedtuple

import numpy as np

from hwk.autodiff import ops
from hwk.autodiff.optim import adam_step
from hwk.autodiff.tensor import backward, parameter, recording
from hwk.evaluation.metrics import macro_f1
from hwk.neural import bigru, charcnn
from hwk.neural.quantizer import CharQuantizer
from hwk.utils.errors import LengthMismatch, UnlabeledDataset
from hwk.utils.report_utils import write_csv

HISTORY_COLUMNS = ('epoch', 'train_loss', 'val_macro_f1')
PREDICT_BATCH = 256

HistoryRow = namedtuple('HistoryRow', HISTORY_COLUMNS)
TrainingResult = namedtuple('TrainingResult', ['params', 'history', 'best_epoch'])
RepeatSummary = namedtuple('RepeatSummary', ['seeds', 'scores', 'mean', 'std'])


class GruNetwork(object):
    """
    BiGRU over pre-padded word ids.
    """
    name = 'bigru'

    def __init__(self, hyper):
        self.hyper = hyper

    def init_params(self, rng):
        return bigru.init_params(self.hyper, rng)

    def graph(self, params, inputs, train=False, rng=None):
        return bigru.bigru_graph(self.hyper, params, inputs, train, rng)


class CnnNetwork(object):
    """
    Character CNN over backward character indices, one-hot expanded per batch.
    """
    name = 'charcnn'

    def __init__(self, hyper, quantizer=None):
        self.hyper = hyper
        self.quantizer = quantizer or CharQuantizer(max_len=hyper.max_len)

    def init_params(self, rng):
        return charcnn.init_params(self.hyper, rng)

    def graph(self, params, inputs, train=False, rng=None):
        return charcnn.charcnn_graph(self.hyper, params, self.quantizer.one_hot(inputs), train, rng)


def one_hot_labels(labels, classes):
    targets = np.zeros((len(labels), classes))
    targets[np.arange(len(labels)), np.asarray(labels, dtype=np.int64)] = 1.0
    return targets


def predict_proba(network, params, inputs, batch=PREDICT_BATCH):
    """
    Returns:
        np.ndarray: (n, classes) probabilities, computed without dropout
    """
    inputs = np.asarray(inputs)
    if not len(inputs):
        return np.zeros((0, network.hyper.classes))
    chunks = [network.graph(params, inputs[start:start + batch]).data for start in range(0, len(inputs), batch)]
    return np.concatenate(chunks)


def predict(network, params, inputs):
    return np.argmax(predict_proba(network, params, inputs), axis=1)


def _snapshot(params):
    return OrderedDict((name, p.data.copy()) for name, p in params.items())


def train_classifier(network, train_inputs, train_labels, val_inputs, val_labels, epochs, seed):
    """
    Trains a network and keeps the parameters of the epoch with the best validation macro-F1 (the earliest
    on ties).

    Args:
        network(GruNetwork|CnnNetwork): architecture and hyperparameters
        train_inputs(np.ndarray): encoded training examples
        train_labels(list): their class labels
        val_inputs(np.ndarray): encoded validation examples, non-empty
        val_labels(list): their class labels
        epochs(int): passes over the training data
        seed(int): seed of initialisation, shuffling and dropout

    Returns:
        TrainingResult: best parameters, one HistoryRow per epoch and the selected epoch
    """
    train_inputs, val_inputs = np.asarray(train_inputs), np.asarray(val_inputs)
    if len(train_inputs) != len(train_labels) or len(val_inputs) != len(val_labels):
        raise LengthMismatch("Inputs and labels differ in length")
    if not len(val_inputs):
        raise UnlabeledDataset("Neural training needs a non-empty validation split")

    hyper = network.hyper
    rng = np.random.RandomState(seed)
    params = network.init_params(rng)
    names = list(params)
    targets = one_hot_labels(train_labels, hyper.classes)
    state = None

    history = []
    best_score, best_epoch, best_params = -1.0, 0, _snapshot(params)

    for epoch in range(1, epochs + 1):
        order = rng.permutation(len(train_inputs))
        total_loss = 0.0
        for start in range(0, len(order), hyper.batch):
            rows = order[start:start + hyper.batch]
            with recording():
                probabilities = network.graph(params, train_inputs[rows], train=True, rng=rng)
                loss = ops.cross_entropy(probabilities, targets[rows])
            backward(loss)

            values, state = adam_step([params[n].data for n in names], [params[n].grad for n in names], state,
                                      lr=hyper.lr)
            for name, value in zip(names, values):
                params[name].data = value
                params[name].grad = None
            total_loss += loss.item() * len(rows)

        train_loss = total_loss / len(order)
        score = macro_f1(list(val_labels), predict(network, params, val_inputs).tolist())
        history.append(HistoryRow(epoch, train_loss, score))
        logging.info("{} epoch {}: train loss {:.4f}, val macro-F1 {:.4f}".format(
            network.name, epoch, train_loss, score
        ))

        if score > best_score:
            best_score, best_epoch, best_params = score, epoch, _snapshot(params)

    logging.info("{}: keeping epoch {} (val macro-F1 {:.4f})".format(network.name, best_epoch, best_score))
    restored = OrderedDict((name, parameter(value, name)) for name, value in best_params.items())
    return TrainingResult(restored, history, best_epoch)


def write_history(history, path):
    write_csv([row._asdict() for row in history], HISTORY_COLUMNS, path)


def evaluate_repeats(run_fn, seeds):
    """
    Runs one experiment per seed and summarises its score.

    Args:
        run_fn(callable): seed to score
        seeds(list): seeds

    Returns:
        RepeatSummary: the scores with their mean and standard deviation
    """
    seeds = list(seeds)
    scores = [float(run_fn(seed)) for seed in seeds]
    summary = RepeatSummary(seeds, scores, float(np.mean(scores)), float(np.std(scores)))
    logging.info("{} repeats: {:.4f} +- {:.4f}".format(len(seeds), summary.mean, summary.std))
    return summary
