"""
Seeded mini-batch stochastic subgradient descent for L1/L2 regularized logistic and hinge losses.

The objective is (1/n) * sum(loss(y_i * (w.x_i + b))) + (1/C) * penalty(w), with penalty 0.5 * ||w||^2 for L2
and ||w||_1 for L1. L1 runs take a proximal (soft-threshold) step after every update, which produces exact
zeros. Once per epoch the averaged iterate is evaluated and kept only if the objective did not increase.
"""

import logging
from collections import namedtuple

import numpy as np
import scipy.sparse as sp
from scipy.special import expit

from hwk.features.assembler import FeatureVector
from hwk.linear.model import HINGE, L1, L2, LOGISTIC, LOSSES, PENALTIES, LinearModel
from hwk.utils.errors import AllZero, DimensionMismatch, ModelError, SingleClass

CONSTANT = 'constant'
INVSCALING = 'invscaling'
OPTIMAL = 'optimal'
SCHEDULES = (CONSTANT, INVSCALING, OPTIMAL)

DEFAULT_C = 0.1
DEFAULT_EPOCHS = 20
DEFAULT_LR = 0.1
DEFAULT_BATCH_SIZE = 32

SgdResult = namedtuple('SgdResult', ['weights', 'bias', 'history'])


def to_design_matrix(X):
    """
    Stacks FeatureVectors (or passes matrices through) into a 2-D matrix.
    """
    if isinstance(X, (list, tuple)) and X and isinstance(X[0], FeatureVector):
        return sp.vstack([x.to_csr() for x in X], format='csr')
    if sp.issparse(X):
        return sp.csr_matrix(X)
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2:
        raise DimensionMismatch("Expected a 2-D feature matrix, got shape {}".format(X.shape))
    return X


def loss_values(loss, z):
    if loss == LOGISTIC:
        return np.logaddexp(0.0, -z)
    return np.maximum(0.0, 1.0 - z)


def loss_derivative(loss, z):
    """
    d loss / d z at z = y * margin.
    """
    if loss == LOGISTIC:
        return -expit(-z)
    return np.where(z < 1.0, -1.0, 0.0)


def penalty_value(penalty, weights):
    if penalty == L1:
        return float(np.abs(weights).sum())
    return 0.5 * float(np.dot(weights, weights))


def objective(weights, bias, X, y_signed, loss, penalty, C):
    """
    Regularized training objective.

    Args:
        weights(np.ndarray): weights
        bias(float): intercept
        X: design matrix
        y_signed(np.ndarray): labels in {-1, +1}
        loss(str): logistic or hinge
        penalty(str): l1 or l2
        C(float): inverse regularization strength

    Returns:
        float: objective value
    """
    margins = np.asarray(X.dot(weights)).ravel() + bias
    return float(loss_values(loss, y_signed * margins).mean()) + penalty_value(penalty, weights) / C


def step_size(schedule, lr, lam, t):
    if schedule == CONSTANT:
        return lr
    if schedule == INVSCALING:
        return lr / np.sqrt(t)
    return lr / (1.0 + lr * lam * t)


def _signed_labels(y):
    y = np.asarray(y)
    classes = np.unique(y)
    if len(classes) < 2:
        raise SingleClass("Training labels contain only class {}".format(classes[0] if len(classes) else None))
    if len(classes) > 2:
        raise ModelError("Binary training got {} classes; use one-vs-rest".format(len(classes)))
    return np.where(y == classes[1], 1.0, -1.0), (classes[0].item(), classes[1].item())


def _check_options(loss, penalty, C, schedule):
    if loss not in LOSSES:
        raise ModelError("Unknown loss {!r}, expected one of {}".format(loss, LOSSES))
    if penalty not in PENALTIES:
        raise ModelError("Unknown penalty {!r}, expected one of {}".format(penalty, PENALTIES))
    if schedule not in SCHEDULES:
        raise ModelError("Unknown schedule {!r}, expected one of {}".format(schedule, SCHEDULES))
    if C <= 0:
        raise ModelError("C must be positive, got {}".format(C))


def sgd_fit(X, y_signed, loss, penalty, C, seed, epochs=DEFAULT_EPOCHS, lr=DEFAULT_LR, schedule=OPTIMAL,
            batch_size=DEFAULT_BATCH_SIZE, fit_intercept=True):
    """
    Runs the optimizer.

    Args:
        X: design matrix, n x d
        y_signed(np.ndarray): labels in {-1, +1}
        loss(str): logistic or hinge
        penalty(str): l1 or l2
        C(float): inverse regularization strength
        seed(int): seed of the shuffling generator
        epochs(int): passes over the data
        lr(float): base learning rate
        schedule(str): constant, invscaling or optimal
        batch_size(int): rows per update, None for the full batch
        fit_intercept(bool): learn a bias term

    Returns:
        SgdResult: weights, bias and the objective of the kept iterate at every checkpoint
    """
    n, d = X.shape
    lam = 1.0 / C
    batch = n if batch_size is None else max(1, min(batch_size, n))
    rng = np.random.RandomState(seed)
    average_from = 1 if epochs > 1 else 0

    w = np.zeros(d)
    b = 0.0
    w_avg = np.zeros(d)
    b_avg = 0.0
    averaged = 0
    t = 0

    best = (np.zeros(d), 0.0)
    best_objective = np.inf
    history = []

    for epoch in range(epochs):
        order = rng.permutation(n)
        for start in range(0, n, batch):
            rows = order[start:start + batch]
            t += 1
            eta = step_size(schedule, lr, lam, t)

            X_batch = X[rows]
            y_batch = y_signed[rows]
            margins = np.asarray(X_batch.dot(w)).ravel() + b
            scale = y_batch * loss_derivative(loss, y_batch * margins)

            grad_w = np.asarray(X_batch.T.dot(scale)).ravel() / len(rows)
            if penalty == L2:
                grad_w = grad_w + lam * w
            w = w - eta * grad_w
            if fit_intercept:
                b -= eta * float(scale.mean())
            if penalty == L1:
                w = np.sign(w) * np.maximum(np.abs(w) - eta * lam, 0.0)

            if epoch >= average_from:
                averaged += 1
                w_avg += (w - w_avg) / averaged
                b_avg += (b - b_avg) / averaged

        if averaged:
            candidate_w, candidate_b = w_avg.copy(), b_avg
        else:
            candidate_w, candidate_b = w.copy(), b
        if penalty == L1:
            # the average of sparse iterates is dense; keep the support of the last proximal step
            candidate_w[w == 0] = 0.0

        value = objective(candidate_w, candidate_b, X, y_signed, loss, penalty, C)
        if value <= best_objective:
            best_objective = value
            best = (candidate_w, candidate_b)
        history.append(best_objective)

    return SgdResult(best[0], best[1], history)


def train(X, y, loss=LOGISTIC, penalty=L2, C=DEFAULT_C, seed=0, epochs=DEFAULT_EPOCHS, lr=DEFAULT_LR,
          schedule=OPTIMAL, batch_size=DEFAULT_BATCH_SIZE, fit_intercept=True, vocabulary_checksum=None):
    """
    Trains a binary linear classifier.

    Args:
        X: FeatureVectors, a sparse matrix or a dense 2-D array
        y(list): binary labels, both classes present
        loss(str): logistic or hinge
        penalty(str): l1 or l2
        C(float): inverse regularization strength
        seed(int): seed of the shuffling generator
        epochs(int): passes over the data
        lr(float): base learning rate
        schedule(str): constant, invscaling or optimal
        batch_size(int): rows per update, None for the full batch
        fit_intercept(bool): learn a bias term
        vocabulary_checksum(str): checksum of the vocabulary behind the features

    Returns:
        LinearModel: the model; its `history` attribute lists the checkpoint objectives
    """
    _check_options(loss, penalty, C, schedule)
    X = to_design_matrix(X)
    if X.shape[0] != len(y):
        raise DimensionMismatch("{} feature rows but {} labels".format(X.shape[0], len(y)))
    if X.shape[0] < 2:
        raise SingleClass("Training needs at least two examples")

    y_signed, classes = _signed_labels(y)
    result = sgd_fit(X, y_signed, loss, penalty, C, seed, epochs, lr, schedule, batch_size, fit_intercept)

    logging.info("Trained {}/{} C={} on {} rows, objective {:.6f}".format(
        loss, penalty, C, X.shape[0], result.history[-1] if result.history else float('nan')
    ))

    model = LinearModel(result.weights, result.bias, loss, penalty, C, classes,
                        vocabulary_checksum=vocabulary_checksum, input_dimension=X.shape[1])
    model.history = result.history
    return model


def l1_reduce(X, y, C, seed, **options):
    """
    Selects features with an L1 regularized logistic regression.

    Args:
        X: design matrix
        y(list): binary labels
        C(float): inverse regularization strength
        seed(int): shuffling seed
        options: further train() keyword arguments

    Returns:
        np.ndarray: sorted indices of the features with non-zero weight
    """
    model = train(X, y, loss=LOGISTIC, penalty=L1, C=C, seed=seed, **options)
    selected = np.flatnonzero(model.weights)
    if not len(selected):
        raise AllZero("L1 selection with C={} kept no feature; widen the C grid".format(C))
    logging.info("L1 selection kept {} of {} features".format(len(selected), len(model.weights)))
    return selected


def reduce_columns(X, selected):
    """
    Returns:
        matrix: X restricted to the selected columns
    """
    return to_design_matrix(X)[:, selected]


def train_reduced(X, y, selected, **options):
    """
    Trains on the selected columns only and records the selection so the model accepts full-width rows.

    Returns:
        LinearModel: model over the selected columns
    """
    X = to_design_matrix(X)
    model = train(reduce_columns(X, selected), y, **options)
    history = model.history
    model = model.replace(selected_features=selected, input_dimension=X.shape[1])
    model.history = history
    return model
