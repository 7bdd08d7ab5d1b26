"""
One-vs-rest reduction of multiclass problems to binary linear models.
"""

import logging

import numpy as np

from hwk.linear import model as linear_model
from hwk.linear.sgd import to_design_matrix, train
from hwk.utils.errors import SingleClass


class OneVsRestModel(object):
    """
    One binary model per class. With two classes a single model separates classes[1] from classes[0].
    """
    def __init__(self, models, classes):
        self.models = list(models)
        self.classes = tuple(classes)

    @property
    def binary(self):
        return len(self.classes) == 2


def one_vs_rest_train(X, y, **options):
    """
    Trains one binary model per class.

    Args:
        X: feature rows
        y(list): class labels, at least two distinct
        options: train() keyword arguments shared by every binary model

    Returns:
        OneVsRestModel: the fitted models
    """
    X = to_design_matrix(X)
    y = np.asarray(y)
    classes = [c.item() for c in np.unique(y)]
    if len(classes) < 2:
        raise SingleClass("One-vs-rest needs at least two classes, got {}".format(classes))

    if len(classes) == 2:
        return OneVsRestModel([train(X, y, **options)], classes)

    models = []
    for label in classes:
        logging.info("Training one-vs-rest model for class {}".format(label))
        models.append(train(X, (y == label).astype(int), **options))
    return OneVsRestModel(models, classes)


def one_vs_rest_predict_proba(ovr, X):
    """
    Per-class probabilities, each row normalised to sum to 1.

    Returns:
        np.ndarray: rows x classes
    """
    if ovr.binary:
        probabilities = linear_model.predict_proba(ovr.models[0], X)
        return probabilities.reshape(-1, 2)

    scores = np.column_stack([linear_model.predict_proba(m, X).reshape(-1, 2)[:, 1] for m in ovr.models])
    totals = scores.sum(axis=1, keepdims=True)
    uniform = np.full_like(scores, 1.0 / scores.shape[1])
    return np.where(totals > 0, scores / np.where(totals > 0, totals, 1.0), uniform)


def one_vs_rest_predict(ovr, X):
    """
    Class with the highest probability; ties go to the class with the lowest index.

    Returns:
        np.ndarray: predicted class labels
    """
    probabilities = one_vs_rest_predict_proba(ovr, X)
    return np.asarray(ovr.classes)[np.argmax(probabilities, axis=1)]
