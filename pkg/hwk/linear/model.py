"""
Fitted linear classifiers: decision values, probabilities, calibration and the text serialization format.
"""

import io
import logging

import numpy as np
import scipy.sparse as sp
from scipy.special import expit
from sklearn.linear_model import LogisticRegression

from hwk.features.assembler import FeatureVector
from hwk.features.tfidf import SparseVector
from hwk.utils.errors import DimensionMismatch, ModelFormatError, VocabularyMismatch

LOGISTIC = 'logistic'
HINGE = 'hinge'
LOSSES = (LOGISTIC, HINGE)
L1 = 'l1'
L2 = 'l2'
PENALTIES = (L1, L2)

FORMAT_NAME = 'hwk-linear-model'
FORMAT_VERSION = 1
MIN_CALIBRATION_SLOPE = 1e-6


class LinearModel(object):
    """
    A binary linear classifier. classes[1] is predicted when the margin w.x + b is positive.
    """
    def __init__(self, weights, bias, loss, penalty, C, classes=(0, 1), calibration=None,
                 vocabulary_checksum=None, selected_features=None, input_dimension=None):
        """
        Initialises the model.

        Args:
            weights(np.ndarray): one weight per (selected) feature
            bias(float): intercept
            loss(str): logistic or hinge
            penalty(str): l1 or l2
            C(float): inverse regularization strength
            classes(tuple): negative and positive class labels
            calibration(float): slope of the logistic link for hinge models, None for the identity slope
            vocabulary_checksum(str): checksum of the vocabulary the features were built with
            selected_features(np.ndarray): input columns the weights apply to, None for all
            input_dimension(int): width of the feature rows the model accepts
        """
        self.weights = np.asarray(weights, dtype=np.float64)
        self.bias = float(bias)
        self.loss = loss
        self.penalty = penalty
        self.C = float(C)
        self.classes = tuple(classes)
        self.calibration = None if calibration is None else float(calibration)
        self.vocabulary_checksum = vocabulary_checksum
        self.selected_features = None if selected_features is None else np.asarray(selected_features, dtype=np.int64)
        self.input_dimension = int(input_dimension) if input_dimension is not None else len(self.weights)

        if self.C <= 0:
            raise ValueError("C must be positive, got {}".format(C))
        if not np.all(np.isfinite(self.weights)):
            raise ValueError("Model weights must be finite")

    def replace(self, **changes):
        """
        Returns:
            LinearModel: a copy with some fields changed
        """
        fields = dict(
            weights=self.weights,
            bias=self.bias,
            loss=self.loss,
            penalty=self.penalty,
            C=self.C,
            classes=self.classes,
            calibration=self.calibration,
            vocabulary_checksum=self.vocabulary_checksum,
            selected_features=self.selected_features,
            input_dimension=self.input_dimension
        )
        fields.update(changes)
        return LinearModel(**fields)

    def full_weights(self):
        """
        Returns:
            np.ndarray: weights spread over every input column, zeros for unselected ones
        """
        if self.selected_features is None:
            return self.weights.copy()
        full = np.zeros(self.input_dimension)
        full[self.selected_features] = self.weights
        return full

    def serialize(self):
        selected = u'none' if self.selected_features is None else u','.join(str(i) for i in self.selected_features)
        lines = [
            u'{}\t{}'.format(FORMAT_NAME, FORMAT_VERSION),
            u'loss\t{}'.format(self.loss),
            u'penalty\t{}'.format(self.penalty),
            u'C\t{!r}'.format(self.C),
            u'classes\t{}'.format(u'\t'.join(str(c) for c in self.classes)),
            u'calibration\t{}'.format(u'none' if self.calibration is None else repr(self.calibration)),
            u'vocabulary_checksum\t{}'.format(self.vocabulary_checksum or u'none'),
            u'input_dimension\t{}'.format(self.input_dimension),
            u'selected\t{}'.format(selected),
            u'bias\t{!r}'.format(self.bias),
            u'weights\t{}'.format(len(self.weights))
        ]
        lines.extend(repr(float(w)) for w in self.weights)
        return u'\n'.join(lines) + u'\n'

    def save(self, path):
        with io.open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(self.serialize())

    @classmethod
    def parse(cls, text, path=None):
        lines = text.splitlines()
        header_size = 11
        try:
            name, version = lines[0].split(u'\t')
            if name != FORMAT_NAME or int(version) != FORMAT_VERSION:
                raise ModelFormatError("Unsupported model format {} {}".format(name, version), path=path, line=1)
            fields = {}
            for line in lines[1:header_size]:
                key, _, value = line.partition(u'\t')
                fields[key] = value
            count = int(fields['weights'])
            weights = [float(line) for line in lines[header_size:header_size + count]]
            if len(weights) != count:
                raise ModelFormatError("Expected {} weights, found {}".format(count, len(weights)), path=path)
            classes = [int(c) for c in fields['classes'].split(u'\t')]
            selected = None if fields['selected'] == u'none' else [int(i) for i in fields['selected'].split(u',') if i]
            return cls(
                weights=weights,
                bias=float(fields['bias']),
                loss=fields['loss'],
                penalty=fields['penalty'],
                C=float(fields['C']),
                classes=classes,
                calibration=None if fields['calibration'] == u'none' else float(fields['calibration']),
                vocabulary_checksum=None if fields['vocabulary_checksum'] == u'none' else fields['vocabulary_checksum'],
                selected_features=selected,
                input_dimension=int(fields['input_dimension'])
            )
        except (IndexError, KeyError, ValueError) as e:
            raise ModelFormatError("Malformed model file ({})".format(e), path=path)

    @classmethod
    def load(cls, path):
        with io.open(path, 'r', encoding='utf-8') as f:
            return cls.parse(f.read(), path=path)


def as_matrix(x):
    """
    Brings a single vector or a batch into a 2-D (sparse or dense) matrix.

    Returns:
        (matrix, bool): the rows, and whether a single vector was given
    """
    if isinstance(x, (FeatureVector, SparseVector)):
        return x.to_csr(), True
    if sp.issparse(x):
        return sp.csr_matrix(x), False
    x = np.asarray(x, dtype=np.float64)
    if x.ndim == 1:
        return x.reshape(1, -1), True
    return x, False


def decision_function(model, X):
    """
    Raw margins w.x + b.

    Args:
        model(LinearModel): fitted model
        X: rows of features (matrix, FeatureVector or 1-D array)

    Returns:
        np.ndarray: one margin per row
    """
    X, _ = as_matrix(X)
    if X.shape[1] != model.input_dimension:
        raise DimensionMismatch("Model expects {} features, got {}".format(model.input_dimension, X.shape[1]))
    if model.selected_features is not None:
        X = X[:, model.selected_features]
    return np.asarray(X.dot(model.weights)).ravel() + model.bias


def predict_proba(model, x):
    """
    Class probabilities: sigmoid of the margin for logistic models, sigmoid of the calibrated margin for
    hinge models.

    Args:
        model(LinearModel): fitted model
        x: one feature vector or a batch of rows

    Returns:
        np.ndarray: (2,) for one vector, (n, 2) for a batch; columns follow model.classes
    """
    _, single = as_matrix(x)
    margins = decision_function(model, x)
    slope = model.calibration if (model.loss == HINGE and model.calibration is not None) else 1.0
    positive = expit(slope * margins)
    probabilities = np.column_stack([1.0 - positive, positive])
    return probabilities[0] if single else probabilities


def predict(model, X):
    """
    Returns:
        np.ndarray: predicted class labels; a zero margin goes to the first class
    """
    margins = decision_function(model, X)
    return np.where(margins > 0, model.classes[1], model.classes[0])


def calibrate(model, X_holdout, y_holdout):
    """
    Fits the slope of the logistic link sigmoid(a * margin) on held-out data. The slope is kept positive so
    the most probable class always matches the margin's sign.

    Args:
        model(LinearModel): fitted hinge model
        X_holdout: held-out feature rows
        y_holdout(list): their labels

    Returns:
        LinearModel: the calibrated copy
    """
    margins = decision_function(model, X_holdout).reshape(-1, 1)
    targets = (np.asarray(y_holdout) == model.classes[1]).astype(int)

    if len(np.unique(targets)) < 2:
        logging.warning("Calibration data holds a single class; keeping the identity slope")
        return model.replace(calibration=1.0)

    link = LogisticRegression(fit_intercept=False, C=1e6)
    link.fit(margins, targets)
    slope = max(float(link.coef_[0, 0]), MIN_CALIBRATION_SLOPE)
    logging.info("Calibrated hinge margins with slope {:.4f}".format(slope))

    return model.replace(calibration=slope)


def check_vocabulary(model, vocabulary):
    """
    Refuses a vocabulary other than the one the model was trained with.
    """
    if model.vocabulary_checksum is None:
        return
    checksum = vocabulary.checksum()
    if checksum != model.vocabulary_checksum:
        raise VocabularyMismatch("Model was trained on vocabulary {} but got {}".format(
            model.vocabulary_checksum[:12], checksum[:12]
        ))
