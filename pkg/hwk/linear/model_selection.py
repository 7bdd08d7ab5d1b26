"""
Stratified k-fold cross-validation and grid search over (loss, penalty, C).
"""

import logging
from collections import namedtuple

import numpy as np
from joblib import Parallel, delayed
from sklearn.model_selection import StratifiedKFold

from hwk.evaluation.metrics import macro_f1
from hwk.linear import model as linear_model
from hwk.linear.model import HINGE, L1, L2, LOGISTIC
from hwk.linear.sgd import to_design_matrix, train
from hwk.utils.errors import ClassTooSmall, ConfigError

GridPoint = namedtuple('GridPoint', ['loss', 'penalty', 'C'])
CVResult = namedtuple('CVResult', ['params', 'fold_scores', 'mean', 'std'])

DEFAULT_GRID = tuple(
    GridPoint(loss, penalty, C)
    for C in (0.01, 0.1, 1.0, 10.0)
    for penalty in (L1, L2)
    for loss in (LOGISTIC, HINGE)
)
DEFAULT_FOLDS = 10


def as_grid_point(point):
    """
    Accepts a GridPoint, a (loss, penalty, C) tuple or a dict with those keys.
    """
    if isinstance(point, dict):
        return GridPoint(point['loss'], point['penalty'], float(point['C']))
    loss, penalty, C = point
    return GridPoint(loss, penalty, float(C))


def stratified_folds(y, k, seed):
    """
    Stratified k-fold partition of the rows.

    Args:
        y(list): labels
        k(int): number of folds
        seed(int): shuffling seed

    Returns:
        list: (train indices, held-out indices) per fold, each sorted
    """
    if k < 2:
        raise ConfigError("Cross-validation needs k >= 2, got {}".format(k))
    y = np.asarray(y)
    classes, counts = np.unique(y, return_counts=True)
    for label, count in zip(classes, counts):
        if count < k:
            raise ClassTooSmall("Class {} has {} members, fewer than {} folds".format(label, count, k))
    if len(classes) < 2:
        raise ClassTooSmall("Cross-validation needs two classes, got {}".format(list(classes)))

    splitter = StratifiedKFold(n_splits=k, shuffle=True, random_state=seed)
    return [(np.sort(train_idx), np.sort(test_idx)) for train_idx, test_idx in splitter.split(np.zeros(len(y)), y)]


def select_rows(X, train_idx, test_idx):
    """
    Default featurize: slices an already built design matrix.
    """
    return X[train_idx], X[test_idx]


def fold_matrices(X, folds, featurize=None):
    """
    Feature rows of every fold.

    Args:
        X: a design matrix, or whatever featurize reads its rows from
        folds(list): (train indices, held-out indices) pairs
        featurize(callable): (X, train indices, held-out indices) -> (train rows, held-out rows). It must fit
            anything learned from data on the training indices only.

    Returns:
        list: (train rows, held-out rows) per fold
    """
    if featurize is None:
        X, featurize = to_design_matrix(X), select_rows
    return [featurize(X, train_idx, test_idx) for train_idx, test_idx in folds]


def _fold_score(X_train, y_train, X_test, y_test, point, seed, options):
    fitted = train(X_train, y_train, loss=point.loss, penalty=point.penalty, C=point.C, seed=seed, **options)
    return macro_f1(y_test, linear_model.predict(fitted, X_test))


def _summarise(point, scores):
    scores = [float(s) for s in scores]
    return CVResult(point, scores, float(np.mean(scores)), float(np.std(scores)))


def cross_validate(X, y, point, k=DEFAULT_FOLDS, seed=0, featurize=None, **options):
    """
    Macro-F1 of one grid point on every stratified fold.

    Returns:
        CVResult: per-fold scores with their mean and standard deviation
    """
    y = np.asarray(y)
    point = as_grid_point(point)
    folds = stratified_folds(y, k, seed)
    scores = [
        _fold_score(X_train, y[train_idx], X_test, y[test_idx], point, seed, options)
        for (train_idx, test_idx), (X_train, X_test) in zip(folds, fold_matrices(X, folds, featurize))
    ]
    return _summarise(point, scores)


def grid_search_cv(X, y, grid=DEFAULT_GRID, k=DEFAULT_FOLDS, seed=0, n_jobs=1, featurize=None, **options):
    """
    Cross-validates every grid point on the same folds and picks the highest mean macro-F1.

    Args:
        X: feature rows, or the examples featurize turns into them
        y(list): binary labels
        grid(iterable): grid points, see as_grid_point
        k(int): number of folds
        seed(int): seed shared by the fold split and every training run
        n_jobs(int): joblib workers; results do not depend on it
        featurize(callable): per-fold feature builder, see fold_matrices; called once per fold
        options: further train() keyword arguments

    Returns:
        (GridPoint, list): the best point (ties go to the earliest) and one CVResult per grid point
    """
    y = np.asarray(y)
    points = [as_grid_point(point) for point in grid]
    if not points:
        raise ConfigError("Grid search needs at least one grid point")
    folds = stratified_folds(y, k, seed)
    matrices = fold_matrices(X, folds, featurize)

    scores = Parallel(n_jobs=n_jobs)(
        delayed(_fold_score)(X_train, y[train_idx], X_test, y[test_idx], point, seed, options)
        for point in points
        for (train_idx, test_idx), (X_train, X_test) in zip(folds, matrices)
    )

    results = [_summarise(point, scores[i * k:(i + 1) * k]) for i, point in enumerate(points)]
    best = results[0]
    for result in results[1:]:
        if result.mean > best.mean:
            best = result

    for result in results:
        logging.info("CV {}/{} C={}: macro-F1 {:.4f} +- {:.4f}".format(
            result.params.loss, result.params.penalty, result.params.C, result.mean, result.std
        ))
    logging.info("Best grid point: {}".format(best.params))

    return best.params, results
