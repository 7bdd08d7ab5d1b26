"""
Shared-task scoring: per-class precision, recall and F1, macro-F1, accuracy, exact match ratio and the
subtask B average. A zero denominator always yields 0, never NaN.
"""

from collections import OrderedDict, namedtuple

import numpy as np
from sklearn.metrics import accuracy_score, confusion_matrix, precision_recall_fscore_support

from hwk.data_models import AG, HS, LABEL_DIMENSIONS, TR
from hwk.utils.errors import IncompleteLabels, LengthMismatch

BINARY_LABELS = (0, 1)

MetricReport = namedtuple('MetricReport', ['precision', 'recall', 'f1', 'support', 'macro_f1', 'accuracy'])


class ConfusionMatrix(namedtuple('ConfusionMatrix', ['tp', 'fp', 'fn', 'tn'])):
    """
    Binary confusion counts, class 1 positive.
    """
    __slots__ = ()

    @property
    def total(self):
        return self.tp + self.fp + self.fn + self.tn

    def as_array(self):
        """
        Returns:
            np.ndarray: [[tn, fp], [fn, tp]], rows gold and columns predicted
        """
        return np.array([[self.tn, self.fp], [self.fn, self.tp]])


def _check_pairs(y_true, y_pred):
    if len(y_true) != len(y_pred):
        raise LengthMismatch("{} gold labels but {} predictions".format(len(y_true), len(y_pred)))
    if not len(y_true):
        raise LengthMismatch("Nothing to score: no label pairs")


def _ratio(numerator, denominator):
    return float(numerator) / denominator if denominator else 0.0


def binary_metrics(y_true, y_pred):
    """
    Scores binary predictions.

    Args:
        y_true(list): gold 0/1 labels
        y_pred(list): predicted 0/1 labels

    Returns:
        MetricReport: per-class (0, 1) precision, recall and F1 plus macro-F1 and accuracy
    """
    _check_pairs(y_true, y_pred)
    precision, recall, f1, support = precision_recall_fscore_support(
        y_true, y_pred, labels=list(BINARY_LABELS), zero_division=0
    )
    return MetricReport(
        precision=tuple(float(v) for v in precision),
        recall=tuple(float(v) for v in recall),
        f1=tuple(float(v) for v in f1),
        support=tuple(int(v) for v in support),
        macro_f1=float(np.mean(f1)),
        accuracy=float(accuracy_score(y_true, y_pred))
    )


def confusion(y_true, y_pred):
    """
    Returns:
        ConfusionMatrix: binary counts of the label pairs
    """
    _check_pairs(y_true, y_pred)
    tn, fp, fn, tp = confusion_matrix(y_true, y_pred, labels=list(BINARY_LABELS)).ravel()
    return ConfusionMatrix(int(tp), int(fp), int(fn), int(tn))


def confusion_counts(y_true, y_pred, labels):
    """
    Returns:
        np.ndarray: k x k counts, rows gold and columns predicted, in the order of labels
    """
    _check_pairs(y_true, y_pred)
    return confusion_matrix(y_true, y_pred, labels=list(labels))


def false_positive_rate(cm):
    return _ratio(cm.fp, cm.fp + cm.tn)


def _f1(precision, recall):
    return 2.0 * precision * recall / (precision + recall) if precision + recall else 0.0


def metrics_from_confusion(cm):
    """
    The same report as binary_metrics, computed from confusion counts.

    Args:
        cm(ConfusionMatrix): counts

    Returns:
        MetricReport: the report
    """
    precision = (_ratio(cm.tn, cm.tn + cm.fn), _ratio(cm.tp, cm.tp + cm.fp))
    recall = (_ratio(cm.tn, cm.tn + cm.fp), _ratio(cm.tp, cm.tp + cm.fn))
    f1 = tuple(_f1(p, r) for p, r in zip(precision, recall))
    return MetricReport(
        precision=precision,
        recall=recall,
        f1=f1,
        support=(cm.tn + cm.fp, cm.tp + cm.fn),
        macro_f1=(f1[0] + f1[1]) / 2.0,
        accuracy=_ratio(cm.tp + cm.tn, cm.total)
    )


def macro_f1(y_true, y_pred):
    """
    Unweighted mean of the per-class F1 over the classes present in either list.
    """
    _check_pairs(y_true, y_pred)
    labels = sorted(set(np.asarray(y_true).tolist()) | set(np.asarray(y_pred).tolist()))
    if len(labels) == 1:
        labels = list(BINARY_LABELS) if labels[0] in BINARY_LABELS else labels
    _, _, f1, _ = precision_recall_fscore_support(y_true, y_pred, labels=labels, zero_division=0)
    return float(np.mean(f1))


def task_score(report, positive_only=False):
    """
    Score of one label dimension: macro-F1, or the positive class F1 when positive_only is set.
    """
    return report.f1[1] if positive_only else report.macro_f1


def _check_label_sets(true, pred, dimensions):
    if len(true) != len(pred):
        raise LengthMismatch("{} gold label sets but {} predicted".format(len(true), len(pred)))
    if not len(true):
        raise LengthMismatch("Nothing to score: no label sets")
    for position, (gold, guess) in enumerate(zip(true, pred)):
        for dimension in dimensions:
            if gold.get(dimension) is None or guess.get(dimension) is None:
                raise IncompleteLabels("Label set {} lacks {}".format(position, dimension.upper()))


def dimension_labels(label_sets, dimension):
    return [labels.get(dimension) for labels in label_sets]


def emr(true, pred):
    """
    Exact match ratio: share of tweets whose HS, TR and AG all match.

    Args:
        true(list): gold LabelSets
        pred(list): predicted LabelSets

    Returns:
        float: the ratio
    """
    _check_label_sets(true, pred, LABEL_DIMENSIONS)
    matches = sum(1 for gold, guess in zip(true, pred) if tuple(gold) == tuple(guess))
    return float(matches) / len(true)


def dimension_scores(true, pred, positive_only=False):
    """
    Returns:
        OrderedDict: hs, tr, ag to their task score
    """
    _check_label_sets(true, pred, LABEL_DIMENSIONS)
    scores = OrderedDict()
    for dimension in (HS, TR, AG):
        report = binary_metrics(dimension_labels(true, dimension), dimension_labels(pred, dimension))
        scores[dimension] = task_score(report, positive_only)
    return scores


def subtask_b_score(true, pred, positive_only=False):
    """
    Mean of the HS, TR and AG scores, each dimension scored independently.

    Args:
        true(list): gold LabelSets
        pred(list): predicted LabelSets
        positive_only(bool): score dimensions by positive class F1 instead of macro-F1

    Returns:
        float: the subtask B score
    """
    scores = dimension_scores(true, pred, positive_only)
    return sum(scores.values()) / float(len(scores))


def report_rows(report, name):
    """
    Flattens a report into CSV rows, one per class plus a summary row.

    Args:
        report(MetricReport): the report
        name(str): label dimension or split name for the first column

    Returns:
        list: dict rows
    """
    rows = []
    for position, label in enumerate(BINARY_LABELS):
        rows.append(OrderedDict([
            ('name', name),
            ('class', str(label)),
            ('precision', report.precision[position]),
            ('recall', report.recall[position]),
            ('f1', report.f1[position]),
            ('support', report.support[position])
        ]))
    rows.append(OrderedDict([
        ('name', name),
        ('class', 'macro'),
        ('precision', float(np.mean(report.precision))),
        ('recall', float(np.mean(report.recall))),
        ('f1', report.macro_f1),
        ('support', sum(report.support))
    ]))
    rows.append(OrderedDict([
        ('name', name),
        ('class', 'accuracy'),
        ('precision', report.accuracy),
        ('recall', report.accuracy),
        ('f1', report.accuracy),
        ('support', sum(report.support))
    ]))
    return rows
