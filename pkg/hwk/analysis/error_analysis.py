"""
Listing of misclassified tweets for manual error analysis.
"""

from collections import OrderedDict

from hwk.utils.errors import LengthMismatch
from hwk.utils.report_utils import to_frame

MISCLASSIFIED_COLUMNS = ('id', 'dimension', 'gold', 'predicted', 'kind', 'text')
FALSE_POSITIVE = 'FP'
FALSE_NEGATIVE = 'FN'


def misclassified(ds, predictions, dimensions):
    """
    Tweets whose predicted label differs from the gold one.

    Args:
        ds(Dataset): labeled dataset
        predictions(list): predicted LabelSets aligned with ds
        dimensions(iterable): label dimensions to compare

    Returns:
        pandas.DataFrame: one row per wrong (tweet, dimension) pair, in dataset order
    """
    if len(predictions) != len(ds):
        raise LengthMismatch("{} predictions for {} tweets".format(len(predictions), len(ds)))

    rows = []
    for dimension in dimensions:
        gold_labels = ds.labels(dimension)
        for tweet, gold, predicted in zip(ds, gold_labels, predictions):
            guess = predicted.get(dimension)
            if guess is None or guess == gold:
                continue
            rows.append(OrderedDict([
                ('id', tweet.id),
                ('dimension', dimension.upper()),
                ('gold', gold),
                ('predicted', guess),
                ('kind', FALSE_POSITIVE if guess == 1 else FALSE_NEGATIVE),
                ('text', u' '.join(tweet.text.split()))
            ]))
    return to_frame(rows, MISCLASSIFIED_COLUMNS)


def error_counts(table):
    """
    Returns:
        OrderedDict: (dimension, kind) to number of rows
    """
    counts = OrderedDict()
    for dimension, kind in zip(table['dimension'], table['kind']):
        counts[(dimension, kind)] = counts.get((dimension, kind), 0) + 1
    return counts
