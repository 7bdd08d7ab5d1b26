"""
Report files shared by the subcommands: metric tables, confusion heatmaps, misclassifications and
importance charts.
"""

from collections import OrderedDict

from hwk.analysis.error_analysis import MISCLASSIFIED_COLUMNS, error_counts, misclassified
from hwk.evaluation import metrics
from hwk.pipelines.common import TASK_B, task_dimensions
from hwk.utils.errors import LengthMismatch
from hwk.utils.figure_utils import bar_chart_svg, confusion_svg

METRIC_COLUMNS = ('name', 'class', 'precision', 'recall', 'f1', 'support')
SCORE_COLUMNS = ('metric', 'value')
CONFUSION_COLUMNS = ('dimension', 'tp', 'fp', 'fn', 'tn', 'false_positive_rate')
NGRAM_COLUMNS = ('ngram', 'weight')
SLOT_COLUMNS = ('slot', 'weight')


def align_predictions(gold, predicted_by_id, path=None):
    """
    Orders predictions read from a file by the gold dataset's ids.

    Args:
        gold(Dataset): gold tweets
        predicted_by_id(OrderedDict): tweet id to LabelSet
        path(str): prediction file, for error reports

    Returns:
        list: predicted LabelSets aligned with gold
    """
    for tweet_id in gold.ids:
        if tweet_id not in predicted_by_id:
            raise LengthMismatch("No prediction for tweet {}".format(tweet_id), path=path)
    if len(predicted_by_id) != len(gold):
        raise LengthMismatch("{} predictions for {} gold tweets".format(len(predicted_by_id), len(gold)), path=path)
    return [predicted_by_id[tweet_id] for tweet_id in gold.ids]


def score_predictions(gold, predictions, task, positive_only=False):
    """
    Scores predictions of a task: per-class reports and confusion counts per dimension, plus the task score
    (HS macro-F1 for task a; mean macro-F1 of HS, TR and AG with the exact match ratio for task b).

    Args:
        gold(Dataset): labeled tweets
        predictions(list): predicted LabelSets aligned with gold
        task(str): a or b
        positive_only(bool): score dimensions by positive class F1

    Returns:
        OrderedDict: 'scores', 'rows', 'confusion' and 'matrices'
    """
    if len(predictions) != len(gold):
        raise LengthMismatch("{} predictions for {} gold tweets".format(len(predictions), len(gold)))

    scores, rows, confusion_rows, matrices = OrderedDict(), [], [], OrderedDict()
    for dimension in task_dimensions(task):
        y_true = gold.labels(dimension)
        y_pred = metrics.dimension_labels(predictions, dimension)
        report = metrics.binary_metrics(y_true, y_pred)
        cm = metrics.confusion(y_true, y_pred)

        rows.extend(metrics.report_rows(report, dimension.upper()))
        confusion_rows.append(OrderedDict([
            ('dimension', dimension.upper()),
            ('tp', cm.tp),
            ('fp', cm.fp),
            ('fn', cm.fn),
            ('tn', cm.tn),
            ('false_positive_rate', metrics.false_positive_rate(cm))
        ]))
        matrices[dimension] = cm.as_array()
        scores['{}_score'.format(dimension)] = metrics.task_score(report, positive_only)

    if task == TASK_B:
        true_sets = [tweet.labels for tweet in gold]
        scores['subtask_b'] = metrics.subtask_b_score(true_sets, predictions, positive_only)
        scores['emr'] = metrics.emr(true_sets, predictions)
    else:
        scores['subtask_a'] = scores['hs_score']

    return OrderedDict([('scores', scores), ('rows', rows), ('confusion', confusion_rows), ('matrices', matrices)])


def headline(evaluation):
    scores = evaluation['scores']
    return scores['subtask_b'] if 'subtask_b' in scores else scores['subtask_a']


def write_evaluation(run, gold, predictions, task, positive_only=False):
    """
    Writes metrics.csv, scores.csv, confusion.csv, one confusion heatmap per dimension and
    misclassified.tsv.

    Returns:
        OrderedDict: the evaluation, see score_predictions
    """
    evaluation = score_predictions(gold, predictions, task, positive_only)
    run.write_csv('metrics.csv', evaluation['rows'], METRIC_COLUMNS)
    run.write_csv('scores.csv', [OrderedDict([('metric', k), ('value', v)]) for k, v in evaluation['scores'].items()],
                  SCORE_COLUMNS)
    run.write_csv('confusion.csv', evaluation['confusion'], CONFUSION_COLUMNS)
    for dimension, matrix in evaluation['matrices'].items():
        title = '{} on {}'.format(dimension.upper(), gold.split_name)
        run.write_figure('confusion_{}.svg'.format(dimension), confusion_svg(matrix, metrics.BINARY_LABELS, title))

    errors = misclassified(gold, predictions, task_dimensions(task))
    run.write_csv('misclassified.tsv', errors, MISCLASSIFIED_COLUMNS, sep='\t')
    evaluation['errors'] = error_counts(errors)
    return evaluation


def write_importance(run, pipeline, top_k):
    """
    Writes the n-gram and dense-slot weights of every dimension of a linear pipeline, with bar charts of
    the top_k n-grams toward each class.
    """
    for dimension in pipeline.models:
        ngrams, slots = pipeline.importance(dimension)
        run.write_csv('importance_{}.csv'.format(dimension),
                      [OrderedDict([('ngram', t), ('weight', w)]) for t, w in ngrams], NGRAM_COLUMNS)
        run.write_csv('importance_slots_{}.csv'.format(dimension),
                      [OrderedDict([('slot', s), ('weight', w)]) for s, w in slots], SLOT_COLUMNS)

        charted = ngrams[:top_k] + [pair for pair in ngrams[-top_k:] if pair not in ngrams[:top_k] and pair[1] < 0]
        if charted:
            run.write_figure('importance_{}.svg'.format(dimension), bar_chart_svg(
                [t for t, _ in charted], [w for _, w in charted], '{} n-gram weights'.format(dimension.upper())
            ))
        if slots:
            run.write_figure('importance_slots_{}.svg'.format(dimension), bar_chart_svg(
                [s for s, _ in slots], [w for _, w in slots], '{} dense slot weights'.format(dimension.upper())
            ))


def evaluation_section(evaluation):
    items = [(name, '{:.4f}'.format(value)) for name, value in evaluation['scores'].items()]
    for (dimension, kind), count in evaluation.get('errors', {}).items():
        items.append(('{} {}'.format(dimension, kind), count))
    return {'heading': 'Evaluation', 'items': items}
