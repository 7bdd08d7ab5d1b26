"""
The subcommands. Each takes the resolved settings, the run seed, the open RunDirectory and the parsed
arguments, and writes its outputs into the run directory.
"""

import logging
import re
import sys
from collections import OrderedDict

from hwk.analysis.drift import DRIFT_COLUMNS, discrepancy_report
from hwk.analysis.hashtags import HASHTAG_COLUMNS, hashtag_stats, top_k_share
from hwk.cli import reports
from hwk.cli.config import format_config
from hwk.corpus.loader import concat_datasets, load_dataset, read_predictions, write_predictions
from hwk.data_models import HS
from hwk.explain.lime import explanation_report, lime_explain
from hwk.linear.model_selection import GridPoint, grid_search_cv
from hwk.neural.training import evaluate_repeats, write_history
from hwk.pipelines.common import clean_config
from hwk.pipelines.factory import get_pipeline, load_pipeline
from hwk.pipelines.linear_pipeline import MODEL_LOSSES, LinearPipeline
from hwk.textprep.pipeline import preprocess_dataset
from hwk.utils.errors import ConfigError
from hwk.utils.figure_utils import bar_chart_svg, summary_text

SPLITS = ('train', 'dev', 'test')
TOKEN_COLUMNS = ('id', 'tokens', 'hashtags', 'mentions')
REPEAT_COLUMNS = ('seed', 'score')
GRID_COLUMNS = ('loss', 'penalty', 'C', 'mean', 'std', 'fold_scores')
EXPLANATION_COLUMNS = ('id', 'rank', 'token', 'weight')
PRESENCE_COLUMNS = ('statistic', 'value')
DEFAULT_EXPLAIN_LIMIT = 10


def load_split(settings, split):
    path = settings['data.{}'.format(split)]
    if not path:
        return None
    return load_dataset(path, settings['run.lang'], split, settings['data.coerce_labels'])


def require_split(settings, split, command):
    ds = load_split(settings, split)
    if ds is None:
        raise ConfigError("{} needs a {} file (--{} or data.{})".format(command, split, split, split))
    return ds


def write_summary(run, title, sections):
    run.write_text('summary.txt', summary_text(title, sections))


def file_safe(tweet_id):
    return re.sub(r'[^\w.-]', '_', tweet_id)


def preprocess_command(settings, seed, run, args):
    """
    Writes tokens.tsv for the training file, tokens_dev.tsv and tokens_test.tsv for the others given.
    """
    cfg = clean_config(settings)
    written = []
    for split in SPLITS:
        ds = load_split(settings, split)
        if ds is None:
            continue
        rows = [OrderedDict([
            ('id', seq.source_id),
            ('tokens', u' '.join(seq.tokens)),
            ('hashtags', u' '.join(seq.kept_hashtags)),
            ('mentions', u' '.join(seq.kept_mentions))
        ]) for seq in preprocess_dataset(ds, cfg)]
        name = 'tokens.tsv' if split == 'train' else 'tokens_{}.tsv'.format(split)
        run.write_csv(name, rows, TOKEN_COLUMNS, sep='\t')
        written.append((name, len(rows)))
    if not written:
        raise ConfigError("preprocess needs at least one of --train, --dev, --test")
    write_summary(run, 'Preprocessing', [{'heading': 'Token files', 'items': written}])


def train_command(settings, seed, run, args):
    """
    Fits the configured model, saves it under model/ and evaluates it on the test split (else the dev split,
    else the training split). With run.repeats > 1 the model is refit with consecutive seeds and the
    spread of the score goes to repeats.csv.
    """
    task, model_name = settings['run.task'], settings['run.model']
    train, dev, test = [load_split(settings, split) for split in SPLITS]
    if train is None:
        raise ConfigError("train needs a training file (--train or data.train)")

    val = dev
    if settings['data.fold_dev'] and dev is not None:
        train, val = concat_datasets(train, dev, 'train+dev'), None
        logging.info("Folded the dev split into training")

    evaluated = next(ds for ds in (test, val, train) if ds is not None)
    if evaluated is train:
        logging.warning("No held-out split given; scoring the training split")

    fitted = {}

    def repeat_score(run_seed):
        fitted[run_seed] = get_pipeline(model_name, settings).fit(train, val, run_seed)
        predictions = fitted[run_seed].predict_labels(evaluated)
        return reports.headline(reports.score_predictions(evaluated, predictions, task, args.positive_only))

    sections = []
    repeats = settings['run.repeats']
    if repeats > 1:
        summary = evaluate_repeats(repeat_score, [seed + i for i in range(repeats)])
        rows = [OrderedDict([('seed', str(s)), ('score', score)]) for s, score in zip(summary.seeds, summary.scores)]
        rows.append(OrderedDict([('seed', 'mean'), ('score', summary.mean)]))
        rows.append(OrderedDict([('seed', 'std'), ('score', summary.std)]))
        run.write_csv('repeats.csv', rows, REPEAT_COLUMNS)
        sections.append({'heading': 'Repeats', 'items': [
            ('seeds', u', '.join(str(s) for s in summary.seeds)),
            ('score', '{:.4f} +- {:.4f}'.format(summary.mean, summary.std))
        ]})
        pipeline = fitted[seed]
    else:
        pipeline = get_pipeline(model_name, settings).fit(train, val, seed)

    pipeline.save(run.model_dir)
    logging.info("Saved the {} pipeline to {}".format(model_name, run.model_dir))

    predictions = pipeline.predict_labels(evaluated)
    write_predictions(evaluated.ids, predictions, run.file('predictions.tsv'))
    evaluation = reports.write_evaluation(run, evaluated, predictions, task, args.positive_only)
    sections.insert(0, reports.evaluation_section(evaluation))

    if pipeline.kind == LinearPipeline.kind:
        reports.write_importance(run, pipeline, settings['explain.top_k'])
    else:
        for dimension, history in pipeline.histories.items():
            write_history(history, run.file('history_{}.csv'.format(dimension)))
        sections.append({'heading': 'Selected epochs', 'items': list(pipeline.best_epochs.items())})

    write_summary(run, 'Training {} on task {} ({}), seed {}'.format(model_name, task, train.lang, seed), sections)


def evaluate_command(settings, seed, run, args):
    """
    Scores a prediction file (--pred) or a trained run (--model-dir) against gold labels and prints the task
    score, plus the exact match ratio for task b.
    """
    task = settings['run.task']
    if args.gold:
        gold = load_dataset(args.gold, settings['run.lang'], 'gold', settings['data.coerce_labels'])
    else:
        gold = require_split(settings, 'test', 'evaluate')

    if args.pred:
        predictions = reports.align_predictions(gold, read_predictions(args.pred), args.pred)
    elif args.model_dir:
        pipeline = load_pipeline(args.model_dir)
        predictions = pipeline.predict_labels(gold)
        write_predictions(gold.ids, predictions, run.file('predictions.tsv'))
    else:
        raise ConfigError("evaluate needs --pred or --model-dir")

    evaluation = reports.write_evaluation(run, gold, predictions, task, args.positive_only)
    for name, value in evaluation['scores'].items():
        if name in ('subtask_a', 'subtask_b', 'emr'):
            sys.stdout.write('{}\t{:.6f}\n'.format(name, value))
    write_summary(run, 'Evaluation on task {}'.format(task), [reports.evaluation_section(evaluation)])


def predict_command(settings, seed, run, args):
    if not args.model_dir:
        raise ConfigError("predict needs --model-dir")
    pipeline = load_pipeline(args.model_dir)
    ds = require_split(settings, 'test', 'predict')
    write_predictions(ds.ids, pipeline.predict_labels(ds), run.file('predictions.tsv'))


def explain_command(settings, seed, run, args):
    """
    LIME explanations of the HS prediction for tweets of the test split (the first --limit, or --ids), one
    JSON file and bar chart each. Linear pipelines also get their global importance reports.
    """
    if not args.model_dir:
        raise ConfigError("explain needs --model-dir")
    pipeline = load_pipeline(args.model_dir)
    ds = require_split(settings, 'test', 'explain')

    if args.ids:
        wanted = set(args.ids)
        tweets = [tweet for tweet in ds if tweet.id in wanted]
    else:
        tweets = list(ds)[:args.limit]

    rows, items = [], []
    for tweet in tweets:
        explanation = lime_explain(
            pipeline.predict_texts, tweet,
            n_samples=settings['explain.samples'],
            top_k=settings['explain.top_k'],
            kernel_width=settings['explain.kernel_width'],
            seed=seed
        )
        name = 'explanation_{}'.format(file_safe(tweet.id))
        run.write_text(name + '.json', explanation_report(explanation))
        if explanation.weights:
            run.write_figure(name + '.svg', bar_chart_svg(
                [token for token, _ in explanation.weights],
                [weight for _, weight in explanation.weights],
                'Tweet {}: class {} at {:.3f}'.format(tweet.id, explanation.predicted_class, explanation.probability)
            ))
        for rank, (token, weight) in enumerate(explanation.weights, 1):
            rows.append(OrderedDict([('id', tweet.id), ('rank', rank), ('token', token), ('weight', weight)]))
        suffix = ' (constant)' if explanation.degenerate else ''
        items.append((tweet.id, 'R2 {:.3f}{}'.format(explanation.score, suffix)))

    run.write_csv('explanations.csv', rows, EXPLANATION_COLUMNS)
    if pipeline.kind == LinearPipeline.kind:
        reports.write_importance(run, pipeline, settings['explain.top_k'])
    write_summary(run, 'Explanations', [{'heading': 'Local surrogates', 'items': items}])


def audit_command(settings, seed, run, args):
    """
    Hashtag statistics of both splits and the train/test label-rate discrepancy of shared patterns.
    """
    train = require_split(settings, 'train', 'audit')
    test = require_split(settings, 'test', 'audit')
    top_k = settings['audit.top_k']

    report = discrepancy_report(train, test, settings['audit.min_support'], HS)
    run.write_csv('drift.csv', report.table, DRIFT_COLUMNS)

    presence = OrderedDict(report.presence)
    for name, ds in (('train', train), ('test', test)):
        run.write_csv('hashtags_{}.csv'.format(name), hashtag_stats(ds, top_k), HASHTAG_COLUMNS)
        presence['{}_top_{}_share'.format(name, top_k)] = top_k_share(ds, top_k)
    run.write_csv('presence.csv', [OrderedDict([('statistic', k), ('value', v)]) for k, v in presence.items()],
                  PRESENCE_COLUMNS)

    charted = report.table.head(top_k)
    if len(charted):
        run.write_figure('drift.svg', bar_chart_svg(
            list(charted['pattern']), list(charted['train_rate'] - charted['test_rate']),
            'HS rate, train minus test'
        ))

    items = [(k, 'n/a' if v is None else '{:.4f}'.format(v)) for k, v in presence.items()]
    items.append(('patterns', len(report.table)))
    write_summary(run, 'Dataset audit', [{'heading': 'Hashtags and drift', 'items': items}])


def gridsearch_command(settings, seed, run, args):
    """
    Cross-validates the linear grid gridsearch.C x gridsearch.penalties x gridsearch.losses on HS of the
    training split. The winner is written as best.cfg, ready to merge into a configuration.
    """
    train = require_split(settings, 'train', 'gridsearch')
    model_name = settings['run.model'] if settings['run.model'] in MODEL_LOSSES else 'logreg'
    pipeline = LinearPipeline(model_name, settings)

    grid = [GridPoint(loss, penalty, float(C))
            for C in settings['gridsearch.C']
            for penalty in settings['gridsearch.penalties']
            for loss in settings['gridsearch.losses']]
    # features are fit per fold, on its training rows only
    best, results = grid_search_cv(train, train.labels(HS), grid, settings['gridsearch.folds'], seed,
                                   settings['gridsearch.n_jobs'], featurize=pipeline.fold_features,
                                   **pipeline.train_options())

    run.write_csv('gridsearch.csv', [OrderedDict([
        ('loss', result.params.loss),
        ('penalty', result.params.penalty),
        ('C', result.params.C),
        ('mean', result.mean),
        ('std', result.std),
        ('fold_scores', u';'.join('{:.6f}'.format(score) for score in result.fold_scores))
    ]) for result in results], GRID_COLUMNS)

    best_model = dict((loss, name) for name, loss in MODEL_LOSSES.items())[best.loss]
    run.write_text('best.cfg', format_config(OrderedDict([
        ('linear.C', best.C),
        ('linear.penalty', best.penalty),
        ('run.model', best_model)
    ])))
    write_summary(run, 'Grid search', [{'heading': 'Best point', 'items': [
        ('model', best_model), ('penalty', best.penalty), ('C', best.C)
    ]}])


COMMANDS = OrderedDict([
    ('preprocess', preprocess_command),
    ('train', train_command),
    ('evaluate', evaluate_command),
    ('predict', predict_command),
    ('explain', explain_command),
    ('audit', audit_command),
    ('gridsearch', gridsearch_command)
])
