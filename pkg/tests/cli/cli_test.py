"""
End-to-end tests of the command line front-end on the tweet fixtures.
"""

import io
import json
import os
import shutil
import tempfile
import unittest

from mock import Mock, patch

from hwk.cli.cli import EXIT_ERROR, EXIT_OK, EXIT_UNEXPECTED, main
from hwk.corpus.loader import load_dataset, read_predictions, write_predictions
from hwk.data_models import LabelSet

TESTS_DIR = os.path.dirname(os.path.abspath(__file__))
RESOURCES = os.path.join(TESTS_DIR, '..', 'resources')
SMOKE_CONFIG = os.path.join(TESTS_DIR, '..', '..', 'config', 'SMOKE.cfg')


def resource(split):
    return os.path.join(RESOURCES, 'tweets_{}.tsv'.format(split))


def read(path):
    with io.open(path, 'rb') as f:
        return f.read()


def error_line(stream):
    lines = [line for line in stream.getvalue().splitlines() if line.startswith('{')]
    return json.loads(lines[-1])


class CliTestCase(unittest.TestCase):
    """
    Tests for the subcommands and exit codes.
    """

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def run_path(self, name):
        return os.path.join(self.directory, name)

    def train(self, name, *extra):
        argv = ['train', '--config', SMOKE_CONFIG, '--train', resource('train'), '--dev', resource('dev'),
                '--test', resource('test'), '--run-dir', self.run_path(name), '--log-level', 'ERROR']
        return main(argv + list(extra))

    def test_train_writes_run_directory(self):
        """
        Verifies the model, predictions, reports and configuration snapshot of a linear training run.
        """
        self.assertEqual(self.train('run', '--model', 'logreg', '--seed', '7'), EXIT_OK)

        run = self.run_path('run')
        for name in ('config.cfg', 'run.log', 'metrics.csv', 'scores.csv', 'confusion.csv', 'confusion_hs.svg',
                     'predictions.tsv', 'misclassified.tsv', 'importance_hs.csv', 'summary.txt',
                     os.path.join('model', 'pipeline.yaml'), os.path.join('model', 'model_hs.txt')):
            self.assertTrue(os.path.exists(os.path.join(run, name)), name)
        self.assertEqual(list(read_predictions(os.path.join(run, 'predictions.tsv'))),
                         load_dataset(resource('test'), 'en').ids)

    def test_same_seed_same_metrics(self):
        """
        Verifies that two runs with the same seed write identical metric files.
        """
        self.assertEqual(self.train('first', '--seed', '4'), EXIT_OK)
        self.assertEqual(self.train('second', '--seed', '4'), EXIT_OK)

        for name in ('metrics.csv', 'scores.csv', 'predictions.tsv'):
            self.assertEqual(read(os.path.join(self.run_path('first'), name)),
                             read(os.path.join(self.run_path('second'), name)))

    def test_config_snapshot_replays_run(self):
        """
        Verifies that rerunning from the snapshot alone reproduces the metrics.
        """
        self.assertEqual(self.train('original', '--seed', '2', '--task', 'b'), EXIT_OK)
        snapshot = os.path.join(self.run_path('original'), 'config.cfg')
        self.assertEqual(main(['train', '--config', snapshot, '--run-dir', self.run_path('replay'),
                               '--log-level', 'ERROR']), EXIT_OK)

        self.assertEqual(read(os.path.join(self.run_path('original'), 'metrics.csv')),
                         read(os.path.join(self.run_path('replay'), 'metrics.csv')))

    def test_neural_training_with_repeats(self):
        """
        Verifies that a neural run writes its epoch history and the repeat summary.
        """
        self.assertEqual(self.train('gru', '--model', 'bigru', '--repeats', '2', '--seed', '1'), EXIT_OK)

        run = self.run_path('gru')
        self.assertTrue(os.path.exists(os.path.join(run, 'history_hs.csv')))
        self.assertTrue(os.path.exists(os.path.join(run, 'model', 'params_hs.txt')))
        with io.open(os.path.join(run, 'repeats.csv'), 'r', encoding='utf-8') as f:
            self.assertEqual([line.split(',')[0] for line in f.read().splitlines()], ['seed', '1', '2', 'mean', 'std'])

    @patch('sys.stdout', new_callable=io.StringIO)
    def test_evaluate_prediction_file(self, stdout):
        """
        Verifies that evaluating perfect task b predictions prints a subtask B score and exact match ratio of 1.
        """
        gold = load_dataset(resource('test'), 'en')
        pred = self.run_path('pred.tsv')
        write_predictions(gold.ids, [tweet.labels for tweet in gold], pred)

        status = main(['evaluate', '--pred', pred, '--gold', resource('test'), '--task', 'b',
                       '--run-dir', self.run_path('eval'), '--log-level', 'ERROR'])

        self.assertEqual(status, EXIT_OK)
        self.assertIn('subtask_b\t1.000000', stdout.getvalue())
        self.assertIn('emr\t1.000000', stdout.getvalue())

    @patch('sys.stderr', new_callable=io.StringIO)
    def test_evaluate_missing_prediction(self, stderr):
        """
        Verifies exit code 2 and a JSON error line naming the prediction file when a tweet has no prediction.
        """
        gold = load_dataset(resource('test'), 'en')
        pred = self.run_path('pred.tsv')
        write_predictions(gold.ids[1:], [LabelSet(0, 0, 0)] * (len(gold) - 1), pred)

        status = main(['evaluate', '--pred', pred, '--gold', resource('test'), '--run-dir', self.run_path('eval'),
                       '--log-level', 'ERROR'])

        self.assertEqual(status, EXIT_ERROR)
        error = error_line(stderr)
        self.assertEqual(error['error'], 'LengthMismatch')
        self.assertEqual(error['path'], pred)

    def test_predict_and_explain_trained_run(self):
        """
        Verifies that a trained model directory serves the predict and explain subcommands.
        """
        self.assertEqual(self.train('run', '--seed', '3'), EXIT_OK)
        model_dir = os.path.join(self.run_path('run'), 'model')

        self.assertEqual(main(['predict', '--model-dir', model_dir, '--test', resource('test'),
                               '--run-dir', self.run_path('predict'), '--log-level', 'ERROR']), EXIT_OK)
        self.assertEqual(main(['explain', '--model-dir', model_dir, '--test', resource('test'), '--ids', 'te0',
                               '--config', SMOKE_CONFIG, '--run-dir', self.run_path('explain'),
                               '--log-level', 'ERROR']), EXIT_OK)

        self.assertTrue(os.path.exists(os.path.join(self.run_path('predict'), 'predictions.tsv')))
        with io.open(os.path.join(self.run_path('explain'), 'explanation_te0.json'), 'r', encoding='utf-8') as f:
            explanation = json.loads(f.read())
        self.assertEqual(explanation['tweet_id'], 'te0')
        self.assertLessEqual(len(explanation['weights']), 5)

    def test_audit(self):
        """
        Verifies the drift, hashtag and presence reports of an audit.
        """
        status = main(['audit', '--config', SMOKE_CONFIG, '--train', resource('train'), '--test', resource('test'),
                       '--min-support', '2', '--run-dir', self.run_path('audit'), '--log-level', 'ERROR'])

        self.assertEqual(status, EXIT_OK)
        for name in ('drift.csv', 'hashtags_train.csv', 'hashtags_test.csv', 'presence.csv'):
            self.assertTrue(os.path.exists(os.path.join(self.run_path('audit'), name)), name)

    def test_gridsearch(self):
        """
        Verifies one result row per grid point and the best point written as configuration.
        """
        status = main(['gridsearch', '--config', SMOKE_CONFIG, '--train', resource('train'), '--seed', '0',
                       '--run-dir', self.run_path('grid'), '--log-level', 'ERROR'])

        self.assertEqual(status, EXIT_OK)
        with io.open(os.path.join(self.run_path('grid'), 'gridsearch.csv'), 'r', encoding='utf-8') as f:
            self.assertEqual(len(f.read().splitlines()), 3)
        self.assertTrue(os.path.exists(os.path.join(self.run_path('grid'), 'best.cfg')))

    @patch('sys.stderr', new_callable=io.StringIO)
    def test_config_error_exit_code(self, stderr):
        """
        Verifies exit code 2 with file and line of a bad configuration value.
        """
        config = self.run_path('bad.cfg')
        with io.open(config, 'w', encoding='utf-8') as f:
            f.write(u'run.lang = en\nlinear.C = lots\n')

        status = main(['audit', '--config', config, '--log-level', 'ERROR'])

        self.assertEqual(status, EXIT_ERROR)
        error = error_line(stderr)
        self.assertEqual((error['error'], error['path'], error['line']), ('ConfigError', config, 2))

    @patch.dict('hwk.cli.cli.COMMANDS', {'audit': Mock(side_effect=RuntimeError('boom'))})
    def test_unexpected_error_exit_code(self):
        """
        Verifies exit code 1 for failures that are not toolkit errors.
        """
        status = main(['audit', '--config', SMOKE_CONFIG, '--run-dir', self.run_path('crash'), '--log-level', 'ERROR'])
        self.assertEqual(status, EXIT_UNEXPECTED)
