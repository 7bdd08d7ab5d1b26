"""
Tests for experiment configuration files.
"""

import io
import os
import shutil
import tempfile
import unittest

from hwk.cli.config import DEFAULTS, format_config, load_config, parse_config, resolve_settings
from hwk.utils.errors import ConfigError

CONFIG_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', '..', 'config')


class ConfigTestCase(unittest.TestCase):
    """
    Tests for parse_config, resolve_settings and format_config.
    """

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def write(self, text):
        path = os.path.join(self.directory, 'run.cfg')
        with io.open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        return path

    def test_typed_values(self):
        """
        Verifies that values are typed by their setting, and comments and blank lines are skipped.
        """
        settings = parse_config(u'# comment\n\nlinear.C = 1\nrun.lang = es\nfeatures.sentiment = false\n'
                                u'gridsearch.penalties = [l1]\nneural.lr = \nrun.model=bigru\n')

        self.assertEqual(settings['linear.C'], 1.0)
        self.assertIsInstance(settings['linear.C'], float)
        self.assertEqual(settings['run.lang'], 'es')
        self.assertIs(settings['features.sentiment'], False)
        self.assertEqual(settings['gridsearch.penalties'], ['l1'])
        self.assertIsNone(settings['neural.lr'])
        self.assertEqual(settings['run.model'], 'bigru')

    def test_errors_carry_file_and_line(self):
        """
        Verifies that unknown keys, wrong types, empty required values and lines without '=' report their line.
        """
        for text, line in ((u'run.lang = en\nrun.colour = red\n', 2), (u'linear.epochs = many\n', 1),
                           (u'\nrun.lang =\n', 2), (u'run.lang en\n', 1), (u'linear.fit_intercept = 3\n', 1)):
            path = self.write(text)
            with self.assertRaises(ConfigError) as context:
                load_config(path)
            self.assertEqual((context.exception.path, context.exception.line), (path, line))

    def test_missing_file(self):
        """
        Verifies that an unreadable configuration raises ConfigError.
        """
        with self.assertRaises(ConfigError):
            load_config(os.path.join(self.directory, 'absent.cfg'))

    def test_resolution_order(self):
        """
        Verifies defaults, then the file, then --set overrides.
        """
        settings = resolve_settings(self.write(u'linear.C = 1\nlinear.epochs = 3\n'), ['linear.C=5'])

        self.assertEqual(settings['linear.C'], 5.0)
        self.assertEqual(settings['linear.epochs'], 3)
        self.assertEqual(settings['run.lang'], DEFAULTS['run.lang'])
        with self.assertRaises(ConfigError):
            resolve_settings(None, ['linear.C'])

    def test_snapshot_reproduces_settings(self):
        """
        Verifies that the written snapshot reads back to the same settings.
        """
        settings = resolve_settings(None, ['data.train=data/train es.tsv', 'run.seed=7', 'linear.lr=1e-05'])
        self.assertEqual(dict(parse_config(format_config(settings))), dict(settings))

    def test_shipped_profiles(self):
        """
        Verifies that the shipped configuration files are valid.
        """
        for name in ('SMOKE.cfg', 'DESK.cfg', 'FULL.cfg'):
            settings = resolve_settings(os.path.join(CONFIG_DIR, name))
            self.assertIn(settings['neural.profile'], ('tiny', 'desk', 'full'))
