"""
Tests for run directories.
"""

import io
import logging
import os
import shutil
import tempfile
import unittest

from hwk.cli.config import DEFAULTS, parse_config
from hwk.cli.run_dir import RunDirectory, run_dir_name, unused_path


class RunDirectoryTestCase(unittest.TestCase):
    """
    Tests for RunDirectory and its naming helpers.
    """

    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.settings = dict(DEFAULTS, **{'run.output_root': self.directory, 'run.seed': 7})

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_names(self):
        """
        Verifies that training and grid search runs are named after model, task and seed.
        """
        self.assertEqual(run_dir_name('train', self.settings, 7), 'train-logreg-a-seed7')
        self.assertEqual(run_dir_name('audit', self.settings, 0), 'audit-seed0')

    def test_unused_path(self):
        """
        Verifies that existing directories get a numbered sibling.
        """
        base = os.path.join(self.directory, 'run')
        self.assertEqual(unused_path(base), base)
        os.makedirs(base)
        os.makedirs(base + '-2')
        self.assertEqual(unused_path(base), base + '-3')

    def test_create_writes_config_and_log(self):
        """
        Verifies the configuration snapshot, the model directory and that the log handler is removed on close.
        """
        run = RunDirectory.create('train', self.settings, 7)
        handlers = len(logging.getLogger().handlers)
        model_dir = run.model_dir
        run.close()

        self.assertEqual(run.path, os.path.join(self.directory, 'train-logreg-a-seed7'))
        self.assertTrue(os.path.isdir(model_dir))
        self.assertTrue(os.path.exists(run.file('run.log')))
        with io.open(run.file('config.cfg'), 'r', encoding='utf-8') as f:
            self.assertEqual(parse_config(f.read())['run.seed'], 7)
        self.assertEqual(len(logging.getLogger().handlers), handlers - 1)

        second = RunDirectory.create('train', self.settings, 7)
        second.close()
        self.assertEqual(second.path, run.path + '-2')
