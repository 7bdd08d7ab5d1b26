"""
Run directories: one self-contained folder per CLI invocation holding the configuration snapshot, the log,
model artifacts and every report.
"""

import logging
import os

from hwk.cli.config import format_config
from hwk.utils.figure_utils import save_figure
from hwk.utils.report_utils import write_csv, write_text

CONFIG_FILE = 'config.cfg'
LOG_FILE = 'run.log'
MODEL_DIR = 'model'
LOG_FORMAT = '%(asctime)s %(levelname)s %(message)s'


def run_dir_name(command, settings, seed):
    if command in ('train', 'gridsearch'):
        return '{}-{}-{}-seed{}'.format(command, settings['run.model'], settings['run.task'], seed)
    return '{}-seed{}'.format(command, seed)


def unused_path(path):
    """
    Returns path, or path-2, path-3, ... when it already exists.
    """
    candidate, counter = path, 1
    while os.path.exists(candidate):
        counter += 1
        candidate = '{}-{}'.format(path, counter)
    return candidate


class RunDirectory(object):
    """
    Output folder of one run. Attaches a run.log file handler to the root logger until closed.
    """
    def __init__(self, path, level=logging.INFO):
        self.path = path
        os.makedirs(path)
        self.handler = logging.FileHandler(self.file(LOG_FILE), encoding='utf-8')
        self.handler.setLevel(level)
        self.handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logging.getLogger().addHandler(self.handler)
        logging.info("Writing run to {}".format(path))

    @classmethod
    def create(cls, command, settings, seed, path=None, level=logging.INFO):
        """
        Makes the run directory and writes the resolved configuration into it.

        Args:
            command(str): subcommand name
            settings(dict): resolved configuration, run.seed included
            seed(int): the run seed
            path(str): explicit directory, must not exist yet; derived from run.output_root when None
            level(int): log level of run.log

        Returns:
            RunDirectory: the open run directory
        """
        if path is None:
            path = unused_path(os.path.join(settings['run.output_root'], run_dir_name(command, settings, seed)))
        run = cls(path, level)
        write_text(format_config(settings), run.file(CONFIG_FILE))
        return run

    def file(self, name):
        return os.path.join(self.path, name)

    @property
    def model_dir(self):
        directory = self.file(MODEL_DIR)
        if not os.path.isdir(directory):
            os.makedirs(directory)
        return directory

    def write_csv(self, name, rows, columns, sep=','):
        write_csv(rows, columns, self.file(name), sep)

    def write_text(self, name, text):
        write_text(text, self.file(name))
        logging.info("Wrote {}".format(self.file(name)))

    def write_figure(self, name, svg):
        save_figure(svg, self.file(name))
        logging.info("Wrote figure {}".format(self.file(name)))

    def close(self):
        logging.getLogger().removeHandler(self.handler)
        self.handler.close()
