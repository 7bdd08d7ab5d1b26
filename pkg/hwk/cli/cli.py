"""
Batch front-end. Every invocation resolves its configuration (defaults, --config file, --set overrides,
named flags), picks the seed and writes a self-contained run directory.

Example invocations:

    $ python hwk_cli.py train --model logreg --config config/DESK.cfg --train tr.tsv --dev dev.tsv --seed 7
    $ python hwk_cli.py evaluate --pred p.tsv --gold g.tsv --task b
    $ python hwk_cli.py audit --train tr.tsv --test te.tsv --min-support 20
"""

import argparse
import json
import logging
import sys

from hwk.cli.commands import COMMANDS, DEFAULT_EXPLAIN_LIMIT
from hwk.cli.config import resolve_settings
from hwk.cli.run_dir import LOG_FORMAT, RunDirectory
from hwk.pipelines.factory import MODEL_NAMES
from hwk.utils.errors import HwkException
from hwk.utils.seed_utils import resolve_seed

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_ERROR = 2

# flag attribute to setting key
FLAG_SETTINGS = (
    ('train', 'data.train'),
    ('dev', 'data.dev'),
    ('test', 'data.test'),
    ('lang', 'run.lang'),
    ('task', 'run.task'),
    ('model', 'run.model'),
    ('repeats', 'run.repeats'),
    ('min_support', 'audit.min_support')
)
SWITCH_SETTINGS = (
    ('fold_dev', 'data.fold_dev'),
    ('coerce_labels', 'data.coerce_labels')
)


def common_parser():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--config', help='Experiment configuration file (key = value lines)')
    parser.add_argument('--set', dest='overrides', action='append', default=[], metavar='KEY=VALUE',
                        help='Override one setting; may be repeated')
    parser.add_argument('--seed', type=int, help='Run seed; falls back to run.seed, then HWK_SEED, then 0')
    parser.add_argument('--train', help='Training TSV')
    parser.add_argument('--dev', help='Development TSV')
    parser.add_argument('--test', help='Test TSV')
    parser.add_argument('--lang', choices=('en', 'es'), help='Language of the tweets')
    parser.add_argument('--task', choices=('a', 'b'), help='a: HS only, b: HS, TR and AG')
    parser.add_argument('--run-dir', help='Run directory to create, derived from run.output_root by default')
    parser.add_argument('--log-level', default='INFO', choices=('DEBUG', 'INFO', 'WARNING', 'ERROR'))
    parser.add_argument('--coerce-labels', action='store_true', default=None,
                        help='Force TR=AG=0 on HS=0 rows instead of rejecting them')
    parser.add_argument('--positive-only', action='store_true',
                        help='Score dimensions by positive class F1 instead of macro-F1')
    return parser


def get_args(argv=None):
    common = common_parser()
    parser = argparse.ArgumentParser(description='Multilingual hate speech detection experiments')
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    subparsers.add_parser('preprocess', parents=[common], help='Write the token sequences of the given splits')

    train = subparsers.add_parser('train', parents=[common], help='Fit a model and evaluate it')
    train.add_argument('--model', choices=MODEL_NAMES, help='Model to fit')
    train.add_argument('--fold-dev', action='store_true', default=None, help='Fold the dev split into training')
    train.add_argument('--repeats', type=int, help='Refit with this many consecutive seeds')

    evaluate = subparsers.add_parser('evaluate', parents=[common], help='Score predictions against gold labels')
    evaluate.add_argument('--pred', help='Prediction TSV (id, HS, TR, AG)')
    evaluate.add_argument('--gold', help='Gold TSV, defaults to --test')
    evaluate.add_argument('--model-dir', help='model/ directory of a train run')

    predict = subparsers.add_parser('predict', parents=[common], help='Write predictions of a trained run')
    predict.add_argument('--model-dir', required=True, help='model/ directory of a train run')

    explain = subparsers.add_parser('explain', parents=[common], help='LIME explanations of test tweets')
    explain.add_argument('--model-dir', required=True, help='model/ directory of a train run')
    explain.add_argument('--limit', type=int, default=DEFAULT_EXPLAIN_LIMIT, help='Tweets to explain')
    explain.add_argument('--ids', nargs='+', help='Explain these tweet ids instead')

    audit = subparsers.add_parser('audit', parents=[common], help='Hashtag and annotation drift statistics')
    audit.add_argument('--min-support', type=int, help='Fewest matching tweets per split for a pattern')

    gridsearch = subparsers.add_parser('gridsearch', parents=[common], help='Cross-validate the linear grid')
    gridsearch.add_argument('--model', choices=MODEL_NAMES, help='Linear model whose features are used')

    return parser.parse_args(argv)


def apply_flags(settings, args):
    """
    Copies the named flags given on the command line over the settings.
    """
    for attribute, key in FLAG_SETTINGS + SWITCH_SETTINGS:
        value = getattr(args, attribute, None)
        if value is not None:
            settings[key] = value
    return settings


def configure_logging(level):
    logging.basicConfig(level=getattr(logging, level), format=LOG_FORMAT, stream=sys.stderr)


def run(args):
    """
    Runs one subcommand.

    Args:
        args(argparse.Namespace): parsed arguments

    Returns:
        int: exit status; 2 with a JSON error line on stderr for toolkit errors, 1 for anything else
    """
    run_dir = None
    try:
        settings = apply_flags(resolve_settings(args.config, args.overrides), args)
        seed = resolve_seed(args.seed, settings['run.seed'])
        settings['run.seed'] = seed

        run_dir = RunDirectory.create(args.command, settings, seed, args.run_dir, getattr(logging, args.log_level))
        COMMANDS[args.command](settings, seed, run_dir, args)
    except HwkException as e:
        logging.error("{}: {}".format(type(e).__name__, e.message))
        sys.stderr.write(json.dumps(e.to_dict(), sort_keys=True) + '\n')
        return EXIT_ERROR
    except Exception:
        logging.exception("Run failed")
        return EXIT_UNEXPECTED
    finally:
        if run_dir is not None:
            run_dir.close()

    logging.info("Run finished: {}".format(run_dir.path))
    return EXIT_OK


def main(argv=None):
    args = get_args(argv)
    configure_logging(args.log_level)
    return run(args)
