"""
Experiment configuration: flat `key = value` files with dotted section keys. Values are typed with the YAML
scalar resolver and checked against the defaults below.
"""

import io
import logging
from collections import OrderedDict

import yaml

from hwk.utils.errors import ConfigError

BOOL = 'bool'
INT = 'int'
FLOAT = 'float'
STR = 'str'
LIST = 'list'

# key: (default, type, nullable)
SETTINGS = OrderedDict([
    ('run.seed', (None, INT, True)),
    ('run.lang', ('en', STR, False)),
    ('run.task', ('a', STR, False)),
    ('run.model', ('logreg', STR, False)),
    ('run.repeats', (1, INT, False)),
    ('run.output_root', ('runs', STR, False)),

    ('data.train', (None, STR, True)),
    ('data.dev', (None, STR, True)),
    ('data.test', (None, STR, True)),
    ('data.coerce_labels', (False, BOOL, False)),
    ('data.fold_dev', (False, BOOL, False)),

    ('clean.lowercase', (True, BOOL, False)),
    ('clean.strip_urls', (True, BOOL, False)),
    ('clean.strip_punctuation', (True, BOOL, False)),
    ('clean.keep_hashtag_body', (True, BOOL, False)),
    ('clean.keep_mention_body', (True, BOOL, False)),
    ('clean.collapse_repeats', (3, INT, True)),
    ('clean.remove_stopwords', (False, BOOL, False)),

    ('features.n_min', (1, INT, False)),
    ('features.n_max', (3, INT, False)),
    ('features.min_df', (2, INT, False)),
    ('features.sentiment', (True, BOOL, False)),
    ('features.sentiment_neutral_weight', (0.5, FLOAT, False)),
    ('features.lexicon', (None, STR, True)),
    ('features.drop_slots', ([], LIST, False)),

    ('linear.penalty', ('l2', STR, False)),
    ('linear.C', (0.1, FLOAT, False)),
    ('linear.epochs', (20, INT, False)),
    ('linear.lr', (0.1, FLOAT, False)),
    ('linear.schedule', ('optimal', STR, False)),
    ('linear.batch_size', (32, INT, True)),
    ('linear.fit_intercept', (True, BOOL, False)),
    ('linear.l1_select', (False, BOOL, False)),
    ('linear.l1_C', (1.0, FLOAT, False)),

    ('gridsearch.folds', (10, INT, False)),
    ('gridsearch.n_jobs', (1, INT, False)),
    ('gridsearch.C', ([0.01, 0.1, 1.0, 10.0], LIST, False)),
    ('gridsearch.penalties', (['l1', 'l2'], LIST, False)),
    ('gridsearch.losses', (['logistic', 'hinge'], LIST, False)),

    ('neural.profile', ('desk', STR, False)),
    ('neural.epochs', (10, INT, False)),
    ('neural.val_fraction', (0.1, FLOAT, False)),
    ('neural.vocab_size', (20000, INT, False)),
    ('neural.lr', (None, FLOAT, True)),
    ('neural.batch', (None, INT, True)),
    ('neural.dropout', (None, FLOAT, True)),

    ('explain.samples', (500, INT, False)),
    ('explain.top_k', (10, INT, False)),
    ('explain.kernel_width', (None, FLOAT, True)),

    ('audit.min_support', (20, INT, False)),
    ('audit.top_k', (10, INT, False))
])

DEFAULTS = OrderedDict((key, spec[0]) for key, spec in SETTINGS.items())


def _check_type(key, value, path, line):
    default, kind, nullable = SETTINGS[key]
    if value is None:
        if nullable:
            return None
        raise ConfigError("{} may not be empty".format(key), path=path, line=line)

    if kind == BOOL and isinstance(value, bool):
        return value
    if kind == INT and isinstance(value, int) and not isinstance(value, bool):
        return value
    if kind == FLOAT and isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    if kind == STR and isinstance(value, str):
        return value
    if kind == LIST and isinstance(value, list):
        return value
    raise ConfigError("{} expects a {} value, got {!r}".format(key, kind, value), path=path, line=line)


def parse_value(key, text, path=None, line=None):
    """
    Types the text of one value.

    Args:
        key(str): setting name
        text(str): value text
        path(str): source file, for error reports
        line(int): source line, for error reports

    Returns:
        the typed value
    """
    if key not in SETTINGS:
        raise ConfigError("Unknown setting {!r}".format(key), path=path, line=line)
    text = text.strip()
    try:
        value = yaml.safe_load(text) if text else None
    except yaml.YAMLError as e:
        raise ConfigError("Cannot parse value of {}: {}".format(key, e), path=path, line=line)

    kind = SETTINGS[key][1]
    if kind == STR and value is not None and not isinstance(value, str):
        value = text
    if kind == FLOAT and isinstance(value, str):
        try:
            value = float(value)
        except ValueError:
            pass
    return _check_type(key, value, path, line)


def parse_config(text, path=None):
    """
    Reads `key = value` lines; blank lines and lines starting with '#' are skipped.

    Returns:
        OrderedDict: the settings the text sets, typed
    """
    settings = OrderedDict()
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith(u'#'):
            continue
        if u'=' not in line:
            raise ConfigError("Expected `key = value`, got {!r}".format(line), path=path, line=number)
        key, _, value = line.partition(u'=')
        settings[key.strip()] = parse_value(key.strip(), value, path, number)
    return settings


def load_config(path):
    try:
        with io.open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except IOError as e:
        raise ConfigError("Cannot read configuration: {}".format(e), path=path)
    except UnicodeDecodeError:
        raise ConfigError("Configuration is not UTF-8", path=path)
    return parse_config(text, path)


def resolve_settings(path=None, overrides=()):
    """
    Defaults, then the configuration file, then `key=value` overrides.

    Args:
        path(str): configuration file, optional
        overrides(iterable): `key=value` strings from the command line

    Returns:
        OrderedDict: every setting, typed
    """
    settings = OrderedDict(DEFAULTS)
    if path:
        settings.update(load_config(path))
        logging.info("Loaded configuration from {}".format(path))
    for override in overrides:
        if u'=' not in override:
            raise ConfigError("Override must read key=value, got {!r}".format(override), path='--set')
        key, _, value = override.partition(u'=')
        settings[key.strip()] = parse_value(key.strip(), value, path='--set')
    return settings


def format_value(value):
    if value is None:
        return u'null'
    if isinstance(value, bool):
        return u'true' if value else u'false'
    if isinstance(value, float):
        text = repr(value)
        if u'e' in text and u'.' not in text:
            text = text.replace(u'e', u'.0e')
        return text
    if isinstance(value, int):
        return str(value)
    if isinstance(value, list):
        return u'[{}]'.format(u', '.join(format_value(item) for item in value))
    try:
        plain = yaml.safe_load(value) == value and value.strip() == value and value
    except yaml.YAMLError:
        plain = False
    return value if plain else yaml.safe_dump(value, default_style='"').strip()


def format_config(settings):
    """
    Returns:
        str: the settings as `key = value` lines sorted by key
    """
    return u''.join(u'{} = {}\n'.format(key, format_value(settings[key])) for key in sorted(settings))
