"""
Reading and writing the tab separated tweet layout (id, text, HS, TR, AG) and prediction files.
"""

import io
import logging
from collections import OrderedDict

from hwk.data_models import AG, HS, TR, Dataset, LabelSet, Tweet, check_language
from hwk.utils.errors import (
    BadLabelValue,
    DuplicateId,
    EncodingError,
    MalformedRow,
    MissingColumn
)

ID_COLUMN = 'id'
TEXT_COLUMN = 'text'
LABEL_COLUMNS = ('HS', 'TR', 'AG')
PREDICTION_HEADER = ('id', 'HS', 'TR', 'AG')
LABEL_VALUES = {'0': 0, '1': 1}


def _read_lines(path):
    """
    Yields (line number, decoded line) pairs, without the trailing LF.
    """
    with io.open(path, 'rb') as f:
        for number, raw in enumerate(f, 1):
            try:
                line = raw.decode('utf-8')
            except UnicodeDecodeError as e:
                raise EncodingError("Invalid UTF-8 ({})".format(e.reason), path=path, line=number)
            if line.endswith('\n'):
                line = line[:-1]
            yield number, line


def _parse_label(value, column, path, number):
    try:
        return LABEL_VALUES[value]
    except KeyError:
        raise BadLabelValue("{} must be 0 or 1, got {!r}".format(column, value), path=path, line=number)


def _column_positions(header, path):
    """
    Maps column names to positions and validates the header.

    Returns:
        dict: column name to index, label columns only when present
    """
    positions = {}
    for index, name in enumerate(header):
        if name in positions:
            raise MissingColumn("Column {!r} appears twice".format(name), path=path, line=1)
        positions[name] = index

    for required in (ID_COLUMN, TEXT_COLUMN):
        if required not in positions:
            raise MissingColumn("Header lacks the {!r} column".format(required), path=path, line=1)

    if ('TR' in positions or 'AG' in positions) and 'HS' not in positions:
        raise MissingColumn("TR/AG columns require an HS column", path=path, line=1)
    if ('TR' in positions) != ('AG' in positions):
        raise MissingColumn("TR and AG columns must be given together", path=path, line=1)

    return positions


def _parse_labels(fields, positions, path, number, coerce_labels):
    if 'HS' not in positions:
        return None

    hs = _parse_label(fields[positions['HS']], 'HS', path, number)
    if 'TR' not in positions:
        return LabelSet(hs, None, None)

    tr = _parse_label(fields[positions['TR']], 'TR', path, number)
    ag = _parse_label(fields[positions['AG']], 'AG', path, number)

    if hs == 0 and (tr or ag):
        if not coerce_labels:
            raise BadLabelValue(
                "HS=0 with TR={} AG={}; non-hateful tweets carry no target or aggression".format(tr, ag),
                path=path,
                line=number
            )
        logging.warning("{}:{} coercing TR={} AG={} to 0 on a HS=0 row".format(path, number, tr, ag))
        tr, ag = 0, 0

    return LabelSet(hs, tr, ag)


def load_dataset(path, lang, split_name=None, coerce_labels=False):
    """
    Loads a TSV file into a Dataset.

    Args:
        path(str): file to read
        lang(str): language of the tweets, en or es
        split_name(str): name to give the dataset, defaults to the path
        coerce_labels(bool): force TR=AG=0 on HS=0 rows instead of rejecting them

    Returns:
        Dataset: one tweet per data row, in file order
    """
    lang = check_language(lang)
    lines = _read_lines(path)

    try:
        _, header_line = next(lines)
    except StopIteration:
        raise MissingColumn("File is empty, a header row is required", path=path, line=1)

    header = header_line.split('\t')
    positions = _column_positions(header, path)

    tweets = []
    seen = set()

    for number, line in lines:
        if '\r' in line:
            raise MalformedRow("Carriage return inside a row", path=path, line=number)

        fields = line.split('\t')
        if len(fields) != len(header):
            raise MalformedRow(
                "Expected {} tab separated fields, found {}".format(len(header), len(fields)),
                path=path,
                line=number
            )

        tweet_id = fields[positions[ID_COLUMN]]
        text = fields[positions[TEXT_COLUMN]]

        if not tweet_id:
            raise MalformedRow("Empty id", path=path, line=number)
        if not text.strip():
            raise MalformedRow("Empty text for tweet {}".format(tweet_id), path=path, line=number)
        if tweet_id in seen:
            raise DuplicateId("Tweet id {} appears more than once".format(tweet_id), path=path, line=number)
        seen.add(tweet_id)

        labels = _parse_labels(fields, positions, path, number, coerce_labels)
        tweets.append(Tweet(tweet_id, text, lang, labels))

    logging.info("Loaded {} tweets from {}".format(len(tweets), path))

    return Dataset(tweets, lang, split_name or path)


def write_dataset(ds, path):
    """
    Writes a Dataset back out in the layout load_dataset reads. Label columns are written when every tweet
    carries them.

    Args:
        ds(Dataset): dataset to write
        path(str): output file
    """
    tweets = list(ds)
    with_hs = bool(tweets) and all(t.labels is not None for t in tweets)
    with_all = with_hs and all(t.labels.complete for t in tweets)

    header = [ID_COLUMN, TEXT_COLUMN]
    if with_all:
        header.extend(LABEL_COLUMNS)
    elif with_hs:
        header.append('HS')

    with io.open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(u'\t'.join(header) + u'\n')
        for tweet in tweets:
            fields = [tweet.id, tweet.text]
            if with_all:
                fields.extend(str(v) for v in tweet.labels)
            elif with_hs:
                fields.append(str(tweet.labels.hs))
            f.write(u'\t'.join(fields) + u'\n')


def concat_datasets(first, second, split_name):
    """
    Joins two datasets of the same language, e.g. to fold the dev split into training.

    Args:
        first(Dataset): leading tweets
        second(Dataset): trailing tweets
        split_name(str): name of the result

    Returns:
        Dataset: first followed by second
    """
    if first.lang != second.lang:
        raise MalformedRow("Cannot join a {} dataset with a {} one".format(first.lang, second.lang))

    seen = set(first.ids)
    for tweet in second:
        if tweet.id in seen:
            raise DuplicateId("Tweet id {} is in both '{}' and '{}'".format(
                tweet.id, first.split_name, second.split_name
            ))

    return Dataset(list(first) + list(second), first.lang, split_name)


def write_predictions(ids, label_sets, path):
    """
    Writes predictions as id, HS, TR, AG. Missing TR/AG are written as 0.

    Args:
        ids(list): tweet ids
        label_sets(list): LabelSet predictions aligned with ids
        path(str): output file
    """
    with io.open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(u'\t'.join(PREDICTION_HEADER) + u'\n')
        for tweet_id, labels in zip(ids, label_sets):
            values = [labels.hs, labels.tr or 0, labels.ag or 0]
            f.write(u'\t'.join([tweet_id] + [str(v) for v in values]) + u'\n')


def read_predictions(path):
    """
    Reads a prediction file (id, HS and optionally TR, AG). Gold TSVs with a text column are accepted too.

    Args:
        path(str): file to read

    Returns:
        OrderedDict: tweet id to LabelSet, in file order
    """
    lines = _read_lines(path)
    try:
        _, header_line = next(lines)
    except StopIteration:
        raise MissingColumn("File is empty, a header row is required", path=path, line=1)

    header = header_line.split('\t')
    positions = dict((name, index) for index, name in enumerate(header))
    if ID_COLUMN not in positions or HS.upper() not in positions:
        raise MissingColumn("Prediction files need id and HS columns", path=path, line=1)

    predictions = OrderedDict()
    for number, line in lines:
        fields = line.split('\t')
        if len(fields) != len(header):
            raise MalformedRow(
                "Expected {} tab separated fields, found {}".format(len(header), len(fields)),
                path=path,
                line=number
            )
        tweet_id = fields[positions[ID_COLUMN]]
        if tweet_id in predictions:
            raise DuplicateId("Tweet id {} appears more than once".format(tweet_id), path=path, line=number)

        values = []
        for column in (HS, TR, AG):
            name = column.upper()
            values.append(_parse_label(fields[positions[name]], name, path, number) if name in positions else None)
        predictions[tweet_id] = LabelSet(*values)

    return predictions
