"""
Annotation drift: how often tweets containing a hashtag or word carry a label, and how much that rate
differs between two splits. Counting is per tweet: a tweet either contains a pattern or not.
"""

import logging
from collections import Counter, OrderedDict, namedtuple

from hwk.analysis.hashtags import presence_ratios
from hwk.data_models import HS, CleanConfig
from hwk.textprep.cleaning import clean, extract_hashtags, tokenize
from hwk.utils.errors import AnalysisError, NoMatches
from hwk.utils.report_utils import to_frame

PATTERN_CLEAN = CleanConfig(keep_hashtag_body=False, keep_mention_body=False)
DEFAULT_MIN_SUPPORT = 20
DRIFT_COLUMNS = ('pattern', 'train_rate', 'test_rate', 'delta', 'train_support', 'test_support')

DriftReport = namedtuple('DriftReport', ['table', 'presence'])


def tweet_patterns(tweet):
    """
    Returns:
        frozenset: the tweet's lowercased hashtags ('#' included) and its cleaned words
    """
    return frozenset(extract_hashtags(tweet.text)) | frozenset(tokenize(clean(tweet.text, PATTERN_CLEAN)))


def _normalise(pattern):
    return pattern.strip().lower()


def conditional_label_rate(ds, pattern, label=HS):
    """
    Share of the tweets containing pattern that carry label = 1.

    Args:
        ds(Dataset): labeled dataset
        pattern(str): a hashtag ('#...') or a word, any case
        label(str): label dimension

    Returns:
        (int, float): number of matching tweets and the rate
    """
    pattern = _normalise(pattern)
    labels = ds.labels(label)
    hits = [value for tweet, value in zip(ds, labels) if pattern in tweet_patterns(tweet)]
    if not hits:
        raise NoMatches("No tweet in split '{}' contains {!r}".format(ds.split_name, pattern))
    return len(hits), float(sum(hits)) / len(hits)


def _pattern_counts(ds, label):
    support, positives = Counter(), Counter()
    for tweet, value in zip(ds, ds.labels(label)):
        for pattern in tweet_patterns(tweet):
            support[pattern] += 1
            positives[pattern] += value
    return support, positives


def discrepancy_report(train, test, min_support=DEFAULT_MIN_SUPPORT, label=HS):
    """
    Patterns whose label rate differs most between two splits.

    Args:
        train(Dataset): labeled training split
        test(Dataset): labeled test split
        min_support(int): fewest matching tweets a pattern needs in both splits
        label(str): label dimension

    Returns:
        DriftReport: the table ranked by |delta| descending (ties by pattern) and the hashtag presence ratios
    """
    if min_support < 1:
        raise AnalysisError("min_support must be at least 1, got {}".format(min_support))

    train_support, train_positive = _pattern_counts(train, label)
    test_support, test_positive = _pattern_counts(test, label)

    rows = []
    for pattern in set(train_support) & set(test_support):
        if train_support[pattern] < min_support or test_support[pattern] < min_support:
            continue
        train_rate = float(train_positive[pattern]) / train_support[pattern]
        test_rate = float(test_positive[pattern]) / test_support[pattern]
        rows.append(OrderedDict([
            ('pattern', pattern),
            ('train_rate', train_rate),
            ('test_rate', test_rate),
            ('delta', abs(train_rate - test_rate)),
            ('train_support', train_support[pattern]),
            ('test_support', test_support[pattern])
        ]))

    rows.sort(key=lambda row: (-row['delta'], row['pattern']))
    logging.info("Drift report: {} patterns with support >= {} in both splits".format(len(rows), min_support))

    return DriftReport(to_frame(rows, DRIFT_COLUMNS), presence_ratios(train, test))
