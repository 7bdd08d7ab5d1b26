"""
Hashtag concentration and presence statistics of a dataset.
"""

from collections import Counter, OrderedDict

from hwk.textprep.cleaning import extract_hashtags
from hwk.utils.report_utils import to_frame

HASHTAG_COLUMNS = ('hashtag', 'count', 'share')
DEFAULT_TOP_K = 10


def hashtag_counts(ds):
    return Counter(tag for tweet in ds for tag in extract_hashtags(tweet.text))


def hashtag_stats(ds, top_k=DEFAULT_TOP_K):
    """
    Most frequent case-folded hashtags with their share of all hashtag occurrences.

    Args:
        ds(Dataset): the dataset
        top_k(int): rows to keep, None for all

    Returns:
        pandas.DataFrame: hashtag, count and share, by descending count (ties alphabetical)
    """
    counts = hashtag_counts(ds)
    total = sum(counts.values())
    ranked = sorted(counts.items(), key=lambda pair: (-pair[1], pair[0]))
    if top_k is not None:
        ranked = ranked[:top_k]
    rows = [OrderedDict([('hashtag', tag), ('count', count), ('share', float(count) / total)]) for tag, count in ranked]
    return to_frame(rows, HASHTAG_COLUMNS)


def top_k_share(ds, k=DEFAULT_TOP_K):
    """
    Returns:
        float: share of all hashtag occurrences taken by the k most frequent hashtags, 0 without hashtags
    """
    stats = hashtag_stats(ds, k)
    return float(stats['share'].sum()) if len(stats) else 0.0


def hashtag_presence(ds):
    """
    Returns:
        (float, float): share of tweets with at least one hashtag and with more than one
    """
    if not len(ds):
        return 0.0, 0.0
    per_tweet = [len(extract_hashtags(tweet.text)) for tweet in ds]
    return (
        sum(1 for n in per_tweet if n >= 1) / float(len(ds)),
        sum(1 for n in per_tweet if n > 1) / float(len(ds))
    )


def presence_ratios(train, test):
    """
    How many times more likely a training tweet is than a test tweet to carry at least one, and more than
    one, hashtag.

    Returns:
        OrderedDict: presence shares of both splits and their ratios (None when the test share is 0)
    """
    train_one, train_many = hashtag_presence(train)
    test_one, test_many = hashtag_presence(test)
    return OrderedDict([
        ('train_at_least_one', train_one),
        ('test_at_least_one', test_one),
        ('ratio_at_least_one', train_one / test_one if test_one else None),
        ('train_more_than_one', train_many),
        ('test_more_than_one', test_many),
        ('ratio_more_than_one', train_many / test_many if test_many else None)
    ])
