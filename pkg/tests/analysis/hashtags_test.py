"""
Tests for hashtag statistics.
"""

import random
import unittest

from hwk.analysis.hashtags import hashtag_presence, hashtag_stats, top_k_share
from hwk.data_models import Dataset, Tweet


def tweets_dataset(texts):
    return Dataset([Tweet(str(i), text, 'en', None) for i, text in enumerate(texts)], 'en', 'all')


class HashtagStatsTestCase(unittest.TestCase):
    """
    Tests for hashtag_stats, top_k_share and hashtag_presence.
    """

    def test_shares(self):
        """
        Verifies counts and shares of case-folded hashtags.
        """
        stats = hashtag_stats(tweets_dataset([u'#A'] * 5 + [u'#a #a #a #a', u'#b']))

        self.assertEqual(list(stats['hashtag']), [u'#a', u'#b'])
        self.assertEqual(list(stats['count']), [9, 1])
        self.assertAlmostEqual(stats['share'].iloc[0], 0.9)

    def test_no_hashtags(self):
        """
        Verifies an empty table and a zero share without hashtags.
        """
        ds = tweets_dataset([u'plain words'])
        self.assertEqual(len(hashtag_stats(ds)), 0)
        self.assertEqual(top_k_share(ds), 0.0)

    def test_planted_top_ten_share(self):
        """
        Verifies that ten hashtags making up 23 of 100 occurrences give a top-10 share of 0.23, in any tweet order.
        """
        texts = [u'tweet #top0'] * 5
        texts += [u'tweet #top{}'.format(i) for i in range(1, 10) for _ in range(2)]
        texts += [u'tweet #rare{}'.format(i) for i in range(77)]

        self.assertAlmostEqual(top_k_share(tweets_dataset(texts)), 0.23)
        random.Random(0).shuffle(texts)
        self.assertAlmostEqual(top_k_share(tweets_dataset(texts)), 0.23)

    def test_presence(self):
        """
        Verifies the shares of tweets with at least one and with several hashtags.
        """
        self.assertEqual(hashtag_presence(tweets_dataset([u'#a', u'#a #b', u'none', u'no'])), (0.5, 0.25))
        self.assertEqual(hashtag_presence(tweets_dataset([])), (0.0, 0.0))
