"""
Tests for the lexicon sentiment shares.
"""

import io
import os
import shutil
import tempfile
import unittest

from hwk.features.sentiment import SentimentLexicon, default_lexicon, load_lexicon, sentiment_scores
from hwk.utils.errors import FeatureError


class SentimentTestCase(unittest.TestCase):
    """
    Tests for sentiment_scores and lexicon loading.
    """

    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.lexicon = SentimentLexicon({u'love': 3.0, u'Hate': -3.0, u'meh': 0.0})

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_shares(self):
        """
        Verifies that hits weigh |valence| + 1 and every other token the neutral weight.
        """
        pos, neg, neu = sentiment_scores([u'love', u'HATE', u'cat', u'meh'], self.lexicon, neutral_weight=0.5)

        self.assertAlmostEqual(pos, 4.0 / 9.0)
        self.assertAlmostEqual(neg, 4.0 / 9.0)
        self.assertAlmostEqual(neu, 1.0 / 9.0)

    def test_empty_tokens(self):
        """
        Verifies that an empty token list is entirely neutral.
        """
        self.assertEqual(sentiment_scores([], self.lexicon), (0.0, 0.0, 1.0))

    def test_valence_range(self):
        """
        Verifies that valences outside [-4, 4] are refused.
        """
        with self.assertRaises(FeatureError):
            SentimentLexicon({u'awful': -4.5})

    def test_load_lexicon(self):
        """
        Verifies that comments and blank lines are skipped and malformed lines report their number.
        """
        path = os.path.join(self.directory, 'lex.tsv')
        with io.open(path, 'w', encoding='utf-8') as f:
            f.write(u'# comment\n\ngood\t2.5\nbad\n')

        with self.assertRaises(FeatureError) as context:
            load_lexicon(path)
        self.assertEqual(context.exception.line, 4)

        with io.open(path, 'w', encoding='utf-8') as f:
            f.write(u'# comment\n\ngood\t2.5\n')
        self.assertEqual(load_lexicon(path).get(u'GOOD'), 2.5)

    def test_shipped_lexicons(self):
        """
        Verifies that both shipped lexicons load.
        """
        self.assertGreater(len(default_lexicon('en')), 50)
        self.assertGreater(len(default_lexicon('es')), 50)
