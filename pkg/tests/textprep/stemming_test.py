# -*- coding: utf-8 -*-
"""
Tests for Snowball stemming and stop-word loading.
"""

import io
import os
import unittest

from mock import patch

from hwk.textprep.stemming import get_stopwords, stem
from hwk.utils.errors import MissingResource, UnsupportedLanguage

RESOURCES = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', 'resources')
MIN_AGREEMENT = 0.99


def read_pairs(name):
    with io.open(os.path.join(RESOURCES, name), 'r', encoding='utf-8') as f:
        lines = f.read().splitlines()[1:]
    return [line.split(u'\t') for line in lines if line]


class StemmingTestCase(unittest.TestCase):
    """
    Tests for stem against the reference word lists.
    """

    def agreement(self, name, lang):
        pairs = read_pairs(name)
        self.assertGreaterEqual(len(pairs), 1000)
        matches = sum(1 for word, expected in pairs if stem(word, lang) == expected)
        return matches / float(len(pairs))

    def test_english_reference_list(self):
        """
        Verifies that English stems agree with the Porter2 reference list on at least 99% of the words.
        """
        self.assertGreaterEqual(self.agreement('snowball_en.tsv', 'en'), MIN_AGREEMENT)

    def test_spanish_reference_list(self):
        """
        Verifies that Spanish stems agree with the Snowball reference list on at least 99% of the words.
        """
        self.assertGreaterEqual(self.agreement('snowball_es.tsv', 'es'), MIN_AGREEMENT)

    def test_known_stems(self):
        """
        Verifies a few well known stems in both languages.
        """
        self.assertEqual(stem(u'running', 'en'), u'run')
        self.assertEqual(stem(u'knights', 'en'), u'knight')
        self.assertEqual(stem(u'hablamos', 'es'), u'habl')
        self.assertEqual(stem(u'canciones', 'ES'), u'cancion')

    def test_unsupported_language(self):
        """
        Verifies that stemming refuses languages other than en/es.
        """
        with self.assertRaises(UnsupportedLanguage):
            stem(u'bonjour', 'fr')


class StopwordsTestCase(unittest.TestCase):
    """
    Tests for get_stopwords.
    """

    @patch.dict('hwk.textprep.stemming._stopwords', {}, clear=True)
    @patch('hwk.textprep.stemming.nltk_stopwords')
    def test_stopwords_lowercased_and_cached(self, mock_stopwords):
        """
        Verifies that the list is lowercased and read from nltk only once per language.
        """
        mock_stopwords.words.return_value = [u'The', u'and']

        self.assertEqual(get_stopwords('en'), frozenset([u'the', u'and']))
        get_stopwords('EN')
        mock_stopwords.words.assert_called_once_with('english')

    @patch.dict('hwk.textprep.stemming._stopwords', {}, clear=True)
    @patch('hwk.textprep.stemming.nltk_stopwords')
    def test_missing_corpus(self, mock_stopwords):
        """
        Verifies that a missing nltk stopwords corpus raises MissingResource.
        """
        mock_stopwords.words.side_effect = LookupError('stopwords')

        with self.assertRaises(MissingResource):
            get_stopwords('es')
