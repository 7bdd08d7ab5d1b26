"""
Joins the TF-IDF block and the standardized dense block (surface counts, readability and sentiment)
into one feature vector per tweet.
"""

import io
import logging
import os

import numpy as np
import scipy.sparse as sp

from hwk.features.readability import readability
from hwk.features.sentiment import DEFAULT_NEUTRAL_WEIGHT, load_lexicon, sentiment_scores
from hwk.features.surface import surface_stats
from hwk.features.tfidf import SparseVector, Vocabulary, fit_tfidf, transform_corpus
from hwk.utils.errors import ConfigError, DimensionMismatch, ModelFormatError, NotFitted

DENSE_SLOTS = (
    'syllable_count',
    'avg_syllable',
    'word_count',
    'character_count',
    'length',
    'capitals',
    'word_vs_unique',
    'word_unique_percentage',
    'word_density',
    'hashtag_count',
    'mention_count',
    'flesch_reading_ease',
    'flesch_kincaid_grade'
)
SENTIMENT_SLOTS = ('sentiment_pos', 'sentiment_neg', 'sentiment_neu')
# slots that showed no correlation with the label in feature screening
DROPPABLE_SLOTS = ('avg_syllable', 'capitals', 'word_vs_unique', 'character_count', 'word_unique_percentage')

VOCABULARY_FILE = 'vocabulary.tsv'
SCALER_FILE = 'dense_slots.tsv'
LEXICON_FILE = 'lexicon.tsv'
SCALER_FORMAT = 'hwk-dense-slots'


def dense_values(tweet, tokens, lexicon=None, neutral_weight=DEFAULT_NEUTRAL_WEIGHT):
    """
    Unstandardized values of every dense slot for one tweet.

    Args:
        tweet(Tweet): raw tweet
        tokens(TokenSequence): its tokens
        lexicon(SentimentLexicon): lexicon for the sentiment slots, skipped when None
        neutral_weight(float): neutral contribution per token for sentiment

    Returns:
        dict: slot name to value
    """
    stats = surface_stats(tweet, tokens)
    words = max(1, stats.word_count)

    if stats.word_count:
        fre, fkgl = readability(stats)
    else:
        fre, fkgl = 0.0, 0.0

    values = {
        'syllable_count': stats.syllable_count,
        'avg_syllable': float(stats.syllable_count) / words,
        'word_count': stats.word_count,
        'character_count': stats.char_count,
        'length': stats.length,
        'capitals': stats.capitals,
        'word_vs_unique': stats.unique_words,
        'word_unique_percentage': float(stats.unique_words) / words,
        'word_density': stats.word_density,
        'hashtag_count': stats.hashtag_count,
        'mention_count': stats.mention_count,
        'flesch_reading_ease': fre,
        'flesch_kincaid_grade': fkgl
    }

    if lexicon is not None:
        pos, neg, neu = sentiment_scores(tokens, lexicon, neutral_weight)
        values.update({'sentiment_pos': pos, 'sentiment_neg': neg, 'sentiment_neu': neu})

    return values


class FeatureVector(object):
    """
    A tweet's TF-IDF block followed by its standardized dense block.
    """
    def __init__(self, sparse, dense):
        self.sparse = sparse
        self.dense = np.asarray(dense, dtype=np.float64)

    def __len__(self):
        return self.sparse.dimension + len(self.dense)

    @property
    def dimension(self):
        return len(self)

    def to_dense(self):
        return np.concatenate([self.sparse.to_dense(), self.dense])

    def to_csr(self):
        return sp.hstack([self.sparse.to_csr(), sp.csr_matrix(self.dense.reshape(1, -1))], format='csr')


class FeatureAssembler(object):
    """
    Fits every extractor on the training split and applies the fitted state to any split.
    """
    def __init__(self, n_range=(1, 3), min_df=2, drop_slots=(), use_sentiment=True, lexicon=None,
                 neutral_weight=DEFAULT_NEUTRAL_WEIGHT):
        """
        Initialises the assembler.

        Args:
            n_range(tuple): n-gram range of the TF-IDF block
            min_df(int): TF-IDF document frequency cut-off
            drop_slots(iterable): dense slot names to leave out, from DROPPABLE_SLOTS
            use_sentiment(bool): append the three sentiment slots
            lexicon(SentimentLexicon): lexicon for the sentiment slots
            neutral_weight(float): neutral contribution per token for sentiment
        """
        unknown = set(drop_slots) - set(DROPPABLE_SLOTS)
        if unknown:
            raise ConfigError("Slots {} cannot be dropped; droppable slots are {}".format(
                sorted(unknown), list(DROPPABLE_SLOTS)
            ))
        if use_sentiment and lexicon is None:
            raise ConfigError("Sentiment slots need a lexicon")

        self.n_range = tuple(n_range)
        self.min_df = min_df
        self.drop_slots = tuple(slot for slot in DROPPABLE_SLOTS if slot in set(drop_slots))
        self.use_sentiment = use_sentiment
        self.lexicon = lexicon if use_sentiment else None
        self.neutral_weight = neutral_weight

        self.vocabulary = None
        self.mean = None
        self.scale = None

    @property
    def slot_names(self):
        names = [slot for slot in DENSE_SLOTS if slot not in self.drop_slots]
        if self.use_sentiment:
            names.extend(SENTIMENT_SLOTS)
        return names

    @property
    def fitted(self):
        return self.vocabulary is not None

    @property
    def dimension(self):
        self._check_fitted()
        return len(self.vocabulary) + len(self.slot_names)

    def feature_names(self):
        """
        Returns:
            list: n-grams followed by dense slot names, in column order
        """
        self._check_fitted()
        return list(self.vocabulary.terms) + self.slot_names

    def _check_fitted(self):
        if not self.fitted:
            raise NotFitted("The feature assembler has not been fitted")

    def _raw_dense(self, tweets, token_seqs):
        names = self.slot_names
        rows = []
        for tweet, tokens in zip(tweets, token_seqs):
            values = dense_values(tweet, tokens, self.lexicon, self.neutral_weight)
            rows.append([float(values[name]) for name in names])
        return np.array(rows, dtype=np.float64).reshape(len(rows), len(names))

    def fit(self, tweets, token_seqs):
        """
        Fits the vocabulary and the dense-block statistics on the training split.

        Args:
            tweets(list): training tweets
            token_seqs(list): their TokenSequence records, aligned

        Returns:
            FeatureAssembler: self
        """
        tweets, token_seqs = list(tweets), list(token_seqs)
        if len(tweets) != len(token_seqs):
            raise DimensionMismatch("{} tweets but {} token sequences".format(len(tweets), len(token_seqs)))

        self.vocabulary = fit_tfidf(token_seqs, self.n_range, self.min_df)

        raw = self._raw_dense(tweets, token_seqs)
        self.mean = raw.mean(axis=0)
        scale = raw.std(axis=0)
        scale[scale == 0] = 1.0
        self.scale = scale

        logging.info("Feature space: {} n-grams + {} dense slots".format(len(self.vocabulary), len(self.slot_names)))

        return self

    def _standardize(self, raw):
        return (raw - self.mean) / self.scale

    def transform(self, tweets, token_seqs):
        """
        Feature rows for a split, using the statistics of the training fit.

        Args:
            tweets(list): tweets
            token_seqs(list): their TokenSequence records, aligned

        Returns:
            scipy.sparse.csr_matrix: tweets x dimension
        """
        self._check_fitted()
        tweets, token_seqs = list(tweets), list(token_seqs)
        tfidf = transform_corpus(token_seqs, self.vocabulary)
        dense = self._standardize(self._raw_dense(tweets, token_seqs))
        return sp.hstack([tfidf, sp.csr_matrix(dense)], format='csr')

    def assemble(self, tweet, tokens):
        """
        Feature vector of one tweet.

        Args:
            tweet(Tweet): raw tweet
            tokens(TokenSequence): its tokens

        Returns:
            FeatureVector: TF-IDF block and standardized dense block
        """
        self._check_fitted()
        sparse = SparseVector.from_csr_row(transform_corpus([tokens], self.vocabulary))
        dense = self._standardize(self._raw_dense([tweet], [tokens]))[0]
        return FeatureVector(sparse, dense)

    def save(self, directory):
        """
        Writes the vocabulary, the dense-slot statistics and the lexicon into a directory.
        """
        self._check_fitted()
        self.vocabulary.save(os.path.join(directory, VOCABULARY_FILE))

        lines = [
            u'{}\t1'.format(SCALER_FORMAT),
            u'min_df\t{}'.format(self.min_df),
            u'neutral_weight\t{!r}'.format(float(self.neutral_weight)),
            u'sentiment\t{}'.format(int(self.use_sentiment)),
            u'drop\t{}'.format(u','.join(self.drop_slots))
        ]
        for name, mean, scale in zip(self.slot_names, self.mean, self.scale):
            lines.append(u'{}\t{!r}\t{!r}'.format(name, float(mean), float(scale)))
        with io.open(os.path.join(directory, SCALER_FILE), 'w', encoding='utf-8', newline='\n') as f:
            f.write(u'\n'.join(lines) + u'\n')

        if self.lexicon is not None:
            with io.open(os.path.join(directory, LEXICON_FILE), 'w', encoding='utf-8', newline='\n') as f:
                for token in sorted(self.lexicon.valences):
                    f.write(u'{}\t{!r}\n'.format(token, self.lexicon.valences[token]))

    @classmethod
    def load(cls, directory):
        """
        Reads an assembler written by save.

        Returns:
            FeatureAssembler: the fitted assembler
        """
        path = os.path.join(directory, SCALER_FILE)
        with io.open(path, 'r', encoding='utf-8') as f:
            lines = f.read().splitlines()

        try:
            if lines[0].split(u'\t')[0] != SCALER_FORMAT:
                raise ModelFormatError("Not a dense-slot file", path=path, line=1)
            settings = dict(line.split(u'\t', 1) for line in lines[1:5])
            use_sentiment = settings['sentiment'] == u'1'
            drop = [slot for slot in settings['drop'].split(u',') if slot]
            rows = [line.split(u'\t') for line in lines[5:]]
            means = [float(row[1]) for row in rows]
            scales = [float(row[2]) for row in rows]
        except (IndexError, KeyError, ValueError) as e:
            raise ModelFormatError("Malformed dense-slot file ({})".format(e), path=path)

        vocabulary = Vocabulary.load(os.path.join(directory, VOCABULARY_FILE))
        lexicon = load_lexicon(os.path.join(directory, LEXICON_FILE)) if use_sentiment else None

        assembler = cls(vocabulary.n_range, int(settings['min_df']), drop, use_sentiment, lexicon,
                        float(settings['neutral_weight']))
        if [row[0] for row in rows] != assembler.slot_names:
            raise ModelFormatError("Dense slots {} do not match the configuration".format([r[0] for r in rows]),
                                   path=path)

        assembler.vocabulary = vocabulary
        assembler.mean = np.array(means)
        assembler.scale = np.array(scales)
        return assembler


def assemble(tweet, tokens, fitted):
    """
    Feature vector of one tweet under a fitted assembler.
    """
    return fitted.assemble(tweet, tokens)
