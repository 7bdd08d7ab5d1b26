"""
Plain records shared by every stage of the toolkit.
"""

from collections import namedtuple

from hwk.utils.errors import ConfigError, UnlabeledDataset, UnsupportedLanguage

LANG_EN = 'en'
LANG_ES = 'es'
LANGUAGES = (LANG_EN, LANG_ES)

HS = 'hs'
TR = 'tr'
AG = 'ag'
LABEL_DIMENSIONS = (HS, TR, AG)


def check_language(lang):
    """
    Normalises a language tag.

    Args:
        lang(str): language tag, any case

    Returns:
        str: 'en' or 'es'
    """
    tag = (lang or '').lower()
    if tag not in LANGUAGES:
        raise UnsupportedLanguage("Unsupported language {!r}, expected one of {}".format(lang, LANGUAGES))
    return tag


class LabelSet(namedtuple('LabelSet', ['hs', 'tr', 'ag'])):
    __slots__ = ()

    def get(self, dimension):
        return getattr(self, dimension)

    @property
    def complete(self):
        return self.tr is not None and self.ag is not None


Tweet = namedtuple('Tweet', ['id', 'text', 'lang', 'labels'])

TokenSequence = namedtuple('TokenSequence', ['tokens', 'source_id', 'kept_hashtags', 'kept_mentions', 'words'])

SurfaceStats = namedtuple('SurfaceStats', [
    'syllable_count',
    'word_count',
    'char_count',
    'length',
    'capitals',
    'unique_words',
    'word_density',
    'hashtag_count',
    'mention_count',
    'sentence_count'
])


class CleanConfig(namedtuple('CleanConfig', [
    'lowercase',
    'strip_urls',
    'strip_punctuation',
    'keep_hashtag_body',
    'keep_mention_body',
    'collapse_repeats',
    'remove_stopwords'
])):
    __slots__ = ()

    def __new__(cls, lowercase=True, strip_urls=True, strip_punctuation=True, keep_hashtag_body=True,
                keep_mention_body=True, collapse_repeats=3, remove_stopwords=False):
        if collapse_repeats is not None and collapse_repeats < 2:
            raise ConfigError("collapse_repeats must be at least 2, got {}".format(collapse_repeats))
        return super(CleanConfig, cls).__new__(
            cls, lowercase, strip_urls, strip_punctuation, keep_hashtag_body, keep_mention_body,
            collapse_repeats, remove_stopwords
        )


class Dataset(object):
    """
    An ordered, immutable collection of tweets in one language.
    """
    def __init__(self, tweets, lang, split_name):
        """
        Initialises the dataset.

        Args:
            tweets(iterable): Tweet records in load order
            lang(str): language shared by every tweet
            split_name(str): name of the split (train, dev, test, ...)
        """
        self._tweets = tuple(tweets)
        self.lang = check_language(lang)
        self.split_name = split_name

    @property
    def tweets(self):
        return self._tweets

    def __len__(self):
        return len(self._tweets)

    def __iter__(self):
        return iter(self._tweets)

    def __getitem__(self, index):
        return self._tweets[index]

    def __repr__(self):
        return "Dataset(split_name={!r}, lang={!r}, size={})".format(self.split_name, self.lang, len(self))

    @property
    def ids(self):
        return [tweet.id for tweet in self._tweets]

    @property
    def labeled(self):
        return all(tweet.labels is not None for tweet in self._tweets)

    def labels(self, dimension):
        """
        Gold labels of one dimension in load order.

        Args:
            dimension(str): one of hs, tr, ag

        Returns:
            list: 0/1 labels
        """
        values = []
        for tweet in self._tweets:
            value = tweet.labels.get(dimension) if tweet.labels is not None else None
            if value is None:
                raise UnlabeledDataset(
                    "Tweet {} in split '{}' has no {} label".format(tweet.id, self.split_name, dimension.upper())
                )
            values.append(value)
        return values

    def subset(self, indices, split_name):
        """
        Builds a new dataset from a selection of positions, preserving load order.

        Args:
            indices(iterable): positions into this dataset
            split_name(str): name of the new split

        Returns:
            Dataset: the selected tweets
        """
        return Dataset([self._tweets[i] for i in sorted(indices)], self.lang, split_name)
