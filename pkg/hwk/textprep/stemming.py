"""
Snowball stemming (Porter2 English and Spanish) and optional stop-word lists.
"""

from nltk.corpus import stopwords as nltk_stopwords
from nltk.stem.snowball import SnowballStemmer

from hwk.data_models import LANG_EN, LANG_ES, check_language
from hwk.utils.errors import MissingResource

SNOWBALL_LANGUAGES = {
    LANG_EN: 'english',
    LANG_ES: 'spanish'
}

_stemmers = {}
_stopwords = {}


def get_stemmer(lang):
    """
    Returns the cached Snowball stemmer for a language.

    Args:
        lang(str): en or es

    Returns:
        SnowballStemmer: the stemmer
    """
    lang = check_language(lang)
    if lang not in _stemmers:
        _stemmers[lang] = SnowballStemmer(SNOWBALL_LANGUAGES[lang])
    return _stemmers[lang]


def stem(token, lang):
    """
    Stems one lowercase token.

    Args:
        token(str): non-empty token
        lang(str): en or es

    Returns:
        str: the Snowball stem
    """
    return get_stemmer(lang).stem(token)


def get_stopwords(lang):
    """
    Loads the stop-word list of a language from the nltk data packages.

    Args:
        lang(str): en or es

    Returns:
        frozenset: lowercase stop words
    """
    lang = check_language(lang)
    if lang not in _stopwords:
        try:
            words = nltk_stopwords.words(SNOWBALL_LANGUAGES[lang])
        except LookupError:
            raise MissingResource(
                "The nltk stopwords corpus is not installed; run nltk.download('stopwords') or disable remove_stopwords"
            )
        _stopwords[lang] = frozenset(w.lower() for w in words)
    return _stopwords[lang]
