"""
Lexicon based sentiment shares. Every lexicon hit adds |valence| + 1 to its polarity, every other token adds
the neutral weight, and the three totals are normalised to shares.
"""

import io
import math
import os

from hwk.data_models import check_language
from hwk.utils.errors import FeatureError

RESOURCES_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'resources')
LEXICON_FILES = {
    'en': 'sentiment_lexicon_en.tsv',
    'es': 'sentiment_lexicon_es.tsv'
}
MAX_VALENCE = 4.0
HIT_OFFSET = 1.0
DEFAULT_NEUTRAL_WEIGHT = 0.5


class SentimentLexicon(object):
    """
    Lowercase token to valence map, valences in [-4, 4].
    """
    def __init__(self, valences, source=None):
        self.valences = {}
        for token, valence in valences.items():
            valence = float(valence)
            if not math.isfinite(valence) or abs(valence) > MAX_VALENCE:
                raise FeatureError("Valence of {!r} must lie in [-4, 4], got {}".format(token, valence), path=source)
            self.valences[token.lower()] = valence
        self.source = source

    def __len__(self):
        return len(self.valences)

    def __contains__(self, token):
        return token in self.valences

    def get(self, token):
        return self.valences.get(token.lower())


def load_lexicon(path):
    """
    Reads a `token<TAB>valence` lexicon; lines starting with '#' and blank lines are skipped.

    Args:
        path(str): lexicon file

    Returns:
        SentimentLexicon: the lexicon
    """
    valences = {}
    with io.open(path, 'r', encoding='utf-8') as f:
        for number, line in enumerate(f, 1):
            line = line.rstrip(u'\n')
            if not line.strip() or line.startswith(u'#'):
                continue
            try:
                token, valence = line.split(u'\t')
                valences[token] = float(valence)
            except ValueError:
                raise FeatureError("Expected token<TAB>valence, got {!r}".format(line), path=path, line=number)
    return SentimentLexicon(valences, source=path)


def default_lexicon(lang):
    """
    Returns:
        SentimentLexicon: the lexicon shipped for the language
    """
    return load_lexicon(os.path.join(RESOURCES_DIR, LEXICON_FILES[check_language(lang)]))


def sentiment_scores(tokens, lex, neutral_weight=DEFAULT_NEUTRAL_WEIGHT):
    """
    Positive, negative and neutral shares of a token sequence. A lexicon word of valence v adds |v| + HIT_OFFSET
    to the total of its polarity. Words with no valence, or valence 0, add neutral_weight to neutral. Each share
    is its total over the sum of all three; a sequence with nothing to count scores (0, 0, 1).

    Args:
        tokens(TokenSequence|list): tokens to score; a TokenSequence is scored on its unstemmed words
        lex(SentimentLexicon): valence lexicon
        neutral_weight(float): contribution of each token without polarity

    Returns:
        (float, float, float): pos, neg, neu shares summing to 1
    """
    words = tokens.words if hasattr(tokens, 'words') else tokens

    positive = negative = neutral = 0.0
    for word in words:
        valence = lex.get(word)
        if valence is None or valence == 0:
            neutral += neutral_weight
        elif valence > 0:
            positive += valence + HIT_OFFSET
        else:
            negative += -valence + HIT_OFFSET

    total = positive + negative + neutral
    if total == 0:
        return 0.0, 0.0, 1.0

    return positive / total, negative / total, neutral / total
