"""
Quantitative surface statistics of a tweet.
"""

import re

from hwk.data_models import SurfaceStats
from hwk.features.syllables import count_syllables

SENTENCE_END = re.compile(u'[.!?]+')


def surface_stats(tweet, tokens):
    """
    Counts on the raw text (characters, capitals, hashtags, mentions, sentences) and on the tokens
    (words, unique words, syllables).

    Args:
        tweet(Tweet): the raw tweet
        tokens(TokenSequence): its preprocessed tokens

    Returns:
        SurfaceStats: the statistics
    """
    text = tweet.text
    raw_tokens = text.split()

    char_count = len(text)
    word_count = len(tokens.tokens)
    words = tokens.words if tokens.words is not None else tokens.tokens

    return SurfaceStats(
        syllable_count=sum(count_syllables(word, tweet.lang) for word in words),
        word_count=word_count,
        char_count=char_count,
        length=sum(len(word) for word in words),
        capitals=sum(1 for char in text if char.isupper()),
        unique_words=len(set(tokens.tokens)),
        word_density=float(word_count) / max(1, char_count),
        hashtag_count=sum(1 for token in raw_tokens if token.startswith(u'#') and len(token) > 1),
        mention_count=sum(1 for token in raw_tokens if token.startswith(u'@') and len(token) > 1),
        sentence_count=max(1, len(SENTENCE_END.findall(text)))
    )
