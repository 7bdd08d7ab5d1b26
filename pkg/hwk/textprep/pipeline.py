"""
The clean -> tokenize -> stem pipeline applied to every tweet before any model sees it.
"""

from hwk.data_models import TokenSequence
from hwk.textprep.cleaning import clean, extract_hashtags, extract_mentions, tokenize
from hwk.textprep.stemming import get_stopwords, stem


def _strip_sign(token, sign, keep_body):
    if keep_body and token.startswith(sign):
        return token.lstrip(sign)
    return token


def preprocess(tweet, cfg):
    """
    Turns a tweet into its token sequence. Hashtags and mentions are taken from the raw text before any
    cleaning; their bodies stay in the token stream without the '#'/'@' sign.

    Args:
        tweet(Tweet): tweet to process
        cfg(CleanConfig): cleaning switches

    Returns:
        TokenSequence: stemmed tokens plus the unstemmed words they came from
    """
    kept_hashtags = extract_hashtags(tweet.text)
    kept_mentions = extract_mentions(tweet.text)

    words = []
    for token in tokenize(clean(tweet.text, cfg)):
        token = _strip_sign(token, u'#', cfg.keep_hashtag_body)
        token = _strip_sign(token, u'@', cfg.keep_mention_body)
        if token:
            words.append(token)

    if cfg.remove_stopwords:
        stopwords = get_stopwords(tweet.lang)
        words = [w for w in words if w.lower() not in stopwords]

    tokens = [stem(w.lower(), tweet.lang) or w.lower() for w in words]

    return TokenSequence(tokens, tweet.id, kept_hashtags, kept_mentions, words)


def preprocess_dataset(ds, cfg):
    """
    Args:
        ds(Dataset): tweets to process
        cfg(CleanConfig): cleaning switches

    Returns:
        list: one TokenSequence per tweet, in dataset order
    """
    return [preprocess(tweet, cfg) for tweet in ds]
