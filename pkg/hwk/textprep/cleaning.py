"""
Text cleaning and whitespace tokenization for tweets.
"""

import re
import unicodedata

URL_PATTERN = re.compile(r'https?://\S+', re.IGNORECASE | re.UNICODE)
HASHTAG_PATTERN = re.compile(r'(?<!\w)#(\w+)', re.UNICODE)
MENTION_PATTERN = re.compile(r'(?<!\w)@(\w+)', re.UNICODE)

# Unicode categories removed as "bad characters": controls and unassigned codepoints (plus lone surrogates)
BAD_CATEGORIES = frozenset(['Cc', 'Cn', 'Cs'])
SYMBOL_CATEGORY = 'So'


def _remove_bad_characters(text):
    chars = []
    for char in text:
        if char.isspace():
            chars.append(u' ')
        elif unicodedata.category(char) not in BAD_CATEGORIES:
            chars.append(char)
    return u''.join(chars)


def _strip_punctuation(text, keep):
    return u''.join(
        char for char in text
        if char in keep or not unicodedata.category(char).startswith('P')
    )


def _pad_symbols(text):
    return u''.join(
        u' {} '.format(char) if unicodedata.category(char) == SYMBOL_CATEGORY else char
        for char in text
    )


def _collapse_repeats(text, max_run):
    pattern = re.compile(r'(.)\1{%d,}' % max_run, re.UNICODE | re.DOTALL)
    return pattern.sub(lambda match: match.group(1) * max_run, text)


def _clean_once(text, cfg):
    text = _remove_bad_characters(text)

    if cfg.lowercase:
        text = text.lower()

    if cfg.strip_urls:
        text = URL_PATTERN.sub(u' ', text)

    if not cfg.keep_hashtag_body:
        text = HASHTAG_PATTERN.sub(u' ', text)
    if not cfg.keep_mention_body:
        text = MENTION_PATTERN.sub(u' ', text)

    if cfg.strip_punctuation:
        keep = set()
        if cfg.keep_hashtag_body:
            keep.add(u'#')
        if cfg.keep_mention_body:
            keep.add(u'@')
        text = _strip_punctuation(text, keep)

    # emoji become tokens of their own
    text = _pad_symbols(text)

    if cfg.collapse_repeats:
        text = _collapse_repeats(text, cfg.collapse_repeats)
        # collapsing may rebuild a scheme such as "htttp://"
        if cfg.strip_urls:
            text = URL_PATTERN.sub(u' ', text)

    return u' '.join(text.split())


def clean(text, cfg):
    """
    Cleans one tweet text. The function is total and idempotent for every configuration.

    Args:
        text(str): raw text
        cfg(CleanConfig): cleaning switches

    Returns:
        str: cleaned text with single spaces between tokens
    """
    cleaned = _clean_once(text, cfg)
    # a later step can expose a match for an earlier one, so repeat until stable
    while True:
        again = _clean_once(cleaned, cfg)
        if again == cleaned:
            return cleaned
        cleaned = again


def tokenize(text):
    """
    Splits cleaned text on runs of whitespace.

    Args:
        text(str): cleaned text

    Returns:
        list: non-empty tokens in order
    """
    return text.split()


def extract_hashtags(text):
    """
    Returns:
        list: lowercased hashtags of the raw text, '#' included, in order of appearance
    """
    return [u'#' + body.lower() for body in HASHTAG_PATTERN.findall(text)]


def extract_mentions(text):
    """
    Returns:
        list: lowercased mentions of the raw text, '@' included, in order of appearance
    """
    return [u'@' + body.lower() for body in MENTION_PATTERN.findall(text)]
