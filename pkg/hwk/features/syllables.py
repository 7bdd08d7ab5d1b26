"""
Heuristic syllable counting for English and Spanish words.
"""

import re

from hwk.data_models import LANG_EN, check_language

EN_VOWEL_GROUPS = re.compile(u'[aeiouy]+')
ES_VOWEL_GROUPS = re.compile(u'[aeiouáéíóúü]+')
# open vowels, plus accented i/u which break a diphthong into two syllables
ES_STRONG = frozenset(u'aeoáéóíú')
EN_VOWELS = frozenset(u'aeiouy')


def _letters(word):
    return u''.join(char for char in word.lower() if char.isalpha())


def _count_english(letters):
    count = len(EN_VOWEL_GROUPS.findall(letters))
    # silent final e: "the", "make"; but "table" keeps its "-ble" syllable
    if letters.endswith(u'e') and len(letters) > 1 and letters[-2] not in EN_VOWELS:
        consonant_le = letters.endswith(u'le') and len(letters) > 2 and letters[-3] not in EN_VOWELS
        if not consonant_le:
            count -= 1
    return count


def _count_spanish(letters):
    count = 0
    for group in ES_VOWEL_GROUPS.findall(letters):
        strong = sum(1 for char in group if char in ES_STRONG)
        # weak vowels glide into their strong neighbours; a weak-only group is one diphthong
        count += max(strong, 1)
    return count


def count_syllables(word, lang):
    """
    Counts the syllables of one word.

    Args:
        word(str): non-empty token
        lang(str): en or es

    Returns:
        int: syllable count, at least 1 for words with letters and 0 for tokens without any
    """
    letters = _letters(word)
    if not letters:
        return 0

    if check_language(lang) == LANG_EN:
        count = _count_english(letters)
    else:
        count = _count_spanish(letters)

    return max(count, 1)
