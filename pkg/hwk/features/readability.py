"""
Flesch Reading Ease and Flesch-Kincaid Grade Level.
"""

from hwk.utils.errors import DegenerateText

FRE_BASE = 206.835
FRE_SENTENCE_WEIGHT = 1.015
FRE_SYLLABLE_WEIGHT = 84.6

FKGL_SENTENCE_WEIGHT = 0.39
FKGL_SYLLABLE_WEIGHT = 11.8
FKGL_OFFSET = 15.59


def readability(stats):
    """
    Computes both readability scores from surface statistics.

    Args:
        stats(SurfaceStats): counts of the text

    Returns:
        (float, float): Flesch Reading Ease, Flesch-Kincaid Grade Level
    """
    if stats.word_count < 1 or stats.sentence_count < 1:
        raise DegenerateText("Readability needs at least one word and one sentence, got {} and {}".format(
            stats.word_count, stats.sentence_count
        ))

    words_per_sentence = float(stats.word_count) / stats.sentence_count
    syllables_per_word = float(stats.syllable_count) / stats.word_count

    fre = FRE_BASE - FRE_SENTENCE_WEIGHT * words_per_sentence - FRE_SYLLABLE_WEIGHT * syllables_per_word
    fkgl = FKGL_SENTENCE_WEIGHT * words_per_sentence + FKGL_SYLLABLE_WEIGHT * syllables_per_word - FKGL_OFFSET

    return fre, fkgl
