"""
Word ids for the recurrent model: 0 pads, 1 stands for unknown tokens, and the training tokens follow by
descending frequency (ties alphabetical).
"""

import io
from collections import Counter

import numpy as np

from hwk.utils.errors import EmptyVocabulary, ModelFormatError

PAD_ID = 0
UNKNOWN_ID = 1
RESERVED = (u'<pad>', u'<unk>')
FORMAT_NAME = 'hwk-word-vocabulary'


class WordVocabulary(object):
    def __init__(self, terms):
        self.terms = list(RESERVED) + [t for t in terms if t not in RESERVED]
        self.ids = dict((term, position) for position, term in enumerate(self.terms))

    def __len__(self):
        return len(self.terms)

    def id(self, token):
        return self.ids.get(token, UNKNOWN_ID)

    def encode(self, tokens, seq_len):
        """
        Pre-padded ids of the last seq_len tokens.

        Args:
            tokens(list): tokens of one tweet
            seq_len(int): output length

        Returns:
            np.ndarray: seq_len ids
        """
        ids = [self.id(token) for token in tokens][-seq_len:] if seq_len else []
        row = np.full(seq_len, PAD_ID, dtype=np.int64)
        if ids:
            row[seq_len - len(ids):] = ids
        return row

    def encode_batch(self, token_lists, seq_len):
        if not token_lists:
            return np.zeros((0, seq_len), dtype=np.int64)
        return np.stack([self.encode(tokens, seq_len) for tokens in token_lists])

    def save(self, path):
        with io.open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(u'{}\t1\n'.format(FORMAT_NAME))
            for term in self.terms[len(RESERVED):]:
                f.write(u'{}\n'.format(term))

    @classmethod
    def load(cls, path):
        with io.open(path, 'r', encoding='utf-8') as f:
            lines = f.read().splitlines()
        if not lines or lines[0].split(u'\t')[0] != FORMAT_NAME:
            raise ModelFormatError("Not a word vocabulary file", path=path, line=1)
        return cls(lines[1:])


def build_word_vocabulary(token_lists, max_size=None, min_count=1):
    """
    Ranks training tokens by frequency.

    Args:
        token_lists(list): token lists of the training tweets
        max_size(int): total size including the two reserved ids, None for no limit
        min_count(int): smallest kept frequency

    Returns:
        WordVocabulary: the vocabulary
    """
    counts = Counter(token for tokens in token_lists for token in tokens)
    ranked = sorted((term for term, count in counts.items() if count >= min_count), key=lambda t: (-counts[t], t))
    if max_size is not None:
        ranked = ranked[:max(0, max_size - len(RESERVED))]
    if not ranked:
        raise EmptyVocabulary("No training token reaches min_count={}".format(min_count))
    return WordVocabulary(ranked)
