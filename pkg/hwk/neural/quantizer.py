"""
Backward one-hot character quantization: the last character of a text lands in column 0.
"""

import numpy as np

from hwk.utils.errors import ConfigError

ALPHABET = (
    u'abcdefghijklmnopqrstuvwxyz'
    u'0123456789'
    u'-,;.!?:\'"/\\|_@#$%^&*~`+=<>()[]{}'
    u'’'
    u'\n'
)
MAX_LEN = 140
UNKNOWN = -1


class CharQuantizer(object):
    """
    Maps characters to alphabet rows.
    """
    def __init__(self, alphabet=ALPHABET, max_len=MAX_LEN):
        if len(set(alphabet)) != len(alphabet):
            raise ConfigError("The character alphabet contains duplicates")
        if max_len <= 0:
            raise ConfigError("max_len must be positive, got {}".format(max_len))
        self.alphabet = tuple(alphabet)
        self.max_len = max_len
        self.index = dict((char, row) for row, char in enumerate(self.alphabet))

    @property
    def size(self):
        return len(self.alphabet)

    def indices(self, text):
        """
        Alphabet rows of the last max_len characters, latest first; -1 marks characters outside the
        alphabet and unused columns.

        Returns:
            np.ndarray: max_len integers
        """
        rows = np.full(self.max_len, UNKNOWN, dtype=np.int64)
        for column, char in enumerate(reversed(text.lower())):
            if column >= self.max_len:
                break
            rows[column] = self.index.get(char, UNKNOWN)
        return rows

    def encode_batch(self, texts):
        return np.stack([self.indices(text) for text in texts]) if texts else np.zeros((0, self.max_len), np.int64)

    def one_hot(self, rows):
        """
        Expands (n, max_len) row indices to (n, alphabet size, max_len) one-hot matrices.
        """
        rows = np.asarray(rows)
        matrices = np.zeros((rows.shape[0], self.size, self.max_len))
        examples, columns = np.nonzero(rows != UNKNOWN)
        matrices[examples, rows[examples, columns], columns] = 1.0
        return matrices


def quantize(text, q):
    """
    Args:
        text(str): any text
        q(CharQuantizer): the quantizer

    Returns:
        np.ndarray: alphabet size x max_len one-hot matrix
    """
    return q.one_hot(q.indices(text)[None, :])[0]
