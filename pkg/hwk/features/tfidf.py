"""
N-gram TF-IDF features. TF is the n-gram count over the number of n-grams in the document and
IDF(t) = ln(N / df(t)), without smoothing.
"""

import hashlib
import io
import logging

import numpy as np
import scipy.sparse as sp
from sklearn.feature_extraction.text import CountVectorizer

from hwk.utils.errors import EmptyCorpus, EmptyVocabulary, FeatureError, ModelFormatError

FORMAT_NAME = 'hwk-vocabulary'
FORMAT_VERSION = 1
MAX_N = 5


def iter_ngrams(tokens, n_range):
    """
    Yields every n-gram of the token list for n in n_range, tokens joined by single spaces.
    """
    min_n, max_n = n_range
    for n in range(min_n, max_n + 1):
        for start in range(len(tokens) - n + 1):
            yield u' '.join(tokens[start:start + n])


def ngram_total(length, n_range):
    """
    Returns:
        int: number of n-grams (n in n_range) in a document of the given token length
    """
    min_n, max_n = n_range
    return sum(max(0, length - n + 1) for n in range(min_n, max_n + 1))


def _check_range(n_range):
    min_n, max_n = n_range
    if not 1 <= min_n <= max_n <= MAX_N:
        raise FeatureError("n_range must satisfy 1 <= min_n <= max_n <= {}, got {}".format(MAX_N, n_range))
    return int(min_n), int(max_n)


def _token_lists(corpus):
    return [list(doc.tokens) if hasattr(doc, 'tokens') else list(doc) for doc in corpus]


class SparseVector(object):
    """
    Non-zero (index, value) pairs sorted by index over a space of fixed dimension.
    """
    def __init__(self, indices, values, dimension):
        self.indices = np.asarray(indices, dtype=np.int64)
        self.values = np.asarray(values, dtype=np.float64)
        self.dimension = dimension

    @classmethod
    def from_csr_row(cls, matrix, row=0):
        start, end = matrix.indptr[row], matrix.indptr[row + 1]
        indices = matrix.indices[start:end]
        values = matrix.data[start:end]
        order = np.argsort(indices, kind='stable')
        keep = values[order] != 0
        return cls(indices[order][keep], values[order][keep], matrix.shape[1])

    def __len__(self):
        return len(self.indices)

    def items(self):
        return [(int(i), float(v)) for i, v in zip(self.indices, self.values)]

    def get(self, index, default=0.0):
        position = np.searchsorted(self.indices, index)
        if position < len(self.indices) and self.indices[position] == index:
            return float(self.values[position])
        return default

    def to_dense(self):
        dense = np.zeros(self.dimension)
        dense[self.indices] = self.values
        return dense

    def to_csr(self):
        return sp.csr_matrix(
            (self.values, self.indices, np.array([0, len(self.indices)])),
            shape=(1, self.dimension)
        )


class Vocabulary(object):
    """
    Fitted n-gram vocabulary: dense column indices, per-column IDF, the n-gram range and corpus size.
    """
    def __init__(self, terms, idf, n_range, doc_count):
        self.terms = list(terms)
        self.index = dict((term, i) for i, term in enumerate(self.terms))
        self.idf = np.asarray(idf, dtype=np.float64)
        self.n_range = tuple(n_range)
        self.doc_count = doc_count

    def __len__(self):
        return len(self.terms)

    def __contains__(self, term):
        return term in self.index

    def column(self, term):
        return self.index[term]

    def serialize(self):
        """
        Returns:
            str: versioned text form, one `ngram<TAB>index<TAB>idf` line per term
        """
        lines = [
            u'{}\t{}'.format(FORMAT_NAME, FORMAT_VERSION),
            u'n_range\t{}\t{}'.format(*self.n_range),
            u'doc_count\t{}'.format(self.doc_count)
        ]
        for i, term in enumerate(self.terms):
            lines.append(u'{}\t{}\t{!r}'.format(term, i, float(self.idf[i])))
        return u'\n'.join(lines) + u'\n'

    def checksum(self):
        return hashlib.sha256(self.serialize().encode('utf-8')).hexdigest()

    def save(self, path):
        with io.open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(self.serialize())

    @classmethod
    def parse(cls, text, path=None):
        lines = text.split(u'\n')
        if lines and lines[-1] == u'':
            lines.pop()
        try:
            name, version = lines[0].split(u'\t')
            if name != FORMAT_NAME or int(version) != FORMAT_VERSION:
                raise ModelFormatError("Unsupported vocabulary format {} {}".format(name, version), path=path, line=1)
            _, min_n, max_n = lines[1].split(u'\t')
            _, doc_count = lines[2].split(u'\t')
        except (IndexError, ValueError):
            raise ModelFormatError("Truncated vocabulary header", path=path, line=1)

        terms, idf = [], []
        for number, line in enumerate(lines[3:], 4):
            try:
                term, index, value = line.split(u'\t')
                if int(index) != len(terms):
                    raise ValueError("index out of order")
                terms.append(term)
                idf.append(float(value))
            except ValueError as e:
                raise ModelFormatError("Bad vocabulary entry ({})".format(e), path=path, line=number)

        return cls(terms, idf, (int(min_n), int(max_n)), int(doc_count))

    @classmethod
    def load(cls, path):
        with io.open(path, 'r', encoding='utf-8', newline='\n') as f:
            return cls.parse(f.read(), path=path)


def _vectorizer(n_range, **kwargs):
    return CountVectorizer(
        analyzer=lambda tokens: list(iter_ngrams(tokens, n_range)),
        **kwargs
    )


def fit_tfidf(corpus, n_range=(1, 3), min_df=2):
    """
    Fits the n-gram vocabulary and IDF weights on a training corpus.

    Args:
        corpus(list): TokenSequence records (or plain token lists)
        n_range(tuple): smallest and largest n
        min_df(int): minimum number of documents a kept n-gram must occur in

    Returns:
        Vocabulary: every n-gram reaching min_df, with its IDF
    """
    if not corpus:
        raise EmptyCorpus("Cannot fit TF-IDF on an empty corpus")
    n_range = _check_range(n_range)
    docs = _token_lists(corpus)

    if min_df > len(docs):
        raise EmptyVocabulary("min_df={} exceeds the {} documents of the corpus".format(min_df, len(docs)))

    vectorizer = _vectorizer(n_range, min_df=min_df)
    try:
        counts = vectorizer.fit_transform(docs).tocsr()
    except ValueError as e:
        raise EmptyVocabulary("No n-gram reaches min_df={} ({})".format(min_df, e))

    df = np.bincount(counts.indices, minlength=counts.shape[1])
    idf = np.log(float(len(docs)) / df)
    terms = vectorizer.get_feature_names_out()

    logging.info("Fitted vocabulary with {} n-grams over {} documents".format(len(terms), len(docs)))

    return Vocabulary(terms, idf, n_range, len(docs))


def transform_corpus(corpus, vocab):
    """
    TF-IDF rows for many documents.

    Args:
        corpus(list): TokenSequence records (or plain token lists)
        vocab(Vocabulary): fitted vocabulary

    Returns:
        scipy.sparse.csr_matrix: documents x |vocab|
    """
    docs = _token_lists(corpus)
    if not docs:
        return sp.csr_matrix((0, len(vocab)))

    counts = _vectorizer(vocab.n_range, vocabulary=vocab.index).transform(docs).tocsr()
    counts.sort_indices()

    totals = np.array([ngram_total(len(doc), vocab.n_range) for doc in docs], dtype=np.float64)
    rows = np.repeat(np.arange(len(docs)), np.diff(counts.indptr))
    data = (counts.data.astype(np.float64) / totals[rows]) * vocab.idf[counts.indices]

    matrix = sp.csr_matrix((data, counts.indices, counts.indptr), shape=counts.shape)
    matrix.eliminate_zeros()

    return matrix


def transform_tfidf(doc, vocab):
    """
    TF-IDF vector of one document; out-of-vocabulary n-grams are ignored.

    Args:
        doc(TokenSequence): document
        vocab(Vocabulary): fitted vocabulary

    Returns:
        SparseVector: non-zero TF-IDF values by column
    """
    return SparseVector.from_csr_row(transform_corpus([doc], vocab))
