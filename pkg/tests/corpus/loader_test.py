"""
Tests for reading and writing tweet TSV files.
"""

import io
import os
import shutil
import tempfile
import unittest

from hwk.corpus.loader import (
    concat_datasets,
    load_dataset,
    read_predictions,
    write_dataset,
    write_predictions
)
from hwk.data_models import LabelSet
from hwk.utils.errors import (
    BadLabelValue,
    DuplicateId,
    EncodingError,
    MalformedRow,
    MissingColumn,
    UnsupportedLanguage
)


class LoaderTestCase(unittest.TestCase):
    """
    Tests for load_dataset, write_dataset and the prediction files.
    """

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def write(self, content, name='data.tsv', raw=False):
        path = os.path.join(self.directory, name)
        with io.open(path, 'wb') as f:
            f.write(content if raw else content.encode('utf-8'))
        return path

    def test_load_full_labels(self):
        """
        Verifies that a file with HS, TR and AG loads every row in file order with complete label sets.
        """
        path = self.write(u'id\ttext\tHS\tTR\tAG\n1\tfirst tweet\t1\t0\t1\n2\tsecond tweet\t0\t0\t0\n')
        ds = load_dataset(path, 'EN', 'train')

        self.assertEqual(len(ds), 2)
        self.assertEqual(ds.lang, 'en')
        self.assertEqual(ds.ids, ['1', '2'])
        self.assertEqual(ds[0].labels, LabelSet(1, 0, 1))
        self.assertEqual(ds.labels('ag'), [1, 0])

    def test_load_hs_only_and_unlabeled(self):
        """
        Verifies that HS-only files give partial label sets and files without label columns give no labels.
        """
        hs_only = load_dataset(self.write(u'id\ttext\tHS\n1\tsome text\t1\n'), 'es')
        unlabeled = load_dataset(self.write(u'text\tid\nsome text\t9\n', name='u.tsv'), 'es')

        self.assertEqual(hs_only[0].labels, LabelSet(1, None, None))
        self.assertIsNone(unlabeled[0].labels)
        self.assertEqual(unlabeled[0].id, '9')
        self.assertFalse(unlabeled.labeled)

    def test_hateful_invariant_rejected_or_coerced(self):
        """
        Verifies that HS=0 rows with TR or AG set are rejected with their line number, unless coerced.
        """
        path = self.write(u'id\ttext\tHS\tTR\tAG\n1\tok tweet\t1\t1\t1\n2\tbad row\t0\t1\t0\n')

        with self.assertRaises(BadLabelValue) as context:
            load_dataset(path, 'en')
        self.assertEqual(context.exception.line, 3)
        self.assertEqual(context.exception.path, path)

        coerced = load_dataset(path, 'en', coerce_labels=True)
        self.assertEqual(coerced[1].labels, LabelSet(0, 0, 0))

    def test_row_errors(self):
        """
        Verifies the errors for bad label values, short rows, duplicate ids and carriage returns.
        """
        cases = [
            (u'id\ttext\tHS\n1\ttweet\t2\n', BadLabelValue),
            (u'id\ttext\tHS\n1\ttweet\n', MalformedRow),
            (u'id\ttext\tHS\n1\ttweet\t1\n1\tagain\t0\n', DuplicateId),
            (u'id\ttext\tHS\n1\ttwe\ret\t1\n', MalformedRow),
            (u'id\ttext\tHS\n1\t   \t1\n', MalformedRow)
        ]
        for content, error in cases:
            with self.assertRaises(error):
                load_dataset(self.write(content), 'en')

    def test_header_errors(self):
        """
        Verifies that missing id/text columns, TR/AG without HS and empty files raise MissingColumn.
        """
        for content in (u'id\tHS\n1\t1\n', u'id\ttext\tTR\tAG\n1\tt\t0\t0\n', u'id\ttext\tHS\tTR\n1\tt\t0\t0\n', u''):
            with self.assertRaises(MissingColumn):
                load_dataset(self.write(content), 'en')

    def test_invalid_utf8(self):
        """
        Verifies that undecodable bytes raise EncodingError pointing at the line.
        """
        path = self.write(b'id\ttext\n1\t\xff\xfe\n', raw=True)

        with self.assertRaises(EncodingError) as context:
            load_dataset(path, 'en')
        self.assertEqual(context.exception.line, 2)

    def test_unsupported_language(self):
        """
        Verifies that only English and Spanish are accepted.
        """
        with self.assertRaises(UnsupportedLanguage):
            load_dataset(self.write(u'id\ttext\n1\thola\n'), 'fr')

    def test_write_then_load(self):
        """
        Verifies that a written dataset loads back to the same tweets.
        """
        ds = load_dataset(self.write(u'id\ttext\tHS\tTR\tAG\n1\tone\t1\t1\t0\n2\ttwo\t0\t0\t0\n'), 'en', 'train')
        out = os.path.join(self.directory, 'out.tsv')
        write_dataset(ds, out)

        self.assertEqual(list(load_dataset(out, 'en', 'train')), list(ds))

    def test_concat_datasets(self):
        """
        Verifies that joining keeps the order and rejects ids present in both datasets.
        """
        train = load_dataset(self.write(u'id\ttext\tHS\n1\ta\t0\n2\tb\t1\n'), 'en', 'train')
        dev = load_dataset(self.write(u'id\ttext\tHS\n3\tc\t1\n', name='dev.tsv'), 'en', 'dev')
        clash = load_dataset(self.write(u'id\ttext\tHS\n2\td\t1\n', name='clash.tsv'), 'en', 'clash')

        self.assertEqual(concat_datasets(train, dev, 'all').ids, ['1', '2', '3'])
        with self.assertRaises(DuplicateId):
            concat_datasets(train, clash, 'all')

    def test_prediction_files(self):
        """
        Verifies that predictions are written as id, HS, TR, AG with missing TR/AG as 0 and read back by id.
        """
        path = os.path.join(self.directory, 'pred.tsv')
        write_predictions(['a', 'b'], [LabelSet(1, 1, 0), LabelSet(0, None, None)], path)

        with io.open(path, 'r', encoding='utf-8') as f:
            self.assertEqual(f.read(), u'id\tHS\tTR\tAG\na\t1\t1\t0\nb\t0\t0\t0\n')

        predictions = read_predictions(path)
        self.assertEqual(list(predictions), ['a', 'b'])
        self.assertEqual(predictions['b'], LabelSet(0, 0, 0))

    def test_prediction_file_needs_hs(self):
        """
        Verifies that a prediction file without an HS column is refused.
        """
        with self.assertRaises(MissingColumn):
            read_predictions(self.write(u'id\tTR\n1\t0\n'))
