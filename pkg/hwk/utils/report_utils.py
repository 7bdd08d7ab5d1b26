"""
CSV, TSV and text report writers.
"""

import io
import logging

import pandas as pd

FLOAT_FORMAT = '%.6f'


def to_frame(rows, columns):
    """
    Args:
        rows(list): dict rows
        columns(iterable): column order

    Returns:
        pandas.DataFrame: the table, with the given columns even when there are no rows
    """
    return pd.DataFrame(list(rows), columns=list(columns))


def write_csv(rows, columns, path, sep=','):
    """
    Writes dict rows (or a DataFrame) with fixed float formatting, so identical inputs give identical bytes.

    Args:
        rows(list|pandas.DataFrame): the rows
        columns(iterable): column order
        path(str): output file
        sep(str): field separator
    """
    frame = rows if isinstance(rows, pd.DataFrame) else to_frame(rows, columns)
    frame.to_csv(path, sep=sep, index=False, columns=list(columns), float_format=FLOAT_FORMAT,
                 lineterminator='\n', encoding='utf-8')
    logging.info("Wrote {} rows to {}".format(len(frame), path))


def read_csv(path, sep=','):
    return pd.read_csv(path, sep=sep, encoding='utf-8', keep_default_na=False)


def write_text(text, path):
    with io.open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(text)
