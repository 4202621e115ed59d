# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Dataset CSV files.

No header. Each line is ``label,f1,f2,...,fd`` with a non-negative integer
label and decimal features. Cells may be double-quoted. LF and CRLF line
endings are accepted.
"""

__all__ = [
    'load_dataset', 'save_dataset', 'DatasetParseError', 'RaggedRowError',
    'NonNumericCellError', 'NegativeLabelError'
]

from csv import Error as CsvError, reader, writer

from io import open

from math import isinf, isnan

import numpy as np

from .core import LabeledDataset


class DatasetParseError(ValueError):
    """Dataset file error.

    :ivar int line: one-based line number, None for whole-file errors.
    """

    def __init__(self, msg, line=None):

        if line is not None:
            msg = 'line {0}: {1}'.format(line, msg)

        super(DatasetParseError, self).__init__(msg)

        self.line = line


class RaggedRowError(DatasetParseError):
    """A row has another feature count than the first one."""


class NonNumericCellError(DatasetParseError):
    """A cell is not a number (or a label is not an integer)."""


class NegativeLabelError(DatasetParseError):
    """A label is negative."""


def _parselabel(cell, lineno):

    try:
        label = int(cell)

    except ValueError:
        raise NonNumericCellError(
            'label {0!r} is not an integer.'.format(cell), lineno
        )

    if label < 0:
        raise NegativeLabelError('negative label {0}.'.format(label), lineno)

    return label


def _parsefeature(cell, lineno):

    try:
        value = float(cell)

    except ValueError:
        raise NonNumericCellError(
            'cell {0!r} is not a number.'.format(cell), lineno
        )

    if isnan(value) or isinf(value):
        raise NonNumericCellError(
            'cell {0!r} is not finite.'.format(cell), lineno
        )

    return value


def _rows(rowreader, path):

    try:
        for cells in rowreader:
            yield cells

    except CsvError as ex:
        raise DatasetParseError(
            '{0}: {1}'.format(path, ex), rowreader.line_num
        )


def load_dataset(path, num_classes=None):
    """Read a dataset file, row order preserved.

    :param str path: CSV file path.
    :param int num_classes: K. Default is max label + 1.
    :rtype: LabeledDataset
    :raises: DatasetParseError or one of its subclasses.
    """

    labels, rows = [], []
    dim = None

    with open(path, 'r', encoding='utf-8', newline='') as handle:

        rowreader = reader(handle, strict=True)

        for cells in _rows(rowreader, path):

            lineno = rowreader.line_num
            cells = [cell.strip() for cell in cells]

            if len(cells) <= 1 and not any(cells):
                continue

            if dim is None:
                dim = len(cells) - 1

                if dim < 1:
                    raise RaggedRowError('no feature.', lineno)

            elif len(cells) - 1 != dim:
                raise RaggedRowError(
                    '{0} features instead of {1}.'.format(len(cells) - 1, dim),
                    lineno
                )

            labels.append(_parselabel(cells[0], lineno))
            rows.append([_parsefeature(cell, lineno) for cell in cells[1:]])

    if not rows:
        raise DatasetParseError('{0}: no samples.'.format(path))

    try:
        return LabeledDataset(
            np.array(rows), np.array(labels), num_classes=num_classes
        )

    except LabeledDataset.Error as ex:
        raise DatasetParseError('{0}: {1}'.format(path, ex))


def save_dataset(ds, path):
    """Write ds with exact float representation.

    :param LabeledDataset ds: dataset to write.
    :param str path: file path.
    """

    with open(path, 'w', encoding='utf-8', newline='') as handle:

        rowwriter = writer(handle, lineterminator='\n')

        for label, row in zip(ds.labels, ds.features):
            rowwriter.writerow(
                [int(label)] + [repr(float(value)) for value in row]
            )
