# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""Report and sweep CSV files."""

__all__ = [
    'ReportRow', 'write_report', 'write_sweep', 'REPORT_HEADER', 'SWEEP_HEADER'
]

from collections import namedtuple

from csv import writer

from io import open

#: one classifier (or ensemble) scored on one dataset.
ReportRow = namedtuple('ReportRow', ['classifier', 'dataset', 'report'])

REPORT_HEADER = (
    'classifier', 'dataset', 'n', 'accuracy', 'p_value', 'significant'
)

SWEEP_HEADER = ('N', 'acc_fake_as_test', 'acc_fake_as_train')


def _writer(handle):

    return writer(handle, lineterminator='\n')


def write_report(rows, path):
    """Write ReportRows as CSV with REPORT_HEADER."""

    with open(path, 'w', encoding='utf-8', newline='') as handle:

        csv = _writer(handle)
        csv.writerow(REPORT_HEADER)

        for row in rows:
            report = row.report
            csv.writerow([
                row.classifier, row.dataset, report.n, repr(report.accuracy),
                '' if report.p_value_vs_chance is None
                else repr(report.p_value_vs_chance),
                'true' if report.significant_at_5pct else 'false'
            ])


def write_sweep(result, path):
    """Write a SweepResult as CSV with SWEEP_HEADER."""

    with open(path, 'w', encoding='utf-8', newline='') as handle:

        csv = _writer(handle)
        csv.writerow(SWEEP_HEADER)

        for record in result:
            csv.writerow([
                record.n, repr(record.acc_fake_as_test),
                repr(record.acc_fake_as_train)
            ])
