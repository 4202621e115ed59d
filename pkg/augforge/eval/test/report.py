# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""eval.report UTs."""

from unittest import main

from b3j0f.utils.ut import UTCase

from io import open

from os import remove

from tempfile import NamedTemporaryFile

from ..core import EvalReport
from ..report import ReportRow, write_report, write_sweep
from ..sweep import SweepRecord, SweepResult


class ReportTest(UTCase):

    def setUp(self):

        with NamedTemporaryFile(suffix='.csv', delete=False) as handle:
            self.path = handle.name

    def tearDown(self):

        remove(self.path)

    def _read(self):

        with open(self.path, encoding='utf-8', newline='') as handle:
            return handle.read()

    def test_report(self):

        rows = [
            ReportRow('chance', 'test', EvalReport(0.5, 10, 5, 0.5, False)),
            ReportRow('b+f', 'test', EvalReport(0.9, 10, 9, 0.25, True))
        ]

        write_report(rows, self.path)

        self.assertEqual(
            self._read(),
            'classifier,dataset,n,accuracy,p_value,significant\n'
            'chance,test,10,0.5,0.5,false\n'
            'b+f,test,10,0.9,0.25,true\n'
        )

    def test_missing_p_value(self):

        write_report(
            [ReportRow('b', 'fake', EvalReport(1., 2, 2, None, False))],
            self.path
        )

        self.assertEqual(self._read().splitlines()[1], 'b,fake,2,1.0,,false')

    def test_sweep(self):

        result = SweepResult([
            SweepRecord(500, 0.75, 0.5, 0.8), SweepRecord(1000, 0.875, 0.625, 0.9)
        ])

        write_sweep(result, self.path)

        self.assertEqual(
            self._read(),
            'N,acc_fake_as_test,acc_fake_as_train\n'
            '500,0.75,0.5\n'
            '1000,0.875,0.625\n'
        )

    def test_empty(self):

        write_sweep(SweepResult([]), self.path)

        self.assertEqual(self._read(), 'N,acc_fake_as_test,acc_fake_as_train\n')


if __name__ == '__main__':
    main()
