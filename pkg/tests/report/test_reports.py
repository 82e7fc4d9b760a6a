# -*- coding: utf-8 -*-
#  This program is free software; you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation; either version 2 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with this program; if not, write to the Free Software
#  Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston,
#  MA 02110-1301, USA.


import json
import os
import tempfile

from unittest import TestCase

from lib.core.exceptions import FileExistsException
from lib.core.settings import START_DATETIME
from lib.report.manager import ReportManager, report_format
from lib.report.summary import outcome, summarize
from lib.verify.report import VerificationReport


COUNT_RESULT = {
    "K": 3,
    "d": 2,
    "N": 4,
    "count": 6,
    "factorization": {"2": 1, "3": 1},
    "term_counts": [6, 14, 9, 4, 2, 1],
}


def cell(M, N, feasible, label):
    return {"M": M, "N": N, "feasible": feasible, "label": label}


class TestSummary(TestCase):
    def test_count(self):
        self.assertEqual(
            summarize("count", COUNT_RESULT),
            ["K=3 d=2 N=4: 6 solutions", "  = 2 * 3", "  peak terms 14"],
        )

    def test_region_map(self):
        result = {
            "d": 1,
            "max_M": 2,
            "max_N": 2,
            "cells": [
                [cell(1, 1, False, "inf"), cell(1, 2, True, 1)],
                [cell(2, 1, True, 12), cell(2, 2, True, "inf")],
            ],
        }
        lines = summarize("region-map", result)
        self.assertEqual(lines[0], "d=1, rows M=1..2, columns N=1..2")
        self.assertEqual(lines[2], "    1    .   1")
        self.assertEqual(lines[3], "    2    +   +")

    def test_verify_names_worst_pair(self):
        report = VerificationReport(3e-4, {(1, 2): 3e-4, (2, 1): 1e-15}, None, True, 1e-8)
        lines = summarize("verify", {"verification": report.to_dict(), "overlaps": None})
        self.assertEqual(lines[0], "Verification: FAILED")
        self.assertEqual(lines[-1], "  worst pair 1,2: residual 3.000e-04")

        passed = VerificationReport(1e-12, {(1, 2): 1e-12}, None, True, 1e-8)
        lines = summarize("verify", {"verification": passed.to_dict(), "overlaps": None})
        self.assertFalse(any("worst pair" in line for line in lines))

    def test_outcome(self):
        verdict = {"status": "Feasible", "dimension": 0, "certificates": []}
        self.assertTrue(outcome("feasibility", {"verdict": verdict}))
        self.assertIsNone(outcome("feasibility", {"verdict": {**verdict, "status": "Unknown"}}))
        self.assertFalse(outcome("verify", {"verification": {"passed": False}}))
        self.assertIsNone(outcome("count", COUNT_RESULT))


class TestReportManager(TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.directory.cleanup()

    def path(self, name):
        return os.path.join(self.directory.name, name)

    def test_no_output(self):
        self.assertIsNone(ReportManager("plain", None).save("count", COUNT_RESULT))

    def test_format(self):
        manager = ReportManager("json", self.path("{command}-{date}.{extension}"))
        path = manager.save("count", COUNT_RESULT)
        self.assertEqual(path, self.path(f"count-{START_DATETIME}.json"))

    def test_json(self):
        path = ReportManager("json", self.path("reports/count.json")).save("count", COUNT_RESULT)
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)

        self.assertEqual(data["count"], 6)
        self.assertEqual(data["info"]["command"], "count")
        self.assertIn("version", data["info"])

    def test_plain(self):
        path = ReportManager("plain", self.path("count.txt")).save("count", COUNT_RESULT)
        with open(path, encoding="utf-8") as fh:
            content = fh.read()

        self.assertTrue(content.startswith("# ia started"))
        self.assertIn("K=3 d=2 N=4: 6 solutions", content)

    def test_refuses_foreign_file(self):
        path = self.path("notes.json")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("not a report")

        with self.assertRaises(FileExistsException):
            ReportManager("json", path).save("count", COUNT_RESULT)

    def test_overwrites_own_report(self):
        manager = ReportManager("json", self.path("count.json"))
        manager.save("count", COUNT_RESULT)
        path = manager.save("count", {**COUNT_RESULT, "count": 7})
        with open(path, encoding="utf-8") as fh:
            self.assertEqual(json.load(fh)["count"], 7)

    def test_format_from_extension(self):
        self.assertEqual(report_format(None, "out/channels.json"), "json")
        self.assertEqual(report_format(None, "out/CHANNELS.JSON"), "json")
        self.assertEqual(report_format(None, "out/count.txt"), "plain")
        self.assertEqual(report_format(None, "out/{command}"), "plain")
        self.assertEqual(report_format("plain", "out/channels.json"), "plain")

        path = ReportManager(None, self.path("channels.json")).save("count", COUNT_RESULT)
        with open(path, encoding="utf-8") as fh:
            self.assertEqual(json.load(fh)["count"], 6)
