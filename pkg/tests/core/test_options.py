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


import os
import tempfile

from unittest import TestCase
from unittest.mock import patch

from lib.core.options import parse_options
from lib.core.settings import THREADS_ENV


CONFIG = """
[general]
threads = 6

[solver]
method = newton
restarts = 7
selection = 0,2

[output]
output-format = json
"""


class TestOptions(TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.config = os.path.join(self.directory.name, "config.ini")
        with open(self.config, "w", encoding="utf-8") as fh:
            fh.write(CONFIG)

    def tearDown(self):
        self.directory.cleanup()

    def parse(self, *args):
        return parse_options(list(args) + ["--config", self.config])

    def test_config_fills_unset_options(self):
        options = self.parse("solve", "--K", "3", "--M", "4", "--N", "4,4,4", "--d", "2")
        self.assertEqual(options["command"], "solve")
        self.assertEqual((options["M"], options["N"], options["d"]), ([4], [4, 4, 4], [2]))
        self.assertEqual(options["method"], "newton")
        self.assertEqual(options["restarts"], 7)
        self.assertEqual(options["selection"], [0, 2])
        self.assertEqual(options["output_format"], "json")
        self.assertEqual(options["attempts"], 200)
        self.assertEqual(options["max_r"], 6)
        self.assertTrue(options["color"])

    def test_arguments_win(self):
        options = self.parse("solve", "--method", "eigen", "--restarts", "9", "--no-color", "--max-r", "0")
        self.assertEqual(options["method"], "eigen")
        self.assertEqual(options["restarts"], 9)
        self.assertFalse(options["color"])
        self.assertEqual(options["max_r"], 0)

    def test_thread_cap(self):
        with patch.dict(os.environ, {THREADS_ENV: "2"}):
            self.assertEqual(self.parse("enumerate")["thread_count"], 2)
        with patch.dict(os.environ, {THREADS_ENV: ""}):
            self.assertEqual(self.parse("enumerate", "-t", "3")["thread_count"], 3)

    def test_output_paths_are_absolute(self):
        options = self.parse("count", "-o", "reports/out.json")
        self.assertTrue(os.path.isabs(options["output_file"]))

    def test_rejected(self):
        for args in (
            ("bogus",),
            (),
            ("solve", "--K", "0"),
            ("solve", "--M", "2,x"),
            ("solve", "--max-r", "-1"),
            ("solve", "--method", "magic"),
            ("verify", "--channels", os.path.join(self.directory.name, "missing.json")),
        ):
            with self.assertRaises(SystemExit, msg=f"Arguments {args}"):
                self.parse(*args)
