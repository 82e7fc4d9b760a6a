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


import io
import json
import os
import tempfile

from contextlib import redirect_stderr, redirect_stdout
from unittest import TestCase
from unittest.mock import patch

from lib.controller.controller import Controller
from lib.core.data import options


class TestController(TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.directory.cleanup()

    def path(self, name):
        return os.path.join(self.directory.name, name)

    def run_command(self, **overrides):
        stdout = io.StringIO()
        with patch.dict(options, overrides), redirect_stdout(stdout), redirect_stderr(io.StringIO()):
            controller = Controller()

        return controller.exit_code, stdout.getvalue()

    def test_round_trip(self):
        problem = {"K": 3, "M": [4], "N": [4], "d": [2], "seed": 7}
        self.run_command(command="gen-channels", output_file=self.path("channels.json"), **problem)

        channels = self.path("channels.json")
        code, _ = self.run_command(
            command="solve", channels_file=channels, output_file=self.path("strategy.json"), seed=7
        )
        self.assertEqual(code, 0)

        code, _ = self.run_command(command="verify", channels_file=channels, strategy_file=self.path("strategy.json"))
        self.assertEqual(code, 0)

    def test_json_output(self):
        code, output = self.run_command(command="count", K=3, d=[2], N=[4], json=True)
        self.assertEqual(code, 0)

        result = json.loads(output[output.index("{"):])
        self.assertEqual(result["count"], 6)

    def test_dof(self):
        _, output = self.run_command(command="dof", K=5, N=[3], color=False)
        self.assertIn("total 5", output)

    def test_domain_error_exits(self):
        with self.assertRaises(SystemExit) as context:
            self.run_command(command="witness", K=2, d=[1], N=[2])

        self.assertEqual(context.exception.code, 1)

    def test_failed_verification(self):
        problem = {"K": 3, "M": [2], "N": [2], "d": [1]}
        self.run_command(command="gen-channels", seed=1, output_file=self.path("a.json"), **problem)
        self.run_command(command="gen-channels", seed=2, output_file=self.path("b.json"), **problem)
        self.run_command(command="solve", channels_file=self.path("a.json"), output_file=self.path("s.json"), seed=1)

        code, output = self.run_command(command="verify", channels_file=self.path("b.json"), strategy_file=self.path("s.json"))
        self.assertEqual(code, 1)
        self.assertIn("worst pair", output)
