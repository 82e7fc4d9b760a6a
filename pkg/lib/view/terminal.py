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


import sys
from typing import Any, Optional

from lib.core.data import options
from lib.core.decorators import locked
from lib.core.settings import BANNER
from lib.parse.channels import dumps
from lib.report.summary import outcome, summarize
from lib.view.colors import disable_color, outcome_color, set_color


class CLI:
    def __init__(self) -> None:
        if not options["color"]:
            disable_color()

    @locked
    def new_line(self, string: str = "") -> None:
        sys.stdout.write(string + "\n")
        sys.stdout.flush()

    def banner(self) -> None:
        self.new_line(set_color(BANNER, fore="cyan", style="bright"))

    def result(self, command: str, result: dict[str, Any]) -> None:
        lines = summarize(command, result)
        self.new_line(outcome_color(lines[0], outcome(command, result)))
        for line in lines[1:]:
            self.new_line(line)

    def json(self, result: dict[str, Any]) -> None:
        self.new_line(dumps(result))

    def error(self, reason: str) -> None:
        message = set_color(reason, fore="white", back="red", style="bright")
        sys.stderr.write("\n" + message + "\n")
        sys.stderr.flush()

    def warning(self, message: str) -> None:
        self.new_line(set_color(message, fore="yellow", style="bright"))

    def output_file(self, path: Optional[str]) -> None:
        if path:
            self.new_line(f"\nOutput File: {path}")

    def log_file(self, path: str) -> None:
        self.new_line(f"\nLog File: {path}")


class QuietCLI(CLI):
    def banner(*args):
        pass

    def warning(*args, **kwargs):
        pass

    def output_file(*args):
        pass

    def log_file(*args):
        pass


class JSONCLI(QuietCLI):
    """Nothing but the JSON document on stdout, so it can be piped"""

    def result(*args):
        pass


interface = JSONCLI() if options["json"] else QuietCLI() if options["quiet"] else CLI()
