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


from __future__ import annotations

import os
from typing import Any, Optional

from lib.core.settings import START_DATETIME
from lib.report.json_report import JSONReport
from lib.report.plain_text_report import PlainTextReport


output_handlers = {
    "plain": PlainTextReport,
    "json": JSONReport,
}


def report_format(format: Optional[str], output_file: str) -> str:
    """The requested format, else the one matching the file extension, else plain"""
    if format:
        return format

    extension = os.path.splitext(output_file)[1].lstrip(".").lower()
    for name, handler in output_handlers.items():
        if handler.__extension__ == extension:
            return name

    return "plain"


class ReportManager:
    def __init__(self, format: Optional[str], output_file: Optional[str]) -> None:
        self.report = output_handlers[report_format(format, output_file)]() if output_file else None
        self.output_file = output_file

    def save(self, command: str, result: dict[str, Any]) -> Optional[str]:
        """Write the result, returning the path written to"""
        if self.report is None:
            return None

        path = self.format(self.output_file, command)
        self.report.initiate(path)
        self.report.save(path, command, result)
        return path

    def format(self, string: str, command: str) -> str:
        return string.format(
            date=START_DATETIME,
            command=command,
            format=self.report.__format__,
            extension=self.report.__extension__,
        )
