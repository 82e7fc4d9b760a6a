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


from lib.core.settings import (
    COMMAND,
    NEW_LINE,
    START_TIME,
)
from lib.report.factory import BaseReport, FileReportMixin
from lib.report.summary import summarize


class PlainTextReport(FileReportMixin, BaseReport):
    __format__ = "plain"
    __extension__ = "txt"

    def new(self):
        return f"# ia started {START_TIME} as: {COMMAND}" + NEW_LINE * 2

    def save(self, file, command, result):
        data = self.parse(file)
        data += NEW_LINE.join(summarize(command, result)) + NEW_LINE
        self.write(file, data)
