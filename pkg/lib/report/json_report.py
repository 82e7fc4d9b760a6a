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

from lib.core.settings import COMMAND, START_TIME, VERSION
from lib.parse.channels import jsonable
from lib.report.factory import BaseReport, FileReportMixin


class JSONReport(FileReportMixin, BaseReport):
    """
    The result dict itself plus an "info" entry, so channel and strategy
    outputs load back with --channels and --strategy
    """

    __format__ = "json"
    __extension__ = "json"

    def new(self):
        return {"info": {"args": COMMAND, "time": START_TIME, "version": VERSION}}

    def parse(self, file):
        with open(file, encoding="utf-8") as fh:
            data = json.load(fh)

        if not isinstance(data, dict):
            raise ValueError(f"{file} does not hold a JSON object")

        return data

    def save(self, file, command, result):
        data = self.parse(file)
        data.update(jsonable(result))
        data["info"]["command"] = command
        self.write(file, data)

    def write(self, file, data):
        with open(file, "w", encoding="utf-8") as fh:
            json.dump(data, fh, sort_keys=True, indent=4)
