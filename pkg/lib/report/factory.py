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


from abc import ABC, abstractmethod

from lib.core.exceptions import FileExistsException
from lib.utils.file import FileUtils


class BaseReport(ABC):
    @abstractmethod
    def initiate(self, file):
        raise NotImplementedError

    @abstractmethod
    def save(self, file, command, result):
        raise NotImplementedError


class FileReportMixin:
    def initiate(self, file):
        FileUtils.create_dir(FileUtils.parent(file))
        if FileUtils.exists(file) and FileUtils.read(file).strip():
            self.validate(file)

        self.write(file, self.new())

    def validate(self, file):
        # Only overwrite files that this report format could have written
        try:
            self.parse(file)
        except Exception:
            raise FileExistsException(f"Output file {file} already exists")

    def parse(self, file):
        return FileUtils.read(file)

    def write(self, file, data):
        FileUtils.write(file, data)
