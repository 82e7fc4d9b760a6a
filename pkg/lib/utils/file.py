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
import os.path


class File:
    def __init__(self, *path_components: str) -> None:
        self._path = FileUtils.build_path(*path_components)

    @property
    def path(self) -> str:
        return self._path

    def is_valid(self) -> bool:
        return FileUtils.is_file(self.path)

    def exists(self) -> bool:
        return FileUtils.exists(self.path)

    def can_read(self) -> bool:
        return FileUtils.can_read(self.path)

    def __enter__(self) -> File:
        return self

    def __exit__(self, type, value, tb) -> None:
        pass


class FileUtils:
    @staticmethod
    def build_path(*path_components: str) -> str:
        if path_components:
            return os.path.join(*path_components)

        return ""

    @staticmethod
    def get_abs_path(file_name: str) -> str:
        return os.path.abspath(file_name)

    @staticmethod
    def exists(file_name: str) -> bool:
        return os.access(file_name, os.F_OK)

    @staticmethod
    def can_read(file_name: str) -> bool:
        try:
            with open(file_name, encoding="utf-8"):
                pass
        except OSError:
            return False

        return True

    @classmethod
    def can_write(cls, path: str) -> bool:
        while path and not cls.exists(path):
            path = cls.parent(path)

        return os.access(path or ".", os.W_OK)

    @staticmethod
    def read(file_name: str) -> str:
        with open(file_name, encoding="utf-8") as fd:
            return fd.read()

    @staticmethod
    def write(file_name: str, content: str) -> None:
        with open(file_name, "w", encoding="utf-8") as fd:
            fd.write(content)

    @staticmethod
    def is_file(path: str) -> bool:
        return os.path.isfile(path)

    @staticmethod
    def parent(path: str, depth: int = 1) -> str:
        for _ in range(depth):
            path = os.path.dirname(path)

        return path

    @classmethod
    def create_dir(cls, directory: str) -> None:
        if directory and not cls.exists(directory):
            os.makedirs(directory, exist_ok=True)
