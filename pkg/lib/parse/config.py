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

import configparser
from typing import Optional


class ConfigParser(configparser.ConfigParser):
    """configparser with lookups that fall back to a default instead of raising"""

    def safe_get(
        self,
        section: str,
        option: str,
        default: Optional[str] = None,
        allowed: Optional[tuple[str, ...]] = None,
    ) -> Optional[str]:
        try:
            value = super().get(section, option)

            if allowed and value not in allowed:
                return default

            return value
        except (configparser.NoSectionError, configparser.NoOptionError):
            return default

    def safe_getfloat(
        self,
        section: str,
        option: str,
        default: Optional[float] = 0.0,
    ) -> Optional[float]:
        try:
            return super().getfloat(section, option)
        except (configparser.NoSectionError, configparser.NoOptionError, ValueError):
            return default

    def safe_getboolean(
        self,
        section: str,
        option: str,
        default: bool = False,
    ) -> bool:
        try:
            return super().getboolean(section, option)
        except (configparser.NoSectionError, configparser.NoOptionError, ValueError):
            return default

    def safe_getint(
        self,
        section: str,
        option: str,
        default: Optional[int] = 0,
        allowed: Optional[tuple[int, ...]] = None,
    ) -> Optional[int]:
        try:
            value = super().getint(section, option)

            if allowed and value not in allowed:
                return default

            return value
        except (configparser.NoSectionError, configparser.NoOptionError, ValueError):
            return default

