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


from typing import Optional

from colorama import init, Fore, Back, Style

_NAMES = ("red", "green", "yellow", "blue", "magenta", "cyan", "white")

FORE_COLORS = {name: getattr(Fore, name.upper()) for name in _NAMES}
FORE_COLORS["none"] = ""

BACK_COLORS = {name: getattr(Back, name.upper()) for name in _NAMES}
BACK_COLORS["none"] = ""

STYLES = {"bright": Style.BRIGHT, "dim": Style.DIM, "normal": ""}

# Foreground color for a result that passed, failed or is informational
OUTCOME_COLORS = {True: "green", False: "red", None: "cyan"}

init()


def disable_color() -> None:
    for table in (STYLES, FORE_COLORS, BACK_COLORS):
        for key in table:
            table[key] = ""


def set_color(msg: str, fore: str = "none", back: str = "none", style: str = "normal") -> str:
    prefix = STYLES[style] + FORE_COLORS[fore] + BACK_COLORS[back]
    if not prefix:
        return msg

    return prefix + msg + Style.RESET_ALL


def outcome_color(msg: str, outcome: Optional[bool]) -> str:
    return set_color(msg, fore=OUTCOME_COLORS[outcome], style="bright")
