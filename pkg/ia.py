#!/usr/bin/env python3
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

if sys.version_info < (3, 9):
    sys.stderr.write("Sorry, ia requires Python 3.9 or higher\n")
    sys.exit(1)

from lib.core.data import options  # noqa: E402


def main():
    from lib.core.options import parse_options

    options.update(parse_options())

    # The terminal view reads the merged options on import
    from lib.controller.controller import Controller

    sys.exit(Controller().exit_code)


if __name__ == "__main__":
    try:
        main()
    except KeyboardInterrupt:
        pass
