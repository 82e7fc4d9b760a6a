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

import logging
from logging.handlers import RotatingFileHandler
from typing import Optional

from lib.core.data import options
from lib.core.settings import DEFAULT_ENCODING, LOG_BACKUPS, LOG_FORMAT


logger = logging.getLogger("ia")
logger.setLevel(logging.DEBUG)
logger.propagate = False
logger.disabled = True


def enable_logging(log_file: Optional[str] = None, max_bytes: Optional[int] = None) -> None:
    """Send every record to a rotating file, replacing any earlier handler"""
    disable_logging()
    logger.disabled = False

    handler = RotatingFileHandler(
        log_file or options["log_file"],
        maxBytes=options["log_file_size"] if max_bytes is None else max_bytes,
        backupCount=LOG_BACKUPS,
        encoding=DEFAULT_ENCODING,
    )
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)


def disable_logging() -> None:
    logger.disabled = True
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
