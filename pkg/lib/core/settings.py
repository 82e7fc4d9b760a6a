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

import os
import sys
import time

from lib.utils.file import FileUtils

# Version format: <major version>.<minor version>.<revision>
VERSION = "0.2.0"

BANNER = f"""
  _  _    v{VERSION}
 | |/_\\   interference alignment toolkit
 |_/ _ \\
"""

COMMAND = " ".join(sys.argv)

START_TIME = time.strftime("%Y-%m-%d %H:%M:%S")

START_DATETIME = time.strftime("%Y-%m-%d")

SCRIPT_PATH = FileUtils.parent(__file__, 3)

DEFAULT_ENCODING = "utf-8"

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(threadName)s %(module)s: %(message)s"

LOG_BACKUPS = 2

NEW_LINE = os.linesep

COMMANDS = (
    "gen-channels",
    "feasibility",
    "solve",
    "verify",
    "count",
    "witness",
    "enumerate",
    "dof",
    "region-map",
)

OUTPUT_FORMATS = ("json", "plain")

SOLVE_METHODS = ("eigen", "paths", "newton", "auto")

RELATION_ORDERS = ("receiver", "transmitter", "cyclic")

# Singular values below RANK_RTOL * sigma_max count as zero
RANK_RTOL = 1e-10

ORTHONORMAL_RTOL = 1e-12

EIG_RESIDUAL_RTOL = 1e-9

VERIFY_TOL = 1e-8

NEWTON_TOL = 1e-10

DEDUP_TOL = 1e-6

# Largest principal angle (radians) under which two strategies are the same
DISTINCT_ANGLE = 1e-6

PIVOT_RTOL = 1e-8

MAX_SUBSET_USERS = 24

SUBSET_CHUNK_BITS = 20

DEFAULT_MAX_PATH_LENGTH = 8

DEFAULT_RESTARTS = 100

DEFAULT_ATTEMPTS = 200

LM_LAMBDA = 1e-3

LM_FACTOR = 10.0

LM_MAX_ITERATIONS = 200

LM_MAX_LAMBDA = 1e16

# Damped normal equations beyond this condition estimate count as a failed step
LM_MAX_CONDITION = 1e14

DEFAULT_TERM_BUDGET = 5_000_000

DEFAULT_THREADS = 4

REGION_LABEL_CAP = 9

DEFAULT_REGION_SIZE = 12

THREADS_ENV = "IA_THREADS"

CONFIG_ENV = "IA_CONFIG"

SLOW_TESTS_ENV = "IA_SLOW_TESTS"
