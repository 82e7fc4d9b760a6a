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


from optparse import OptionParser, OptionGroup, Values

from lib.core.settings import (
    COMMANDS,
    OUTPUT_FORMATS,
    RELATION_ORDERS,
    SOLVE_METHODS,
    VERSION,
)
from lib.utils.common import get_config_file


def parse_arguments(argv=None) -> Values:
    usage = "Usage: %prog <command> [options]\n\nCommands: " + ", ".join(COMMANDS)
    epilog = "See 'config.ini' for the example configuration file"
    parser = OptionParser(usage=usage, epilog=epilog, version=f"ia v{VERSION}")

    # Problem
    problem = OptionGroup(parser, "Problem", "Scalars or comma separated per-user lists")
    problem.add_option("--K", action="store", type="int", dest="K", metavar="USERS", help="Number of users")
    problem.add_option(
        "--M", action="store", dest="M", metavar="ANTENNAS", help="Transmit antennas (e.g. 4 or 2,3,4)"
    )
    problem.add_option(
        "--N", action="store", dest="N", metavar="ANTENNAS", help="Receive antennas (e.g. 4 or 2,3,4)"
    )
    problem.add_option("--d", action="store", dest="d", metavar="STREAMS", help="Streams per user")
    problem.add_option(
        "--spec",
        action="store",
        dest="spec_file",
        metavar="PATH",
        help="Problem spec JSON (a channel file works too)",
    )

    # Files
    files = OptionGroup(parser, "Input files")
    files.add_option(
        "--channels", action="store", dest="channels_file", metavar="PATH", help="Channel set JSON"
    )
    files.add_option(
        "--strategy", action="store", dest="strategy_file", metavar="PATH", help="Strategy JSON"
    )

    # Solver
    solver = OptionGroup(parser, "Solver settings")
    solver.add_option(
        "--method",
        action="store",
        dest="method",
        choices=SOLVE_METHODS,
        help=f"Construction: {', '.join(SOLVE_METHODS)} (Default: auto)",
    )
    solver.add_option(
        "--selection",
        action="store",
        dest="selection",
        metavar="INDICES",
        help="Eigenvector indices for the eigen method, 0-based (e.g. 0,2)",
    )
    solver.add_option(
        "--enumerate",
        action="store_true",
        dest="enumerate",
        help="Enumerate every eigen solution instead of one",
    )
    solver.add_option(
        "--max-solutions",
        action="store",
        type="int",
        dest="max_solutions",
        metavar="NUMBER",
        help="Stop enumerating after this many solutions",
    )
    solver.add_option(
        "--restarts", action="store", type="int", dest="restarts", help="Newton restarts"
    )
    solver.add_option(
        "--attempts", action="store", type="int", dest="attempts", help="Independent Newton starts for enumerate"
    )
    solver.add_option(
        "--max-iterations",
        action="store",
        type="int",
        dest="max_iterations",
        metavar="NUMBER",
        help="Levenberg-Marquardt iterations per start",
    )
    solver.add_option(
        "--budget",
        action="store",
        type="int",
        dest="term_budget",
        metavar="TERMS",
        help="Maximum number of Chow ring terms while counting",
    )
    solver.add_option(
        "--order",
        action="store",
        dest="relation_order",
        choices=RELATION_ORDERS,
        help=f"Relation order while counting: {', '.join(RELATION_ORDERS)}",
    )
    solver.add_option(
        "--all-path-bounds",
        action="store_true",
        dest="all_path_bounds",
        help="Also check every admissible alignment path bound",
    )
    solver.add_option(
        "--max-r",
        action="store",
        type="int",
        dest="max_r",
        metavar="R",
        help="Longest path bound checked, as r (sequence length r+2)",
    )
    solver.add_option(
        "--tol", action="store", type="float", dest="verify_tol", help="Verification tolerance"
    )

    # Tables
    tables = OptionGroup(parser, "Tables")
    tables.add_option("--max-M", action="store", type="int", dest="max_M", metavar="ANTENNAS")
    tables.add_option("--max-N", action="store", type="int", dest="max_N", metavar="ANTENNAS")

    # General
    general = OptionGroup(parser, "General settings")
    general.add_option(
        "--config",
        action="store",
        dest="config",
        metavar="PATH",
        help="Path to configuration file (Default: 'IA_CONFIG' environment variable, otherwise 'config.ini')",
        default=get_config_file(),
    )
    general.add_option(
        "-t", "--threads", action="store", type="int", dest="thread_count", metavar="THREADS",
        help="Number of worker threads",
    )
    general.add_option(
        "--seed", action="store", type="int", dest="seed", help="Random seed (channels, restarts)"
    )

    # View
    view = OptionGroup(parser, "View settings")
    view.add_option("--json", action="store_true", dest="json", help="Print the result as JSON")
    view.add_option("--no-color", action="store_false", dest="color", help="No colored output")
    view.add_option("-q", "--quiet-mode", action="store_true", dest="quiet", help="Quiet mode")

    # Output
    output = OptionGroup(parser, "Output settings")
    output.add_option(
        "-o",
        "--output",
        action="store",
        dest="output_file",
        metavar="PATH",
        help="Output file, may contain {command} and {date}",
    )
    output.add_option(
        "--format",
        action="store",
        dest="output_format",
        choices=OUTPUT_FORMATS,
        help=f"Report format: {', '.join(OUTPUT_FORMATS)}",
    )
    output.add_option("--log", action="store", dest="log_file", metavar="PATH", help="Log file")

    parser.add_option_group(problem)
    parser.add_option_group(files)
    parser.add_option_group(solver)
    parser.add_option_group(tables)
    parser.add_option_group(general)
    parser.add_option_group(view)
    parser.add_option_group(output)
    options, arguments = parser.parse_args(argv)

    if len(arguments) != 1:
        parser.error("exactly one command is required")

    if arguments[0] not in COMMANDS:
        parser.error(f"unknown command {arguments[0]!r}, choose from: {', '.join(COMMANDS)}")

    options.command = arguments[0]
    return options
