# -*- coding: utf-8 -*-
#
# This file is part of the randomwaves package.
#
# Copyright (c) 2026 - 2026 by the randomwaves developers
#
# This program is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 3
# of the License, or (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, write to the Free Software
# Foundation, Inc., 51 Franklin St, Fifth Floor, Boston, MA  02110-1301  USA
# See http://www.gnu.org/licenses/ for more information.

"""
The randomwaves command.

Subcommands::

    randomwaves run <config-file>       run an experiment and write its report
    randomwaves report <result-dir>     write the report of an earlier run again
    randomwaves validate <config-file>  check a configuration without computing

The exit code is 0 if all checks passed, 1 if a check failed and 2 on errors.

"""

import argparse
import logging
import sys

from . import config
from . import errors
from . import pkginfo

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2

LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s: %(message)s"


def parser():
    """Return the ArgumentParser."""
    p = argparse.ArgumentParser(prog="randomwaves",
        description="Numerical experiments on nodal sets of random waves.")
    p.add_argument("--version", action="version", version="%(prog)s " + pkginfo.version_string)
    verbosity = p.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="log debug messages")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="only log warnings and errors")
    sub = p.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run an experiment")
    run.add_argument("config", help="configuration file")
    report = sub.add_parser("report", help="write the report of a result directory")
    report.add_argument("directory", help="result directory")
    validate = sub.add_parser("validate", help="check a configuration file")
    validate.add_argument("config", help="configuration file")
    return p


def setup_logging(verbose=False, quiet=False):
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT)


def _status(record):
    if record.failed:
        return EXIT_ERROR
    return EXIT_PASS if record.passed else EXIT_FAIL


def cmd_run(filename):
    from . import experiment
    from . import report
    cfg = config.load(filename)
    record = experiment.run_experiment(cfg)
    report.emit_report(record, cfg.output)
    print(report.summary_text(record), end="")
    return _status(record)


def cmd_report(directory):
    from . import report
    record = report.load_record(directory)
    report.emit_report(record, directory)
    print(report.summary_text(record), end="")
    return _status(record)


def cmd_validate(filename):
    cfg = config.validate(config.load(filename))
    print("{}: valid {} configuration".format(
        filename, config.name_of(config.experiment_names, cfg.kind)))
    return EXIT_PASS


def main(argv=None):
    """Run the command line and return the exit code."""
    args = parser().parse_args(argv)
    setup_logging(args.verbose, args.quiet)
    try:
        if args.command == "run":
            return cmd_run(args.config)
        elif args.command == "report":
            return cmd_report(args.directory)
        return cmd_validate(args.config)
    except errors.ConfigError as e:
        logger.error("invalid configuration: %s", e)
    except (errors.Error, OSError, ValueError) as e:
        logger.error("%s", e)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
