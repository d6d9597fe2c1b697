# Copyright (C) 2026 H. Blok
# SPDX-License-Identifier: GPL-3.0-or-later

"""Entry point for python -m gemkit.main."""

import logging
import sys

from gemkit import cli
from gemkit import constants

LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def setup_logging(verbosity):
    logging.basicConfig(
        level=LEVELS[min(verbosity, len(LEVELS) - 1)],
        format=constants.LOG_FORMAT,
        datefmt=constants.LOG_DATE_FORMAT,
    )


def main(argv=None):
    args = cli.build_parser().parse_args(argv)
    setup_logging(args.verbose)
    return cli.run(args)


if __name__ == "__main__":
    sys.exit(main())
