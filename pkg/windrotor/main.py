"""
Windrotor CLI

Blade-element rotor power, polar-derived design points, constrained design
sweeps and wind site ranking from the command line.
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

from dotenv import load_dotenv
from pythonjsonlogger import jsonlogger

from . import __version__
from .commands import evaluate, polar, site_rank, sweep
from .errors import ConfigurationError, InputFormatError, RotorDesignError

# Load environment variables
load_dotenv()

# Configuration
TOOL_NAME = "windrotor"
LOG_ENV_VAR = "WINDROTOR_LOG"
LOG_FORMAT_ENV_VAR = "WINDROTOR_LOG_FORMAT"

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

logger = logging.getLogger(TOOL_NAME)


def configure_logging() -> None:
    """Structured records to stderr; level from WINDROTOR_LOG"""
    level_name = os.getenv(LOG_ENV_VAR, "WARNING").upper()
    level = getattr(logging, level_name, None)
    if not isinstance(level, int):
        level = logging.WARNING

    package_logger = logging.getLogger(TOOL_NAME)
    package_logger.setLevel(level)

    # Rebind on every call so the handler follows the current sys.stderr
    for existing in list(package_logger.handlers):
        package_logger.removeHandler(existing)
    handler = logging.StreamHandler(sys.stderr)
    if os.getenv(LOG_FORMAT_ENV_VAR, "json").lower() == "text":
        handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
    else:
        handler.setFormatter(jsonlogger.JsonFormatter("%(asctime)s %(levelname)s %(name)s %(message)s"))
    package_logger.addHandler(handler)
    package_logger.propagate = False


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL_NAME,
        description="Horizontal-axis wind turbine rotor performance and design toolkit",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Commands
    evaluate.register(subparsers)
    sweep.register(subparsers)
    polar.register(subparsers)
    site_rank.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        return args.handler(args)
    except (ConfigurationError, InputFormatError) as e:
        logger.error(f"{args.command} rejected its input: {e}")
        print(f"{TOOL_NAME} {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except RotorDesignError as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"{TOOL_NAME} {args.command}: error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except OSError as e:
        message = f"{e.filename}: {e.strerror}" if e.filename else str(e)
        logger.error(f"{args.command} could not access a file: {message}")
        print(f"{TOOL_NAME} {args.command}: error: {message}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
