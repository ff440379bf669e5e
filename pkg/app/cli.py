"""Command-line entry point."""

import argparse
import logging
import sys
from typing import List, Optional, Tuple

from app import __version__
from app.config.driver import DriverConfig
from app.config.loader import load_config_file
from app.exceptions import SpinBathError, UsageError
from app.handlers import register_all_handlers

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinbath",
        description="Decoherence of a qubit coupled to a random spin bath.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="subcommand", metavar="SUBCOMMAND")
    subparsers.required = True
    register_all_handlers(subparsers)
    return parser


def parse_config(argv: Optional[List[str]] = None) -> Tuple[str, DriverConfig, callable]:
    """
    Parse arguments into a validated DriverConfig.

    Precedence: CLI flags over config-file values over defaults.

    Returns:
        tuple: (subcommand, config, handler)
    """
    args = vars(build_parser().parse_args(argv))
    subcommand = args.pop("subcommand")
    handler = args.pop("handler")

    config_path = args.pop("config", None)
    file_values = load_config_file(config_path) if config_path else {}
    return subcommand, DriverConfig.from_sources(file_values, args), handler


def run_cli(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand and return its exit status."""
    try:
        subcommand, config, handler = parse_config(argv)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    logger.info(f"Starting {subcommand} with {config.parameters()}")
    try:
        return handler(config)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SpinBathError as e:
        logger.error(f"{subcommand} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE
