"""Handlers module."""

import argparse
import logging

from app.config.driver import DriverConfig
from .run_handlers import local_command_handler, run_command_handler
from .study_handlers import ensemble_command_handler, scaling_command_handler
from .verify_handler import verify_command_handler

logger = logging.getLogger(__name__)


def _default(field: str) -> str:
    info = DriverConfig.model_fields[field]
    value = info.default_factory() if info.default_factory else info.default
    if isinstance(value, list):
        return ",".join(str(v) for v in value)
    return str(getattr(value, "value", value))


def _add_common_options(parser: argparse.ArgumentParser, series: bool = True):
    """Flags shared by every subcommand. Values are validated by DriverConfig."""
    parser.add_argument("--config", metavar="FILE", help="YAML config file or run manifest; flags override it")
    parser.add_argument("--seed", help=f"master seed, 64-bit unsigned (default {_default('seed')})")
    parser.add_argument("--out", help="CSV output path (default <subcommand>.csv)")
    parser.add_argument("--manifest", help="manifest path (default: output path with .manifest.json)")
    parser.add_argument("--threads", help="worker threads (default: all cores)")
    if series:
        parser.add_argument("--n", help=f"bath size N (default {_default('n')})")
        parser.add_argument("--t-max", dest="t_max", help=f"end of the time grid (default {_default('t_max')})")
        parser.add_argument("--steps", help=f"grid intervals (default {_default('steps')})")
        parser.add_argument("--burn-in", dest="burn_in", help=f"burn-in fraction (default {_default('burn_in')})")


def _add_global_options(parser: argparse.ArgumentParser):
    parser.add_argument("--scenario", help=f"a, b, c or restricted-obs (default {_default('scenario')})")
    parser.add_argument("--branch", help=f"Gamma branch, 0 or 1 (default {_default('branch')})")


def register_run_handlers(subparsers):
    """Register the single-instance subcommands."""
    run = subparsers.add_parser("run", help="single global Lambda(t) run", argument_default=argparse.SUPPRESS)
    _add_common_options(run)
    _add_global_options(run)
    run.set_defaults(handler=run_command_handler)

    local = subparsers.add_parser("local", help="log10|r(t)| of the decoherence factor", argument_default=argparse.SUPPRESS)
    _add_common_options(local)
    local.set_defaults(handler=local_command_handler)


def register_study_handlers(subparsers):
    """Register the multi-run subcommands."""
    ensemble = subparsers.add_parser("ensemble", help="runs over consecutive seeds", argument_default=argparse.SUPPRESS)
    _add_common_options(ensemble)
    _add_global_options(ensemble)
    ensemble.add_argument("--runs", help=f"ensemble size (default {_default('runs')})")
    ensemble.set_defaults(handler=ensemble_command_handler)

    scaling = subparsers.add_parser("scaling", help="one run per bath size", argument_default=argparse.SUPPRESS)
    _add_common_options(scaling)
    _add_global_options(scaling)
    scaling.add_argument("--ns", help=f"comma-separated bath sizes (default {_default('ns')})")
    scaling.set_defaults(handler=scaling_command_handler)


def register_verify_handlers(subparsers):
    """Register the oracle verification subcommand."""
    verify = subparsers.add_parser("verify", help="check the engine against brute-force oracles", argument_default=argparse.SUPPRESS)
    _add_common_options(verify, series=False)
    verify.add_argument("--max-n", dest="max_n", help=f"largest bath size (default {_default('max_n')})")
    verify.add_argument("--trials", help=f"trials per check (default {_default('trials')})")
    verify.add_argument("--tolerance", help=f"largest accepted relative error (default {_default('tolerance')})")
    verify.set_defaults(handler=verify_command_handler)


def register_all_handlers(subparsers):
    """Register all subcommands."""
    register_run_handlers(subparsers)
    register_study_handlers(subparsers)
    register_verify_handlers(subparsers)


__all__ = ["register_all_handlers"]
