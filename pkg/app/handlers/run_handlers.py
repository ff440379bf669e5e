"""Single-instance subcommands: global Lambda runs and local r(t) runs."""

import logging
import time

from app.config.driver import DriverConfig
from app.output import LAMBDA_COLUMN, LOCAL_COLUMN, emit_series
from app.services import experiment_service
from .common import finish, output_path, print_summary

logger = logging.getLogger(__name__)


def run_command_handler(config: DriverConfig) -> int:
    """`run`: one random global observable, normalized log10|Lambda(t)|."""
    started = time.perf_counter()
    result = experiment_service.run_single(config.run_config(), threads=config.threads)

    path = output_path(config, "run")
    emit_series(result.series, path, LAMBDA_COLUMN)
    finish(config, "run", started, result.summary())

    if result.degenerate:
        print(f"Degenerate instance (seed={config.seed}): Lambda(0) vanishes, series left empty")
    else:
        print_summary(f"run N={config.n} scenario={config.scenario.value} seed={config.seed} -> {path}", result.summary())
    return 0


def local_command_handler(config: DriverConfig) -> int:
    """`local`: log10|r(t)| of the decoherence factor."""
    started = time.perf_counter()
    series = experiment_service.local_decoherence_run(config.n, config.seed, config.grid(), threads=config.threads)

    path = output_path(config, "local")
    emit_series(series, path, LOCAL_COLUMN)
    summary = experiment_service.summarize_series(series, config.burn_in)
    finish(config, "local", started, summary)

    print_summary(f"local N={config.n} seed={config.seed} -> {path}", summary)
    return 0
