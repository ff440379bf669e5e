"""Multi-run subcommands: seed ensembles and bath-size scaling."""

import logging
import time

from app.config.driver import DriverConfig
from app.output import emit_table
from app.services import experiment_service
from .common import finish, output_path, print_summary

logger = logging.getLogger(__name__)

RUN_COLUMNS = ("baseline", "amplitude", "drift", "decayed", "degenerate")


def _row(key, result) -> list:
    return [key, result.baseline, result.amplitude, result.drift, int(result.decayed), int(result.degenerate)]


def ensemble_command_handler(config: DriverConfig) -> int:
    """`ensemble`: --runs consecutive seeds starting at --seed."""
    started = time.perf_counter()
    seeds = config.seeds()
    results = experiment_service.run_members(config.run_config(), seeds, threads=config.threads)
    summary = experiment_service.aggregate(seeds, results)

    path = output_path(config, "ensemble")
    emit_table(path, ("seed",) + RUN_COLUMNS, (_row(seed, r) for seed, r in zip(seeds, results)))
    finish(config, "ensemble", started, summary.summary())

    print_summary(f"ensemble of {len(seeds)} runs, scenario={config.scenario.value} -> {path}", summary.summary())
    return 0


def scaling_command_handler(config: DriverConfig) -> int:
    """`scaling`: one run per bath size in --ns."""
    started = time.perf_counter()
    results = experiment_service.scaling_study(
        config.ns,
        config.scenario,
        config.seed,
        config.grid(),
        branch=config.branch,
        burn_in_fraction=config.burn_in,
        threads=config.threads,
    )

    path = output_path(config, "scaling")
    emit_table(path, ("n",) + RUN_COLUMNS, (_row(n, r) for n, r in results))

    summary = {}
    for n, result in results:
        summary[f"baseline_n{n}"] = result.baseline
        summary[f"amplitude_n{n}"] = result.amplitude
    finish(config, "scaling", started, summary)

    print_summary(f"scaling over N={config.ns}, scenario={config.scenario.value} -> {path}", summary)
    return 0
