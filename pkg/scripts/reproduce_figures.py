#!/usr/bin/env python3
"""
Script to regenerate the figure datasets.
Writes one CSV per curve plus a manifest per dataset into the output directory.
"""

import argparse
import logging
import sys
import time
from pathlib import Path

# Add app to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from app.config.driver import DriverConfig
from app.handlers.common import finish
from app.models import ScenarioTag
from app.output import LAMBDA_COLUMN, LOCAL_COLUMN, emit_series, emit_table
from app.services import experiment_service

logging.basicConfig(level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")
logger = logging.getLogger(__name__)


def local_curves(out_dir: Path, seed: int, threads):
    """log10|r(t)| for N=20 and N=100."""
    logger.info("Local decoherence curves...")
    for n in (20, 100):
        config = DriverConfig(n=n, seed=seed, t_max=100.0, steps=1000, threads=threads, out=str(out_dir / f"local_n{n}.csv"))
        started = time.perf_counter()
        series = experiment_service.local_decoherence_run(n, seed, config.grid(), threads=threads)
        emit_series(series, config.out, LOCAL_COLUMN)
        finish(config, "local", started, experiment_service.summarize_series(series, config.burn_in))


def global_curves(out_dir: Path, seed: int, threads):
    """Normalized log10|Lambda(t)| at N=100, one curve per scenario."""
    logger.info("Global observable curves...")
    for scenario in ScenarioTag:
        config = DriverConfig(
            n=100, scenario=scenario, seed=seed, t_max=100.0, steps=1000, threads=threads,
            out=str(out_dir / f"run_{scenario.value}.csv"),
        )
        started = time.perf_counter()
        result = experiment_service.run_single(config.run_config(), threads=threads)
        emit_series(result.series, config.out, LAMBDA_COLUMN)
        finish(config, "run", started, result.summary())


def scaling_curves(out_dir: Path, seed: int, threads, max_exponent: int):
    """Long-time runs for N = 10^2 .. 10^max_exponent on t in [0, 10^6]."""
    logger.info("Bath-size scaling curves...")
    ns = [10 ** k for k in range(2, max_exponent + 1)]
    config = DriverConfig(
        seed=seed, t_max=1e6, steps=2000, ns=ns, threads=threads, out=str(out_dir / "scaling.csv"),
    )
    started = time.perf_counter()
    results = experiment_service.scaling_study(ns, config.scenario, seed, config.grid(), threads=threads)
    for n, result in results:
        emit_series(result.series, out_dir / f"scaling_n{n}.csv", LAMBDA_COLUMN)
    emit_table(config.out, ("n", "baseline", "amplitude", "drift"), ((n, r.baseline, r.amplitude, r.drift) for n, r in results))
    finish(config, "scaling", started, {f"baseline_n{n}": r.baseline for n, r in results})


def main():
    """Main reproduction function."""
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.add_argument("--out-dir", type=Path, default=Path("figures"))
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--threads", type=int, default=None)
    parser.add_argument("--max-exponent", type=int, default=6, help="largest bath size is 10^max_exponent")
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    try:
        local_curves(args.out_dir, args.seed, args.threads)
        global_curves(args.out_dir, args.seed, args.threads)
        scaling_curves(args.out_dir, args.seed, args.threads, args.max_exponent)
        logger.info(f"✅ Figure data written to {args.out_dir}")
    except Exception as e:
        logger.error(f"❌ Reproduction failed: {e}")
        sys.exit(1)


if __name__ == "__main__":
    main()
