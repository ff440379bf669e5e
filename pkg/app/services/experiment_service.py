"""Figure-level drivers: single runs, seed ensembles and N-scaling studies."""

import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from app.config import settings
from app.exceptions import NormalizationDegenerateError
from app.jobs import run_ordered
from app.models import (
    BranchTag,
    EnsembleSummary,
    RunConfig,
    RunResult,
    ScenarioTag,
    TimeGrid,
    TimeSeries,
)
from app.services.evolution_service import evolution_service
from app.services.sampling_service import sampling_service
from app.utils.rng import run_streams

logger = logging.getLogger(__name__)


def post_burn_in(series: TimeSeries, burn_in_fraction: float) -> np.ndarray:
    """Values at t >= t_start + f * (t_end - t_start)."""
    times = series.times
    cutoff = times[0] + burn_in_fraction * (times[-1] - times[0])
    return series.values[times >= cutoff]


# Stationary runs may drift by this many decades, or by this share of their
# 5-95 amplitude when the series is deep enough for that to be larger.
DRIFT_FLOOR = 0.5
DRIFT_FRACTION = 0.25


def is_stationary(drift: float, amplitude: float) -> bool:
    return drift <= max(DRIFT_FLOOR, DRIFT_FRACTION * amplitude)


def summarize(values: np.ndarray) -> dict:
    """Baseline, amplitude and drift of post-burn-in values."""
    baseline = float(np.median(values))
    low, high = np.percentile(values, [5.0, 95.0])

    drift = 0.0
    if values.size >= 2:
        first, second = np.array_split(values, 2)
        drift = abs(float(np.median(first)) - float(np.median(second)))

    return {"baseline": baseline, "amplitude": float(high - low), "drift": drift}


class ExperimentService:
    """Runs the decay experiments on sampled instances."""

    def run_single(self, config: RunConfig, threads: Optional[int] = None) -> RunResult:
        """Sample one instance and summarize its normalized log10|Lambda(t)|."""
        streams = run_streams(config.seed, config.stream)
        couplings, bath, observable = sampling_service.sample_instance(config.n, config.scenario, streams)

        try:
            series = evolution_service.lambda_series(
                bath, observable, couplings, config.grid, config.branch, threads=threads
            )
        except NormalizationDegenerateError as e:
            logger.warning(f"Degenerate run (seed={config.seed}, N={config.n}): {e}")
            return RunResult(degenerate=True)

        stats = self.summarize_series(series, config.burn_in_fraction)
        decayed = stats["baseline"] < settings.decay_threshold
        logger.info(
            f"Run seed={config.seed} N={config.n} scenario={config.scenario.value}: "
            f"baseline={stats['baseline']:.3f}, amplitude={stats['amplitude']:.3f}, decayed={decayed}"
        )
        return RunResult(series=series, decayed=decayed, **stats)

    def summarize_series(self, series: TimeSeries, burn_in_fraction: Optional[float] = None) -> dict:
        """Baseline, amplitude and drift of any series after burn-in."""
        fraction = burn_in_fraction or settings.burn_in_fraction
        return summarize(post_burn_in(series, fraction))

    def run_members(self, base: RunConfig, seeds: Sequence[int], threads: Optional[int] = None) -> List[RunResult]:
        """One run per seed, in seed order; members are the parallel work units."""
        if not seeds:
            raise ValueError("an ensemble needs at least one seed")

        def member(seed: int) -> RunResult:
            return self.run_single(base.model_copy(update={"seed": int(seed)}), threads=1)

        return run_ordered(member, list(seeds), threads)

    def run_ensemble(self, base: RunConfig, seeds: Sequence[int], threads: Optional[int] = None) -> EnsembleSummary:
        """Independent runs over a seed list, aggregated."""
        summary = self.aggregate(seeds, self.run_members(base, seeds, threads))
        logger.info(
            f"Ensemble of {len(seeds)} runs: decay_fraction={summary.decay_fraction:.2f}, "
            f"degenerate={summary.degenerate_count}, median baseline={summary.median_baseline:.3f}"
        )
        return summary

    def aggregate(self, seeds: Sequence[int], results: Sequence[RunResult]) -> EnsembleSummary:
        """Fold per-run results into an EnsembleSummary."""
        degenerate = sum(1 for r in results if r.degenerate)
        decayed = [bool(r.decayed and not r.degenerate) for r in results]
        valid = len(results) - degenerate
        return EnsembleSummary(
            seeds=[int(s) for s in seeds],
            baselines=[math.nan if r.degenerate else r.baseline for r in results],
            decayed=decayed,
            decay_fraction=sum(decayed) / valid if valid else 0.0,
            degenerate_count=degenerate,
        )

    def scaling_study(
        self,
        ns: Sequence[int],
        scenario: ScenarioTag,
        seed: int,
        grid: TimeGrid,
        branch: BranchTag = BranchTag.DIAG0,
        burn_in_fraction: Optional[float] = None,
        threads: Optional[int] = None,
    ) -> List[Tuple[int, RunResult]]:
        """One run per bath size, the k-th on sub-stream k of the master seed."""
        results = []
        for k, n in enumerate(ns):
            config = RunConfig(
                n=n,
                scenario=scenario,
                seed=seed,
                grid=grid,
                branch=branch,
                burn_in_fraction=burn_in_fraction or settings.burn_in_fraction,
                stream=k,
            )
            result = self.run_single(config, threads=threads)
            if not result.degenerate and not is_stationary(result.drift, result.amplitude):
                logger.warning(f"N={n}: drift {result.drift:.3f} against amplitude {result.amplitude:.3f}")
            results.append((n, result))
        return results

    def local_decoherence_run(self, n: int, seed: int, grid: TimeGrid, threads: Optional[int] = None) -> TimeSeries:
        """log10|r(t)| for |alpha_i|^2 ~ U[0, 1] and g_i ~ U[-pi, pi].

        Values are taken relative to log10|r(0)|, which is zero up to the
        rounding of |alpha_i|^2 + |beta_i|^2.
        """
        streams = run_streams(seed, 0)
        couplings = sampling_service.sample_couplings(n, streams["couplings"])
        bath = sampling_service.sample_bath(n, ScenarioTag.A, streams["bath"])
        raw = evolution_service.decoherence_series(bath, couplings, grid, threads=threads)

        if raw.times[0] == 0.0:
            origin = raw.values[0]
        else:
            origin = math.log10(abs(evolution_service.decoherence_factor(bath, couplings, 0.0)))
        series = TimeSeries(times=raw.times, values=raw.values - origin)
        logger.info(
            f"Local run seed={seed} N={n}: median log10|r|={float(np.median(series.values)):.3f}, "
            f"predicted mean={evolution_service.log_mean_prediction(bath):.3f}"
        )
        return series


# Service instance
experiment_service = ExperimentService()
