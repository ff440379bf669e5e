"""Experiment configuration and result schemas."""

import math
from typing import Iterator, List, Tuple

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from app.config import settings
from .enums import BranchTag, ScenarioTag

UINT64_MAX = 2 ** 64 - 1


class TimeGrid(BaseModel):
    """Uniform linear time grid including both end points."""
    t_start: float = Field(default=0.0, ge=0.0)
    t_end: float = Field(...)
    points: int = Field(..., ge=2)
    
    class Config:
        """Pydantic config."""
        frozen = True
    
    @model_validator(mode="after")
    def check_interval(self):
        """t_start < t_end, both finite."""
        if not (math.isfinite(self.t_start) and math.isfinite(self.t_end)):
            raise ValueError("grid end points must be finite")
        if self.t_start >= self.t_end:
            raise ValueError(f"t_start ({self.t_start}) must be below t_end ({self.t_end})")
        return self
    
    @classmethod
    def from_steps(cls, t_max: float, steps: int) -> "TimeGrid":
        """Grid on [0, t_max] with `steps` intervals."""
        return cls(t_start=0.0, t_end=t_max, points=steps + 1)
    
    def times(self) -> np.ndarray:
        """Grid points; the first one is t_start exactly."""
        times = np.linspace(self.t_start, self.t_end, self.points)
        times[0] = self.t_start
        return times


class TimeSeries(BaseModel):
    """A real-valued series sampled on a time grid."""
    times: np.ndarray = Field(default_factory=lambda: np.empty(0))
    values: np.ndarray = Field(default_factory=lambda: np.empty(0))
    
    class Config:
        """Pydantic config."""
        arbitrary_types_allowed = True
        frozen = True
    
    @model_validator(mode="after")
    def check_lengths(self):
        """One value per time point."""
        if self.times.shape != self.values.shape:
            raise ValueError("times and values must have the same shape")
        return self
    
    def __len__(self) -> int:
        return int(self.times.size)
    
    def rows(self) -> Iterator[Tuple[float, float]]:
        """(t, value) pairs in ascending t."""
        for t, value in zip(self.times.tolist(), self.values.tolist()):
            yield t, value


class RunConfig(BaseModel):
    """Parameters of a single global run."""
    n: int = Field(..., ge=1, description="Bath size N")
    scenario: ScenarioTag = Field(default=ScenarioTag.A)
    seed: int = Field(default=0, ge=0, le=UINT64_MAX)
    grid: TimeGrid = Field(...)
    branch: BranchTag = Field(default=BranchTag.DIAG0)
    burn_in_fraction: float = Field(default_factory=lambda: settings.burn_in_fraction, gt=0.0, lt=1.0)
    stream: int = Field(default=0, ge=0, description="Sub-stream index under the master seed")
    
    class Config:
        """Pydantic config."""
        frozen = True
    
    @field_validator("branch", mode="before")
    @classmethod
    def parse_branch(cls, v):
        """Accept 0/1 as integers."""
        return str(v) if isinstance(v, int) else v


class RunResult(BaseModel):
    """Normalized log10|Lambda(t)| series with its summary statistics."""
    series: TimeSeries = Field(default_factory=TimeSeries)
    baseline: float = Field(default=float("nan"), description="Post-burn-in median")
    amplitude: float = Field(default=float("nan"), description="Post-burn-in 95th minus 5th percentile")
    drift: float = Field(default=float("nan"), description="|median first half - median second half| after burn-in")
    decayed: bool = Field(default=False)
    degenerate: bool = Field(default=False)
    
    class Config:
        """Pydantic config."""
        frozen = True
    
    @model_validator(mode="after")
    def check_degenerate(self):
        """Degenerate runs carry no series."""
        if self.degenerate and len(self.series):
            raise ValueError("a degenerate run cannot carry a series")
        return self
    
    def summary(self) -> dict:
        """Summary statistics as plain floats."""
        return {
            "baseline": self.baseline,
            "amplitude": self.amplitude,
            "drift": self.drift,
            "decayed": float(self.decayed),
            "degenerate": float(self.degenerate),
        }


class EnsembleSummary(BaseModel):
    """Aggregate of independent runs over a seed list."""
    seeds: List[int] = Field(default_factory=list)
    baselines: List[float] = Field(default_factory=list, description="NaN for degenerate runs")
    decayed: List[bool] = Field(default_factory=list)
    decay_fraction: float = Field(default=0.0, ge=0.0, le=1.0)
    degenerate_count: int = Field(default=0, ge=0)
    
    @model_validator(mode="after")
    def check_consistency(self):
        """Per-run lists line up and the fraction matches the flags."""
        if not (len(self.seeds) == len(self.baselines) == len(self.decayed)):
            raise ValueError("per-run lists must have equal length")
        valid = len(self.seeds) - self.degenerate_count
        expected = sum(self.decayed) / valid if valid > 0 else 0.0
        if not math.isclose(self.decay_fraction, expected, abs_tol=1e-12):
            raise ValueError("decay_fraction disagrees with the per-run flags")
        return self
    
    @property
    def median_baseline(self) -> float:
        """Median over the non-degenerate runs."""
        finite = [b for b in self.baselines if not math.isnan(b)]
        return float(np.median(finite)) if finite else float("nan")
    
    def summary(self) -> dict:
        """Summary statistics as plain floats."""
        return {
            "runs": float(len(self.seeds)),
            "decay_fraction": self.decay_fraction,
            "degenerate_count": float(self.degenerate_count),
            "median_baseline": self.median_baseline,
        }
