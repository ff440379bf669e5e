"""Validated driver configuration shared by every subcommand."""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, ValidationError, field_validator

from app.config.settings import settings
from app.exceptions import UsageError
from app.models import BranchTag, RunConfig, ScenarioTag, TimeGrid
from app.utils.validators import (
    UINT64_MAX,
    validate_branch,
    validate_fraction,
    validate_int_list,
    validate_positive_float,
    validate_positive_int,
    validate_scenario,
    validate_seed,
)


def _checked(validator, value):
    is_valid, parsed, error = validator(value)
    if not is_valid:
        raise ValueError(error)
    return parsed


class DriverConfig(BaseModel):
    """Effective parameters of one CLI invocation."""
    n: int = Field(default=100, description="Bath size N")
    scenario: ScenarioTag = Field(default=ScenarioTag.A)
    seed: int = Field(default=0, description="Master seed (64-bit unsigned)")
    t_max: float = Field(default=100.0, description="End of the time grid")
    steps: int = Field(default=1000, description="Grid intervals; the grid has steps + 1 points")
    branch: BranchTag = Field(default=BranchTag.DIAG0)
    burn_in: float = Field(default_factory=lambda: settings.burn_in_fraction)
    out: Optional[str] = Field(default=None, description="CSV output path")
    manifest: Optional[str] = Field(default=None, description="Manifest output path")
    threads: Optional[int] = Field(default=None)
    runs: int = Field(default=20, description="Ensemble size")
    ns: List[int] = Field(default_factory=lambda: [100, 1000, 10000], description="Bath sizes of the scaling study")
    max_n: int = Field(default=8, description="Largest bath size checked by verify")
    trials: int = Field(default=20, description="Verification trials per check")
    tolerance: float = Field(default=1e-9, ge=0.0, description="Verification tolerance")

    class Config:
        """Pydantic config."""
        extra = "forbid"
        frozen = True

    @field_validator("n", "steps", "runs", "trials", "max_n", mode="before")
    @classmethod
    def parse_positive(cls, v):
        return _checked(validate_positive_int, v)

    @field_validator("threads", mode="before")
    @classmethod
    def parse_threads(cls, v):
        return None if v is None else _checked(validate_positive_int, v)

    @field_validator("seed", mode="before")
    @classmethod
    def parse_seed(cls, v):
        return _checked(validate_seed, v)

    @field_validator("scenario", mode="before")
    @classmethod
    def parse_scenario(cls, v):
        return _checked(validate_scenario, v)

    @field_validator("branch", mode="before")
    @classmethod
    def parse_branch(cls, v):
        return _checked(validate_branch, v)

    @field_validator("t_max", mode="before")
    @classmethod
    def parse_t_max(cls, v):
        return _checked(validate_positive_float, v)

    @field_validator("burn_in", mode="before")
    @classmethod
    def parse_burn_in(cls, v):
        return _checked(validate_fraction, v)

    @field_validator("ns", mode="before")
    @classmethod
    def parse_ns(cls, v):
        return _checked(validate_int_list, v)

    @field_validator("max_n")
    @classmethod
    def check_max_n(cls, v):
        if v > settings.max_term_spins:
            raise ValueError(f"Oracles support at most {settings.max_term_spins} spins")
        return v

    @classmethod
    def from_sources(cls, file_values: Optional[Dict[str, Any]] = None, cli_values: Optional[Dict[str, Any]] = None) -> "DriverConfig":
        """Merge defaults, config-file values and CLI flags, in rising precedence."""
        merged = dict(file_values or {})
        merged.update(cli_values or {})
        try:
            return cls(**merged)
        except ValidationError as e:
            error = e.errors()[0]
            key = str(error["loc"][0]) if error["loc"] else "config"
            if error["type"] == "extra_forbidden":
                raise UsageError(f"Unknown parameter '{key}'", key=key)
            message = error["msg"].removeprefix("Value error, ")
            raise UsageError(f"Invalid value for '{key}': {message}", key=key)

    def grid(self) -> TimeGrid:
        return TimeGrid.from_steps(self.t_max, self.steps)

    def run_config(self) -> RunConfig:
        """RunConfig of a single global run."""
        return RunConfig(
            n=self.n,
            scenario=self.scenario,
            seed=self.seed,
            grid=self.grid(),
            branch=self.branch,
            burn_in_fraction=self.burn_in,
        )

    def seeds(self) -> List[int]:
        """Consecutive ensemble seeds starting at the master seed."""
        return [(self.seed + k) % (UINT64_MAX + 1) for k in range(self.runs)]

    def parameters(self) -> Dict[str, Any]:
        """JSON-ready parameter map for the manifest."""
        return self.model_dump(mode="json")
