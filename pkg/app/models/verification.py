"""Oracle verification report."""

import math
from typing import List, Optional

from pydantic import BaseModel, Field


class CheckResult(BaseModel):
    """Worst case of one equivalence check over all trials."""
    name: str = Field(...)
    worst_error: float = Field(default=0.0, ge=0.0)
    worst_seed: Optional[int] = Field(default=None, description="Trial seed of the worst case")
    worst_n: Optional[int] = Field(default=None)
    trials: int = Field(default=0, ge=0)
    tolerance: float = Field(..., ge=0.0)

    @property
    def passed(self) -> bool:
        return math.isfinite(self.worst_error) and self.worst_error <= self.tolerance

    def describe(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name}: worst relative error {self.worst_error:.3e} over {self.trials} trials"
        if not self.passed:
            line += f" (seed={self.worst_seed}, N={self.worst_n})"
        return line


class VerificationReport(BaseModel):
    """All checks of one verify invocation."""
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def summary(self) -> dict:
        return {check.name: check.worst_error for check in self.checks}
