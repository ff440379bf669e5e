"""Models module."""

from .enums import ScenarioTag, BranchTag
from .spin_bath import CouplingSet, BathState, SystemAmplitudes, ProductObservable, ObservableSum
from .experiment import TimeGrid, TimeSeries, RunConfig, RunResult, EnsembleSummary
from .terms import TermList
from .manifest import RunManifest
from .verification import CheckResult, VerificationReport

__all__ = [
    # Tags
    "ScenarioTag", "BranchTag",
    # Spin-bath types
    "CouplingSet", "BathState", "SystemAmplitudes", "ProductObservable", "ObservableSum",
    # Experiment schemas
    "TimeGrid", "TimeSeries", "RunConfig", "RunResult", "EnsembleSummary",
    # Oracle terms
    "TermList",
    # Output
    "RunManifest",
    # Verification
    "CheckResult", "VerificationReport",
]
