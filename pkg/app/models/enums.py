"""Tags shared by the model types."""

from enum import Enum


class ScenarioTag(str, Enum):
    """Sampling regimes for the bath state and the observable."""
    A = "a"
    B = "b"
    C = "c"
    RESTRICTED_OBSERVABLE_ONLY = "restricted-obs"


class BranchTag(str, Enum):
    """Selects the system block: Gamma_0 (00/11) or Gamma_1 (10)."""
    DIAG0 = "0"
    OFFDIAG1 = "1"
