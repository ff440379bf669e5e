"""Services module."""

from .sampling_service import sampling_service
from .evolution_service import evolution_service
from .oracle_service import oracle_service
from .experiment_service import experiment_service
from .verification_service import verification_service

__all__ = [
    "sampling_service",
    "evolution_service",
    "oracle_service",
    "experiment_service",
    "verification_service",
]
