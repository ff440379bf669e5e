"""Shared fixtures."""

import math

import numpy as np
import pytest

from app.models import BathState, CouplingSet, ScenarioTag
from app.services import sampling_service
from app.utils.rng import random_stream, run_streams


@pytest.fixture
def make_instance():
    """Factory for (couplings, bath, observable, system) of one seeded instance."""
    def _make(n: int, seed: int = 1, scenario: ScenarioTag = ScenarioTag.A):
        couplings, bath, observable = sampling_service.sample_instance(n, scenario, run_streams(seed, 0))
        system = sampling_service.sample_system(random_stream(seed, 99))
        return couplings, bath, observable, system
    return _make


@pytest.fixture
def commensurate_couplings():
    """g_i = 2 pi 3^(i-1) / period: every signed subset sum is a distinct non-zero frequency."""
    def _make(n: int, period: float = 1.0) -> CouplingSet:
        return CouplingSet(g=2.0 * math.pi * 3.0 ** np.arange(n) / period)
    return _make


@pytest.fixture
def equal_bath():
    """Every spin in (|up> + |down>) / sqrt(2)."""
    def _make(n: int) -> BathState:
        amplitude = np.full(n, 1.0 / math.sqrt(2.0))
        return BathState(alpha=amplitude, beta=amplitude)
    return _make
