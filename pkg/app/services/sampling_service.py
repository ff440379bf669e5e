"""Random sampling of couplings, bath states and observables."""

import logging

import numpy as np

from app.config.scenarios import (
    COUPLING_RANGE,
    get_bath_phase_range,
    get_diagonal_eps_range,
    get_offdiagonal_eps_phase_range,
    get_system_diagonal_range,
    get_system_phase_range,
)
from app.models import BathState, CouplingSet, ProductObservable, ScenarioTag, SystemAmplitudes

logger = logging.getLogger(__name__)


def _phases(rng: np.random.Generator, interval, size=None):
    """Uniform phases; a zero-width interval yields exact zeros without drawing."""
    low, high = interval
    if low == high:
        return np.full(size, low) if size is not None else low
    return rng.uniform(low, high, size)


class SamplingService:
    """Draws model instances from seeded streams."""

    def sample_couplings(self, n: int, rng: np.random.Generator) -> CouplingSet:
        """g_i independent uniform on [-pi, pi]."""
        low, high = COUPLING_RANGE
        return CouplingSet(g=rng.uniform(low, high, n))

    def sample_bath(self, n: int, scenario: ScenarioTag, rng: np.random.Generator) -> BathState:
        """|alpha_i|^2 uniform on [0, 1], phases per scenario."""
        up = rng.uniform(0.0, 1.0, n)
        interval = get_bath_phase_range(scenario)
        phase_alpha = _phases(rng, interval, n)
        phase_beta = _phases(rng, interval, n)

        alpha = np.sqrt(up) * np.exp(1j * phase_alpha)
        beta = np.sqrt(1.0 - up) * np.exp(1j * phase_beta)
        return BathState(alpha=alpha, beta=beta)

    def sample_observable(self, n: int, scenario: ScenarioTag, rng: np.random.Generator) -> ProductObservable:
        """Random single-product observable for the given scenario."""
        s00, s11 = rng.uniform(*get_system_diagonal_range(scenario), 2)
        s10 = rng.uniform(0.0, 1.0) * np.exp(1j * _phases(rng, get_system_phase_range(scenario)))

        low, high = get_diagonal_eps_range(scenario)
        eps_uu = rng.uniform(low, high, n)
        eps_dd = rng.uniform(low, high, n)
        eps_ud = rng.uniform(0.0, 1.0, n) * np.exp(1j * _phases(rng, get_offdiagonal_eps_phase_range(scenario), n))

        return ProductObservable(s00=s00, s11=s11, s10=s10, eps_uu=eps_uu, eps_dd=eps_dd, eps_ud=eps_ud)

    def sample_system(self, rng: np.random.Generator) -> SystemAmplitudes:
        """a, b with |a|^2 ~ U[0, 1] and independent uniform phases."""
        weight = rng.uniform(0.0, 1.0)
        phase_a, phase_b = rng.uniform(-np.pi, np.pi, 2)
        return SystemAmplitudes(
            a=np.sqrt(weight) * np.exp(1j * phase_a),
            b=np.sqrt(1.0 - weight) * np.exp(1j * phase_b),
        )

    def local_observable(self, s00: float, s11: float, s10: complex, n: int) -> ProductObservable:
        """System observable with identity on every bath spin."""
        return ProductObservable(
            s00=s00,
            s11=s11,
            s10=s10,
            eps_uu=np.ones(n),
            eps_dd=np.ones(n),
            eps_ud=np.zeros(n, dtype=np.complex128),
        )

    def sample_instance(self, n: int, scenario: ScenarioTag, streams: dict):
        """Couplings, bath and observable of one run, each from its own stream."""
        couplings = self.sample_couplings(n, streams["couplings"])
        bath = self.sample_bath(n, scenario, streams["bath"])
        observable = self.sample_observable(n, scenario, streams["observable"])
        logger.debug(f"Sampled instance: N={n}, scenario={ScenarioTag(scenario).value}")
        return couplings, bath, observable


# Service instance
sampling_service = SamplingService()
