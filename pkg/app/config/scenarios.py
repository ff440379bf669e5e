"""Sampling intervals for the random scenarios."""

import math
from typing import Tuple

from app.models.enums import ScenarioTag

TWO_PI = 2.0 * math.pi

# Coupling constants are shared by every scenario
COUPLING_RANGE: Tuple[float, float] = (-math.pi, math.pi)

# Phase interval of alpha_i and beta_i
BATH_PHASE_RANGES = {
    ScenarioTag.A: (0.0, TWO_PI),
    ScenarioTag.B: (0.0, math.pi / 2),
    ScenarioTag.C: (0.0, 0.0),
    ScenarioTag.RESTRICTED_OBSERVABLE_ONLY: (0.0, TWO_PI),
}

# Interval of the real diagonal blocks eps_uu_i, eps_dd_i
DIAGONAL_EPS_RANGES = {
    ScenarioTag.A: (-1.0, 1.0),
    ScenarioTag.B: (0.0, 1.0),
    ScenarioTag.C: (0.0, 1.0),
    ScenarioTag.RESTRICTED_OBSERVABLE_ONLY: (0.0, 1.0),
}

# Phase interval of eps_ud_i
OFFDIAGONAL_EPS_PHASE_RANGES = {
    ScenarioTag.A: (0.0, TWO_PI),
    ScenarioTag.B: (0.0, math.pi / 2),
    ScenarioTag.C: (0.0, 0.0),
    ScenarioTag.RESTRICTED_OBSERVABLE_ONLY: (0.0, 0.0),
}

# Interval of the real system diagonal s00, s11
SYSTEM_DIAGONAL_RANGES = {
    ScenarioTag.A: (-1.0, 1.0),
    ScenarioTag.B: (0.0, 1.0),
    ScenarioTag.C: (0.0, 1.0),
    ScenarioTag.RESTRICTED_OBSERVABLE_ONLY: (0.0, 1.0),
}

# Phase interval of the system coefficient s10
SYSTEM_PHASE_RANGES = {
    ScenarioTag.A: (0.0, TWO_PI),
    ScenarioTag.B: (0.0, TWO_PI),
    ScenarioTag.C: (0.0, 0.0),
    ScenarioTag.RESTRICTED_OBSERVABLE_ONLY: (0.0, 0.0),
}


def get_bath_phase_range(scenario: ScenarioTag) -> Tuple[float, float]:
    """Get the phase interval of the bath amplitudes."""
    return BATH_PHASE_RANGES[ScenarioTag(scenario)]


def get_diagonal_eps_range(scenario: ScenarioTag) -> Tuple[float, float]:
    """Get the interval of the diagonal observable blocks."""
    return DIAGONAL_EPS_RANGES[ScenarioTag(scenario)]


def get_offdiagonal_eps_phase_range(scenario: ScenarioTag) -> Tuple[float, float]:
    """Get the phase interval of eps_ud."""
    return OFFDIAGONAL_EPS_PHASE_RANGES[ScenarioTag(scenario)]


def get_system_phase_range(scenario: ScenarioTag) -> Tuple[float, float]:
    """Get the phase interval of s10."""
    return SYSTEM_PHASE_RANGES[ScenarioTag(scenario)]


def get_system_diagonal_range(scenario: ScenarioTag) -> Tuple[float, float]:
    """Get the interval of s00 and s11."""
    return SYSTEM_DIAGONAL_RANGES[ScenarioTag(scenario)]
