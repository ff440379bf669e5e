"""Seeded sampling of couplings, bath states and observables."""

import math

import numpy as np
import pytest

from app.models import ScenarioTag
from app.services import sampling_service
from app.utils.rng import random_stream, run_streams


def test_same_key_same_draws():
    first = random_stream(42, 7).uniform(size=5)
    second = random_stream(42, 7).uniform(size=5)
    np.testing.assert_array_equal(first, second)


def test_streams_are_distinct():
    assert not np.array_equal(random_stream(42, 0).uniform(size=5), random_stream(42, 1).uniform(size=5))
    assert not np.array_equal(random_stream(42, 0).uniform(size=5), random_stream(43, 0).uniform(size=5))


def test_run_streams_do_not_overlap_between_runs():
    run0 = run_streams(9, 0)
    run1 = run_streams(9, 1)
    assert not np.array_equal(run0["bath"].uniform(size=4), run1["bath"].uniform(size=4))


def test_instance_is_reproducible():
    a = sampling_service.sample_instance(30, ScenarioTag.A, run_streams(5, 0))
    b = sampling_service.sample_instance(30, ScenarioTag.A, run_streams(5, 0))
    np.testing.assert_array_equal(a[0].g, b[0].g)
    np.testing.assert_array_equal(a[1].alpha, b[1].alpha)
    np.testing.assert_array_equal(a[2].eps_ud, b[2].eps_ud)
    assert a[2].s10 == b[2].s10


def test_coupling_range():
    couplings = sampling_service.sample_couplings(1000, random_stream(1))
    assert np.all(np.abs(couplings.g) <= math.pi)


@pytest.mark.parametrize("scenario", list(ScenarioTag))
def test_bath_is_normalized(scenario):
    bath = sampling_service.sample_bath(200, scenario, random_stream(2))
    np.testing.assert_allclose(bath.up_weights + bath.down_weights, 1.0, atol=1e-12)


def test_scenario_c_is_phase_free():
    couplings, bath, observable = sampling_service.sample_instance(50, ScenarioTag.C, run_streams(3))
    assert np.all(bath.alpha.imag == 0) and np.all(bath.alpha.real >= 0)
    assert np.all(bath.beta.imag == 0) and np.all(bath.beta.real >= 0)
    assert np.all(observable.eps_ud.imag == 0) and np.all(observable.eps_ud.real >= 0)
    assert observable.s10.imag == 0
    assert np.all((observable.eps_uu >= 0) & (observable.eps_uu <= 1))
    assert observable.s00 >= 0 and observable.s11 >= 0


def test_scenario_b_restricts_bath_and_observable_phases():
    _, bath, observable = sampling_service.sample_instance(200, ScenarioTag.B, run_streams(4))
    for values in (bath.alpha, bath.beta, observable.eps_ud):
        phases = np.angle(values[np.abs(values) > 0])
        assert np.all((phases >= -1e-15) & (phases <= math.pi / 2 + 1e-15))
    assert np.all(observable.eps_dd >= 0)


def test_restricted_scenario_keeps_bath_phases():
    _, bath, observable = sampling_service.sample_instance(200, ScenarioTag.RESTRICTED_OBSERVABLE_ONLY, run_streams(6))
    assert np.all(observable.eps_ud.imag == 0)
    assert observable.s10.imag == 0
    assert np.any(np.angle(bath.alpha) < 0) and np.any(np.angle(bath.alpha) > math.pi / 2)
    assert observable.s00 >= 0 and observable.s11 >= 0
    assert np.all(observable.eps_uu >= 0) and np.all(observable.eps_dd >= 0)


@pytest.mark.parametrize("scenario", [ScenarioTag.B, ScenarioTag.C, ScenarioTag.RESTRICTED_OBSERVABLE_ONLY])
def test_system_diagonal_is_non_negative_outside_scenario_a(scenario):
    for seed in range(20):
        _, _, observable = sampling_service.sample_instance(2, scenario, run_streams(seed))
        assert 0 <= observable.s00 <= 1
        assert 0 <= observable.s11 <= 1


def test_scenario_a_allows_negative_diagonal_blocks():
    _, _, observable = sampling_service.sample_instance(200, ScenarioTag.A, run_streams(8))
    assert observable.eps_uu.min() < 0 < observable.eps_uu.max()
    assert -1 <= observable.s00 <= 1 and -1 <= observable.s11 <= 1
    assert abs(observable.s10) <= 1


def test_local_observable():
    observable = sampling_service.local_observable(0.5, -0.25, 0.1j, 4)
    np.testing.assert_array_equal(observable.eps_uu, np.ones(4))
    np.testing.assert_array_equal(observable.eps_ud, np.zeros(4))
    assert observable.s01 == -0.1j


def test_system_amplitudes_are_normalized():
    system = sampling_service.sample_system(random_stream(11))
    assert abs(system.a) ** 2 + abs(system.b) ** 2 == pytest.approx(1.0, abs=1e-12)


def test_coupling_mean_is_centred():
    n = 100_000
    couplings = sampling_service.sample_couplings(n, random_stream(12))
    assert abs(couplings.g.mean()) <= 3 * math.pi / math.sqrt(3 * n)


def test_up_weight_mean_is_one_half():
    n = 10_000
    bath = sampling_service.sample_bath(n, ScenarioTag.A, random_stream(13))
    assert abs(bath.up_weights.mean() - 0.5) <= 3 / math.sqrt(12 * n)
