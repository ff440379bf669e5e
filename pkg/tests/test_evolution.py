"""Product engine for r(t), Gamma, Lambda and expectation values."""

import math

import numpy as np
import pytest

from app.config import settings
from app.exceptions import LengthMismatchError, NonFiniteError, NormalizationDegenerateError
from app.models import (
    BathState,
    BranchTag,
    CouplingSet,
    ObservableSum,
    ProductObservable,
    ScenarioTag,
    SystemAmplitudes,
    TimeGrid,
)
from app.services import evolution_service, sampling_service
from app.utils.rng import run_streams


def test_decoherence_factor_starts_at_one(make_instance):
    couplings, bath, _, _ = make_instance(50)
    assert evolution_service.decoherence_factor(bath, couplings, 0.0) == pytest.approx(1.0, abs=1e-12)


def test_single_spin_closed_form():
    bath = BathState(alpha=[0.6], beta=[0.8j])
    couplings = CouplingSet(g=[1.3])
    t = 2.7
    expected = 0.36 * np.exp(1.3j * t) + 0.64 * np.exp(-1.3j * t)
    assert evolution_service.decoherence_factor(bath, couplings, t) == pytest.approx(expected, abs=1e-14)


def test_equal_superposition_gives_cosine_product(equal_bath):
    bath = equal_bath(3)
    couplings = CouplingSet(g=[0.5, 1.0, 2.0])
    t = 0.9
    expected = np.prod(np.cos(np.array([0.5, 1.0, 2.0]) * t))
    assert evolution_service.decoherence_factor(bath, couplings, t) == pytest.approx(expected, abs=1e-14)


def test_local_observable_reduces_to_decoherence_factor(make_instance):
    couplings, bath, _, _ = make_instance(40)
    local = sampling_service.local_observable(0.3, -0.2, 0.5 + 0.1j, 40)
    for t in (0.0, 1.7, 55.0):
        gamma0 = evolution_service.gamma(bath, local, couplings, t, BranchTag.DIAG0).to_complex()
        gamma1 = evolution_service.gamma(bath, local, couplings, t, BranchTag.OFFDIAG1).to_complex()
        r = evolution_service.decoherence_factor(bath, couplings, t)
        assert gamma0 == pytest.approx(1.0, abs=1e-12)
        assert abs(gamma1 - r) <= 1e-12 * max(abs(r), 1e-300)


def test_expectation_at_zero_is_s00_for_ground_system(make_instance):
    couplings, bath, _, _ = make_instance(10)
    local = sampling_service.local_observable(0.37, -0.5, 0.2, 10)
    system = SystemAmplitudes(a=1.0, b=0.0)
    assert evolution_service.expectation(system, bath, local, couplings, 0.0) == pytest.approx(0.37, abs=1e-12)


@pytest.mark.parametrize("t", [0.0, 3.1, 250.0])
def test_identity_observable_conserves_norm(make_instance, t):
    couplings, bath, _, system = make_instance(25)
    identity = sampling_service.local_observable(1.0, 1.0, 0.0, 25)
    assert evolution_service.expectation(system, bath, identity, couplings, t) == pytest.approx(1.0, abs=1e-12)


def test_local_expectation_tracks_reduced_density_matrix(make_instance):
    couplings, bath, _, system = make_instance(12)
    local = sampling_service.local_observable(0.4, -0.3, 0.25 - 0.5j, 12)
    t = 4.2
    rho = evolution_service.reduced_density_matrix(system, bath, couplings, t)
    system_operator = np.array([[0.4, np.conj(0.25 - 0.5j)], [0.25 - 0.5j, -0.3]])
    expected = np.trace(rho @ system_operator).real
    assert evolution_service.expectation(system, bath, local, couplings, t) == pytest.approx(expected, abs=1e-12)


def test_reduced_density_matrix_is_hermitian_with_unit_trace(make_instance):
    couplings, bath, _, system = make_instance(30)
    rho = evolution_service.reduced_density_matrix(system, bath, couplings, 12.5)
    np.testing.assert_allclose(rho, rho.conj().T, atol=1e-15)
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
    assert abs(rho[0, 1]) <= abs(system.coherence) + 1e-15


def test_expectation_is_real_for_random_instances(make_instance):
    for seed in range(50):
        couplings, bath, observable, system = make_instance(20, seed=seed)
        value = evolution_service.expectation(system, bath, observable, couplings, 17.0)
        assert isinstance(value, float)
        assert math.isfinite(value)


def test_expectation_sum_is_linear(make_instance):
    couplings, bath, first, system = make_instance(8, seed=1)
    _, _, second, _ = make_instance(8, seed=2)
    both = ObservableSum(terms=[first, second])
    t = 3.3
    expected = (
        evolution_service.expectation(system, bath, first, couplings, t)
        + evolution_service.expectation(system, bath, second, couplings, t)
    )
    assert evolution_service.expectation_sum(system, bath, both, couplings, t) == pytest.approx(expected, abs=1e-14)
    diag = evolution_service.diag_expectation(system, bath, first) + evolution_service.diag_expectation(system, bath, second)
    assert evolution_service.diag_expectation_sum(system, bath, both) == pytest.approx(diag, abs=1e-14)


def test_time_average_of_expectation_is_diagonal_part(make_instance, commensurate_couplings):
    _, bath, observable, system = make_instance(4, seed=21)
    couplings = commensurate_couplings(4)
    points = 3 ** 4 + 1
    values = [
        evolution_service.expectation(system, bath, observable, couplings, k / points) for k in range(points)
    ]
    expected = evolution_service.diag_expectation(system, bath, observable)
    assert math.fsum(values) / points == pytest.approx(expected, abs=1e-12)


def test_gamma_diag_is_product_of_static_parts(make_instance):
    _, bath, observable, _ = make_instance(6)
    diag0 = evolution_service.gamma_diag(bath, observable, BranchTag.DIAG0).to_complex()
    diag1 = evolution_service.gamma_diag(bath, observable, BranchTag.OFFDIAG1).to_complex()
    assert diag0 == pytest.approx(np.prod(bath.up_weights * observable.eps_uu + bath.down_weights * observable.eps_dd))
    assert diag1 == pytest.approx(np.prod(2.0 * (bath.cross * observable.eps_ud).real))


def test_lambda_series_is_normalized(make_instance):
    couplings, bath, observable, _ = make_instance(100)
    grid = TimeGrid(t_end=50.0, points=201)
    for branch in BranchTag:
        series = evolution_service.lambda_series(bath, observable, couplings, grid, branch)
        assert len(series) == 201
        assert series.values[0] == 0.0
        assert np.all(np.isfinite(series.values))


def test_lambda_series_with_late_start(make_instance):
    couplings, bath, observable, _ = make_instance(20)
    full = evolution_service.lambda_series(bath, observable, couplings, TimeGrid(t_end=10.0, points=11), BranchTag.DIAG0)
    late = evolution_service.lambda_series(bath, observable, couplings, TimeGrid(t_start=5.0, t_end=10.0, points=6), BranchTag.DIAG0)
    np.testing.assert_allclose(late.values, full.values[5:], atol=1e-9)


def test_zero_offdiagonal_blocks_are_degenerate_for_diag0(make_instance):
    couplings, bath, observable, _ = make_instance(10)
    flat = ProductObservable(
        s00=observable.s00,
        s11=observable.s11,
        s10=observable.s10,
        eps_uu=observable.eps_uu,
        eps_dd=observable.eps_dd,
        eps_ud=np.zeros(10),
    )
    grid = TimeGrid(t_end=10.0, points=11)
    with pytest.raises(NormalizationDegenerateError):
        evolution_service.lambda_series(bath, flat, couplings, grid, BranchTag.DIAG0)

    # Gamma_1^d vanishes, so Lambda = Gamma_1 and the branch stays usable
    series = evolution_service.lambda_series(bath, flat, couplings, grid, BranchTag.OFFDIAG1)
    assert series.values[0] == 0.0


def test_large_bath_does_not_underflow():
    n = 10_000
    couplings, bath, _ = sampling_service.sample_instance(n, ScenarioTag.A, run_streams(4))
    series = evolution_service.decoherence_series(bath, couplings, TimeGrid(t_end=10.0, points=11))
    assert np.all(np.isfinite(series.values))
    assert series.values[-1] < -400


def test_lambda_series_subtracts_scalar_diagonal_part(make_instance):
    couplings, bath, observable, _ = make_instance(8, seed=5)
    series = evolution_service.lambda_series(bath, observable, couplings, TimeGrid(t_end=10.0, points=11), BranchTag.DIAG0)
    assert series.values.shape == (11,)
    assert series.values[0] == 0.0

    t = series.times[4]
    gamma = evolution_service.gamma(bath, observable, couplings, t, BranchTag.DIAG0)
    diag = evolution_service.gamma_diag(bath, observable, BranchTag.DIAG0)
    gamma0 = evolution_service.gamma(bath, observable, couplings, 0.0, BranchTag.DIAG0)
    expected = math.log10(abs((gamma - diag).to_complex()) / abs((gamma0 - diag).to_complex()))
    assert series.values[4] == pytest.approx(expected, abs=1e-9)


@pytest.mark.slow
def test_million_spin_gamma_stays_in_range(monkeypatch):
    monkeypatch.setattr(settings, "debug_checks", True)
    couplings, bath, observable = sampling_service.sample_instance(1_000_000, ScenarioTag.A, run_streams(0))
    for branch in BranchTag:
        for value in (
            evolution_service.gamma(bath, observable, couplings, 37.0, branch),
            evolution_service.gamma_diag(bath, observable, branch),
        ):
            assert math.isfinite(value.log10_abs())
            assert 0.5 <= abs(value.mantissa) < 1.0
    assert evolution_service.gamma(bath, observable, couplings, 37.0, BranchTag.DIAG0).log10_abs() < -300


def test_results_do_not_depend_on_thread_count(make_instance, monkeypatch):
    monkeypatch.setattr(settings, "chunk_elements", 64 * 30)
    couplings, bath, observable, _ = make_instance(30)
    grid = TimeGrid(t_end=100.0, points=1001)
    single = evolution_service.lambda_series(bath, observable, couplings, grid, BranchTag.DIAG0, threads=1)
    pooled = evolution_service.lambda_series(bath, observable, couplings, grid, BranchTag.DIAG0, threads=4)
    np.testing.assert_array_equal(single.values, pooled.values)


def test_chunking_does_not_change_values(make_instance, monkeypatch):
    couplings, bath, observable, _ = make_instance(30)
    grid = TimeGrid(t_end=100.0, points=1001)
    whole = evolution_service.lambda_series(bath, observable, couplings, grid, BranchTag.OFFDIAG1, threads=1)
    monkeypatch.setattr(settings, "chunk_elements", 30 * 7)
    chunked = evolution_service.lambda_series(bath, observable, couplings, grid, BranchTag.OFFDIAG1, threads=1)
    np.testing.assert_allclose(chunked.values, whole.values, rtol=0, atol=1e-12)



def test_length_mismatch(make_instance):
    couplings, bath, observable, _ = make_instance(5)
    with pytest.raises(LengthMismatchError):
        evolution_service.decoherence_factor(bath, CouplingSet(g=[0.1, 0.2]), 1.0)
    with pytest.raises(LengthMismatchError):
        evolution_service.gamma(bath, sampling_service.local_observable(1, 1, 0, 4), couplings, 1.0, BranchTag.DIAG0)


def test_non_finite_time(make_instance):
    couplings, bath, _, _ = make_instance(5)
    with pytest.raises(NonFiniteError):
        evolution_service.decoherence_factor(bath, couplings, math.inf)


def test_commensurate_couplings_recur(make_instance):
    _, bath, observable, _ = make_instance(7)
    period = 3.0
    couplings = CouplingSet(g=2.0 * math.pi * np.array([1, -2, 3, 5, -8, 13, 1]) / period)
    for t in (0.4, 2.2):
        r_now = evolution_service.decoherence_factor(bath, couplings, t)
        r_later = evolution_service.decoherence_factor(bath, couplings, t + period)
        assert abs(r_now - r_later) <= 1e-9
        for branch in BranchTag:
            now = evolution_service.gamma(bath, observable, couplings, t, branch).to_complex()
            later = evolution_service.gamma(bath, observable, couplings, t + period, branch).to_complex()
            assert abs(now - later) <= 1e-9 * max(1.0, abs(now))


def test_decoherence_factor_is_bounded(make_instance):
    couplings, bath, _, _ = make_instance(30)
    for t in np.linspace(0.0, 500.0, 25):
        assert abs(evolution_service.decoherence_factor(bath, couplings, t)) <= 1.0 + 1e-12
