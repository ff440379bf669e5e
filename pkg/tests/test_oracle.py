"""Brute-force oracles and the equivalence checks built on them."""

import math

import numpy as np
import pytest

from app.exceptions import BathTooLargeError
from app.models import BathState, BranchTag, CouplingSet, ScenarioTag, SystemAmplitudes
from app.services import evolution_service, oracle_service, sampling_service, verification_service


def _term_scale(terms) -> float:
    return math.fsum(terms.magnitudes.tolist())


def test_single_spin_has_four_terms(make_instance):
    couplings, bath, observable, _ = make_instance(1)
    terms = oracle_service.enumerate_terms(bath, observable, couplings, BranchTag.DIAG0)
    assert len(terms) == 4
    assert sorted(terms.energies.tolist()) == sorted([0.0, 0.0, -couplings.g[0], couplings.g[0]])


def test_zero_couplings_give_zero_energies(make_instance):
    _, bath, observable, _ = make_instance(3)
    terms = oracle_service.enumerate_terms(bath, observable, CouplingSet(g=np.zeros(3)), BranchTag.OFFDIAG1)
    assert len(terms) == 64
    assert np.all(terms.energies == 0)


@pytest.mark.parametrize("branch", list(BranchTag))
def test_energies_are_sorted(make_instance, branch):
    couplings, bath, observable, _ = make_instance(5)
    terms = oracle_service.enumerate_terms(bath, observable, couplings, branch)
    assert np.all(np.diff(terms.energies) >= 0)


@pytest.mark.parametrize("branch", list(BranchTag))
def test_sum_matches_product(make_instance, branch):
    couplings, bath, observable, _ = make_instance(6, seed=3)
    terms = oracle_service.enumerate_terms(bath, observable, couplings, branch)
    scale = _term_scale(terms)
    for t in (0.0, 0.37, 12.0, 99.5):
        by_sum = oracle_service.gamma_by_sum(terms, t)
        by_product = evolution_service.gamma(bath, observable, couplings, t, branch).to_complex()
        assert abs(by_sum - by_product) <= 1e-10 * scale


def test_sum_matches_product_for_eight_spins(make_instance):
    couplings, bath, observable, _ = make_instance(8, seed=12)
    for branch in BranchTag:
        terms = oracle_service.enumerate_terms(bath, observable, couplings, branch)
        scale = _term_scale(terms)
        for t in np.linspace(0.0, 90.0, 10):
            by_product = evolution_service.gamma(bath, observable, couplings, t, branch).to_complex()
            assert abs(oracle_service.gamma_by_sum(terms, t) - by_product) <= 1e-9 * scale


@pytest.mark.parametrize("branch", list(BranchTag))
def test_static_terms_sum_to_diagonal_part(make_instance, branch):
    couplings, bath, observable, _ = make_instance(5, seed=8)
    terms = oracle_service.enumerate_terms(bath, observable, couplings, branch)
    expected = evolution_service.gamma_diag(bath, observable, branch).to_complex()
    assert abs(terms.diagonal_sum() - expected) <= 1e-12 * _term_scale(terms)


def test_phase_free_scenario_has_no_phase_roughness(make_instance):
    couplings, bath, observable, _ = make_instance(6, scenario=ScenarioTag.C)
    terms = oracle_service.enumerate_terms(bath, observable, couplings, BranchTag.DIAG0)
    assert terms.phase_roughness() == 0.0


def test_random_phases_are_rough(make_instance):
    couplings, bath, observable, _ = make_instance(6, scenario=ScenarioTag.A)
    terms = oracle_service.enumerate_terms(bath, observable, couplings, BranchTag.DIAG0)
    assert terms.phase_roughness() > 0.5


def test_r_by_sum_at_zero_is_one(make_instance):
    couplings, bath, _, _ = make_instance(10)
    assert oracle_service.r_by_sum(bath, couplings, 0.0) == pytest.approx(1.0, abs=1e-12)


def test_r_by_sum_single_spin():
    bath = BathState(alpha=[0.6], beta=[0.8])
    couplings = CouplingSet(g=[2.0])
    t = 1.1
    expected = 0.36 * np.exp(2.2j) + 0.64 * np.exp(-2.2j)
    assert oracle_service.r_by_sum(bath, couplings, t) == pytest.approx(expected, abs=1e-15)


def test_r_by_sum_matches_product(make_instance):
    couplings, bath, _, _ = make_instance(12, seed=4)
    by_sum = oracle_service.r_by_sum(bath, couplings, 7.3)
    by_product = evolution_service.decoherence_factor(bath, couplings, 7.3)
    assert abs(by_sum - by_product) <= 1e-10


def test_statevector_local_observable_at_zero(make_instance):
    couplings, bath, _, _ = make_instance(4)
    local = sampling_service.local_observable(0.37, -0.5, 0.2, 4)
    system = SystemAmplitudes(a=1.0, b=0.0)
    assert oracle_service.statevector_expectation(system, bath, local, couplings, 0.0) == pytest.approx(0.37, abs=1e-12)


def test_statevector_identity_is_one(make_instance):
    couplings, bath, _, system = make_instance(6)
    identity = sampling_service.local_observable(1.0, 1.0, 0.0, 6)
    assert oracle_service.statevector_expectation(system, bath, identity, couplings, 42.0) == pytest.approx(1.0, abs=1e-12)


def test_statevector_matches_product_engine(make_instance):
    couplings, bath, observable, system = make_instance(10, seed=6)
    for t in (0.0, 2.5, 71.0):
        reference = oracle_service.statevector_expectation(system, bath, observable, couplings, t)
        engine = evolution_service.expectation(system, bath, observable, couplings, t)
        assert abs(reference - engine) <= 1e-9 * max(1.0, abs(reference))


def test_statevector_matches_reduced_coherence(make_instance):
    couplings, bath, _, system = make_instance(5, seed=2)
    t = 3.7
    state = oracle_service.evolved_state(system, bath, couplings, t)
    flat = state.reshape(2, -1)
    rho = flat @ flat.conj().T
    expected = evolution_service.reduced_density_matrix(system, bath, couplings, t)
    np.testing.assert_allclose(rho, expected, atol=1e-12)


@pytest.mark.parametrize(
    "call, n",
    [
        (lambda bath, obs, couplings, system: oracle_service.enumerate_terms(bath, obs, couplings, BranchTag.DIAG0), 13),
        (lambda bath, obs, couplings, system: oracle_service.statevector_expectation(system, bath, obs, couplings, 1.0), 13),
        (lambda bath, obs, couplings, system: oracle_service.r_by_sum(bath, couplings, 1.0), 21),
    ],
)
def test_oracles_refuse_large_baths(make_instance, call, n):
    couplings, bath, observable, system = make_instance(n)
    with pytest.raises(BathTooLargeError):
        call(bath, observable, couplings, system)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_time_average_check(n):
    assert verification_service.time_average(11 + n, n) < 1e-10


def test_individual_checks_are_small():
    assert verification_service.gamma_product_vs_sum(5, 6) < 1e-9
    assert verification_service.r_product_vs_sum(5, 6) < 1e-9
    assert verification_service.expectation_vs_statevector(5, 6) < 1e-9


def test_run_checks_passes_on_small_baths():
    report = verification_service.run_checks(max_n=4, trials=8, tolerance=1e-9, seed=3)
    assert report.passed
    assert [check.name for check in report.checks] == [
        "gamma_product_vs_sum",
        "r_product_vs_sum",
        "expectation_vs_statevector",
        "time_average",
    ]
    for check in report.checks:
        assert check.trials == 8
        assert 1 <= check.worst_n <= 4


def test_zero_tolerance_is_reported_as_failure():
    report = verification_service.run_checks(max_n=3, trials=6, tolerance=0.0, seed=0)
    assert not report.passed
    assert any("FAIL" in check.describe() for check in report.checks)


def test_terms_in_polar_form(make_instance):
    couplings, bath, observable, _ = make_instance(3, seed=9)
    terms = oracle_service.enumerate_terms(bath, observable, couplings, BranchTag.OFFDIAG1)
    np.testing.assert_allclose(terms.magnitudes * np.exp(1j * terms.phases), terms.coefficients, atol=1e-15)
    assert len(terms.entries) == 64
    assert terms.entries[0] == (terms.coefficients[0], terms.energies[0])
