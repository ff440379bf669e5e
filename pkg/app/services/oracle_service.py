"""Brute-force reference implementations for small baths.

These paths share no arithmetic with the product engine: Gamma and r(t)
are summed term by term over explicit enumerations, and expectation
values are read off an evolved 2^(N+1) state vector.
"""

import logging
import math

import numpy as np

from app.config import settings
from app.exceptions import BathTooLargeError, HermiticityError, LengthMismatchError
from app.models import (
    BathState,
    BranchTag,
    CouplingSet,
    ProductObservable,
    SystemAmplitudes,
    TermList,
)

logger = logging.getLogger(__name__)

NORM_TOLERANCE = 1e-12
IMAGINARY_TOLERANCE = 1e-8


def _fsum_complex(values: np.ndarray) -> complex:
    return complex(math.fsum(values.real.tolist()), math.fsum(values.imag.tolist()))


def _expand(per_spin_values: np.ndarray, combine) -> np.ndarray:
    """Flatten per-spin choices into all assignments, spin 1 most significant."""
    total = per_spin_values[0]
    for row in per_spin_values[1:]:
        total = combine.outer(total, row).ravel()
    return total


def _check_size(n: int, limit: int, oracle: str) -> None:
    if n > limit:
        raise BathTooLargeError(n, limit, oracle)


class OracleService:
    """Independent checks of the product engine at desk scale."""

    def enumerate_terms(
        self,
        bath: BathState,
        obs: ProductObservable,
        couplings: CouplingSet,
        branch: BranchTag,
    ) -> TermList:
        """All 4^N (c_lambda, E_lambda) pairs of one Gamma branch.

        Per spin the four choices are, in order, the up-up, down-down,
        up-down and down-up matrix elements of the bath observable.
        """
        n = couplings.n
        if not bath.n == obs.n == n:
            raise LengthMismatchError(bath=bath.n, observable=obs.n, couplings=n)
        _check_size(n, settings.max_term_spins, "enumerate_terms")

        branch = BranchTag(branch)
        z = bath.cross * obs.eps_ud
        coefficients = np.stack(
            [bath.up_weights * obs.eps_uu, bath.down_weights * obs.eps_dd, z, np.conj(z)], axis=1
        ).astype(np.complex128)

        g = couplings.g
        zero = np.zeros(n)
        if branch == BranchTag.DIAG0:
            energies = np.stack([zero, zero, -g, g], axis=1)
            static = np.tile([True, True, False, False], (n, 1))
        else:
            energies = np.stack([g, -g, zero, zero], axis=1)
            static = np.tile([False, False, True, True], (n, 1))

        c = _expand(coefficients, np.multiply)
        e = _expand(energies, np.add)
        s = _expand(static, np.logical_and)

        order = np.argsort(e, kind="stable")
        logger.debug(f"Enumerated {c.size} terms for N={n}, branch {branch.value}")
        return TermList(coefficients=c[order], energies=e[order], static=s[order], n=n, branch=branch)

    def gamma_by_sum(self, terms: TermList, t: float) -> complex:
        """sum_lambda c_lambda e^{i E_lambda t}, compensated."""
        return _fsum_complex(terms.coefficients * np.exp(1j * terms.energies * float(t)))

    def r_by_sum(self, bath: BathState, couplings: CouplingSet, t: float) -> complex:
        """r(t) summed over all 2^N bath configurations."""
        n = couplings.n
        if bath.n != n:
            raise LengthMismatchError(bath=bath.n, couplings=n)
        _check_size(n, settings.max_rsum_spins, "r_by_sum")

        weights = _expand(np.stack([bath.up_weights, bath.down_weights], axis=1), np.multiply)
        energies = _expand(np.stack([couplings.g, -couplings.g], axis=1), np.add)
        return _fsum_complex(weights * np.exp(1j * energies * float(t)))

    def evolved_state(self, sys: SystemAmplitudes, bath: BathState, couplings: CouplingSet, t: float) -> np.ndarray:
        """Joint state at time t, shape (2,) * (N + 1), system axis first.

        System |0> advances every bath spin by e^{+-i g t/2} (up/down),
        system |1> by the opposite phases.
        """
        n = couplings.n
        if bath.n != n:
            raise LengthMismatchError(bath=bath.n, couplings=n)
        _check_size(n, settings.max_statevector_spins, "statevector_expectation")

        half = 0.5 * couplings.g * float(t)
        blocks = []
        for sign, amplitude in ((1.0, sys.a), (-1.0, sys.b)):
            spins = np.stack(
                [bath.alpha * np.exp(1j * sign * half), bath.beta * np.exp(-1j * sign * half)], axis=1
            )
            blocks.append(amplitude * _expand(spins, np.multiply))

        state = np.stack(blocks).reshape((2,) * (n + 1))
        norm = np.vdot(state, state).real
        initial = (abs(sys.a) ** 2 + abs(sys.b) ** 2) * np.prod(bath.up_weights + bath.down_weights)
        if abs(norm - initial) > NORM_TOLERANCE:
            raise HermiticityError(f"state norm drifted to {norm!r} at t={t}")
        return state

    def apply_observable(self, obs: ProductObservable, state: np.ndarray) -> np.ndarray:
        """O|psi> for a product observable, one tensor factor at a time."""
        result = state
        for axis in range(1, obs.n + 1):
            i = axis - 1
            block = np.array(
                [[obs.eps_uu[i], obs.eps_ud[i]], [np.conj(obs.eps_ud[i]), obs.eps_dd[i]]],
                dtype=np.complex128,
            )
            result = np.moveaxis(np.tensordot(block, result, axes=([1], [axis])), 0, axis)

        system = np.array([[obs.s00, obs.s01], [obs.s10, obs.s11]], dtype=np.complex128)
        return np.tensordot(system, result, axes=([1], [0]))

    def statevector_expectation(
        self,
        sys: SystemAmplitudes,
        bath: BathState,
        obs: ProductObservable,
        couplings: CouplingSet,
        t: float,
    ) -> float:
        """<Psi(t)|O|Psi(t)> from the explicit joint state."""
        if obs.n != couplings.n:
            raise LengthMismatchError(observable=obs.n, couplings=couplings.n)
        state = self.evolved_state(sys, bath, couplings, t)
        value = np.vdot(state, self.apply_observable(obs, state))

        if abs(value.imag) > IMAGINARY_TOLERANCE * max(1.0, abs(value.real)):
            raise HermiticityError(f"state-vector expectation has imaginary part {value.imag!r}")
        return float(value.real)


# Service instance
oracle_service = OracleService()
