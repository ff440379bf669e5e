"""Time evolution of the spin-bath model.

Every dynamical quantity is an N-fold product of per-spin factors, each
a short trigonometric polynomial in g_i t. Products are accumulated in
extended range, so one time point costs O(N) regardless of how far the
result drops below the native double range.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from app.exceptions import HermiticityError, LengthMismatchError, NonFiniteError, NormalizationDegenerateError
from app.jobs import run_ordered, time_chunks
from app.models import (
    BathState,
    BranchTag,
    CouplingSet,
    ObservableSum,
    ProductObservable,
    SystemAmplitudes,
    TimeGrid,
    TimeSeries,
)
from app.utils.xrange import (
    ScaledComplex,
    sc_add,
    sc_from,
    sc_mul,
    sc_to,
    scaled_add,
    scaled_log10_abs,
    scaled_product,
)

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
DEGENERACY_DECADES = 13.0
HERMITICITY_TOLERANCE = 1e-10


@dataclass(frozen=True)
class FactorCoefficients:
    """Per-spin coefficients of one Gamma branch.

    Diag0:    f_i = const_i + 2 Re(z_i e^{-i g_i t})
    OffDiag1: f_i = plus_i e^{i g_i t} + minus_i e^{-i g_i t} + static_i
    """
    branch: BranchTag
    const: Optional[np.ndarray] = None
    z: Optional[np.ndarray] = None
    plus: Optional[np.ndarray] = None
    minus: Optional[np.ndarray] = None
    static: Optional[np.ndarray] = None

    @classmethod
    def for_observable(cls, bath: BathState, obs: ProductObservable, branch: BranchTag) -> "FactorCoefficients":
        up, down = bath.up_weights, bath.down_weights
        z = bath.cross * obs.eps_ud
        if BranchTag(branch) == BranchTag.DIAG0:
            return cls(branch=BranchTag.DIAG0, const=up * obs.eps_uu + down * obs.eps_dd, z=z)
        return cls(
            branch=BranchTag.OFFDIAG1,
            plus=up * obs.eps_uu,
            minus=down * obs.eps_dd,
            static=2.0 * z.real,
        )

    @classmethod
    def for_decoherence(cls, bath: BathState) -> "FactorCoefficients":
        """r(t): the OffDiag1 factors of the identity bath observable."""
        return cls(
            branch=BranchTag.OFFDIAG1,
            plus=bath.up_weights,
            minus=bath.down_weights,
            static=np.zeros(bath.n),
        )

    def factors(self, g: np.ndarray, times: np.ndarray) -> np.ndarray:
        """(len(times), N) matrix of factor values."""
        theta = np.remainder(np.multiply.outer(times, g), TWO_PI)
        cos, sin = np.cos(theta), np.sin(theta)
        values = np.empty(theta.shape, dtype=np.complex128)
        if self.branch == BranchTag.DIAG0:
            values.real = self.const + 2.0 * (self.z.real * cos + self.z.imag * sin)
            values.imag = 0.0
        else:
            values.real = (self.plus + self.minus) * cos + self.static
            values.imag = (self.plus - self.minus) * sin
        return values

    def static_factors(self) -> np.ndarray:
        """The time-independent part of every factor."""
        part = self.const if self.branch == BranchTag.DIAG0 else self.static
        return part.astype(np.complex128)


def _check_lengths(**sizes: int) -> int:
    if len(set(sizes.values())) != 1:
        raise LengthMismatchError(**sizes)
    return next(iter(sizes.values()))


def _check_time(t: float) -> float:
    t = float(t)
    if not math.isfinite(t):
        raise NonFiniteError(f"time must be finite, got {t}")
    return t


class EvolutionService:
    """O(N)-per-time-point engine for r(t), Gamma, Lambda and expectation values."""

    def product_arrays(self, coefficients: FactorCoefficients, g: np.ndarray, times: np.ndarray, threads: Optional[int] = None):
        """Extended-range products at every time, as (mantissa, exp2) arrays."""
        times = np.asarray(times, dtype=np.float64).reshape(-1)

        def evaluate(chunk):
            return scaled_product(coefficients.factors(g, chunk))

        results = run_ordered(evaluate, time_chunks(times, g.size), threads)
        mantissa = np.concatenate([m for m, _ in results])
        exp2 = np.concatenate([e for _, e in results])
        return mantissa, exp2

    def _product_at(self, coefficients: FactorCoefficients, g: np.ndarray, t: float) -> ScaledComplex:
        mantissa, exp2 = self.product_arrays(coefficients, g, np.array([_check_time(t)]), threads=1)
        return ScaledComplex.from_arrays(mantissa[0], exp2[0])

    def decoherence_factor(self, bath: BathState, couplings: CouplingSet, t: float) -> complex:
        """r(t) = prod_i (|alpha_i|^2 e^{i g_i t} + |beta_i|^2 e^{-i g_i t})."""
        _check_lengths(bath=bath.n, couplings=couplings.n)
        return sc_to(self._product_at(FactorCoefficients.for_decoherence(bath), couplings.g, t))

    def decoherence_series(self, bath: BathState, couplings: CouplingSet, grid: TimeGrid, threads: Optional[int] = None) -> TimeSeries:
        """log10|r(t)| on a grid, computed in extended range."""
        _check_lengths(bath=bath.n, couplings=couplings.n)
        times = grid.times()
        mantissa, exp2 = self.product_arrays(FactorCoefficients.for_decoherence(bath), couplings.g, times, threads)
        return TimeSeries(times=times, values=scaled_log10_abs(mantissa, exp2))

    def gamma(
        self,
        bath: BathState,
        obs: ProductObservable,
        couplings: CouplingSet,
        t: float,
        branch: BranchTag,
    ) -> ScaledComplex:
        """Gamma_0(t) or Gamma_1(t), factor by factor in extended range."""
        _check_lengths(bath=bath.n, observable=obs.n, couplings=couplings.n)
        return self._product_at(FactorCoefficients.for_observable(bath, obs, branch), couplings.g, t)

    def gamma_diag(self, bath: BathState, obs: ProductObservable, branch: BranchTag) -> ScaledComplex:
        """Gamma^d: the product of the time-independent parts of the factors."""
        _check_lengths(bath=bath.n, observable=obs.n)
        coefficients = FactorCoefficients.for_observable(bath, obs, branch)
        mantissa, exp2 = scaled_product(coefficients.static_factors())
        return ScaledComplex.from_arrays(mantissa, exp2)

    def lambda_series(
        self,
        bath: BathState,
        obs: ProductObservable,
        couplings: CouplingSet,
        grid: TimeGrid,
        branch: BranchTag,
        threads: Optional[int] = None,
    ) -> TimeSeries:
        """log10(|Lambda(t)| / |Lambda(0)|) with Lambda = Gamma - Gamma^d."""
        _check_lengths(bath=bath.n, observable=obs.n, couplings=couplings.n)
        coefficients = FactorCoefficients.for_observable(bath, obs, branch)
        times = grid.times()

        gm, ge = self.product_arrays(coefficients, couplings.g, times, threads)
        dm, de = scaled_product(coefficients.static_factors())
        lm, le = scaled_add(gm, ge, -dm, de)
        log_lambda = scaled_log10_abs(lm, le)

        if times[0] == 0.0:
            log_lambda0 = log_lambda[0]
            log_gamma0 = scaled_log10_abs(gm[0], ge[0])
        else:
            g0m, g0e = self.product_arrays(coefficients, couplings.g, np.zeros(1), threads=1)
            l0m, l0e = scaled_add(g0m, g0e, -dm, de)
            log_lambda0 = scaled_log10_abs(l0m, l0e)[0]
            log_gamma0 = scaled_log10_abs(g0m, g0e)[0]

        scale = max(float(log_gamma0), float(scaled_log10_abs(dm, de)))
        if not math.isfinite(log_lambda0) or log_lambda0 < scale - DEGENERACY_DECADES:
            logger.info(f"Lambda(0) vanishes at N={bath.n} (log10|Lambda(0)|={log_lambda0:.3f}, scale={scale:.3f})")
            raise NormalizationDegenerateError(
                f"|Lambda(0)| is negligible against |Gamma| (log10 {log_lambda0:.3f} vs {scale:.3f}); "
                "the instance has no off-diagonal content to track"
            )

        return TimeSeries(times=times, values=log_lambda - log_lambda0)

    def expectation(
        self,
        sys: SystemAmplitudes,
        bath: BathState,
        obs: ProductObservable,
        couplings: CouplingSet,
        t: float,
    ) -> float:
        """<O>(t) = |a|^2 s00 Gamma_0(t) + |b|^2 s11 Gamma_0(-t) + 2 Re[a b^* s10 Gamma_1(t)].

        The |1> block sees the bath state E_1(t) = E_0(-t), hence Gamma_0(-t).
        """
        t = _check_time(t)
        forward = self.gamma(bath, obs, couplings, t, BranchTag.DIAG0)
        backward = self.gamma(bath, obs, couplings, -t, BranchTag.DIAG0)
        interference = self.gamma(bath, obs, couplings, t, BranchTag.OFFDIAG1)
        return self._assemble(sys, obs, forward, backward, interference)

    def diag_expectation(self, sys: SystemAmplitudes, bath: BathState, obs: ProductObservable) -> float:
        """<O>_d: the expectation value with every time-dependent term dropped."""
        diagonal = self.gamma_diag(bath, obs, BranchTag.DIAG0)
        interference = self.gamma_diag(bath, obs, BranchTag.OFFDIAG1)
        return self._assemble(sys, obs, diagonal, diagonal, interference)

    def expectation_sum(
        self,
        sys: SystemAmplitudes,
        bath: BathState,
        observable: ObservableSum,
        couplings: CouplingSet,
        t: float,
    ) -> float:
        """Expectation of a multi-term observable by linearity."""
        return math.fsum(self.expectation(sys, bath, term, couplings, t) for term in observable.terms)

    def diag_expectation_sum(self, sys: SystemAmplitudes, bath: BathState, observable: ObservableSum) -> float:
        """Energy-diagonal expectation of a multi-term observable."""
        return math.fsum(self.diag_expectation(sys, bath, term) for term in observable.terms)

    def _assemble(
        self,
        sys: SystemAmplitudes,
        obs: ProductObservable,
        upper: ScaledComplex,
        lower: ScaledComplex,
        interference: ScaledComplex,
    ) -> float:
        terms = [
            sc_mul(sc_from(abs(sys.a) ** 2 * obs.s00), upper),
            sc_mul(sc_from(abs(sys.b) ** 2 * obs.s11), lower),
        ]
        cross = sc_mul(sc_from(sys.coherence * obs.s10), interference)
        terms += [cross, cross.conjugate()]

        total = terms[0]
        for term in terms[1:]:
            total = sc_add(total, term)
        value = sc_to(total)

        scale = max(abs(sc_to(term)) for term in terms)
        if abs(value.imag) > HERMITICITY_TOLERANCE * max(scale, abs(value.real), np.finfo(float).tiny):
            raise HermiticityError(f"expectation value has imaginary part {value.imag!r} (real {value.real!r})")
        return value.real

    def reduced_coherence(self, sys: SystemAmplitudes, bath: BathState, couplings: CouplingSet, t: float) -> complex:
        """a b^* r(t), the off-diagonal element of the reduced system state."""
        return sys.coherence * self.decoherence_factor(bath, couplings, t)

    def reduced_density_matrix(self, sys: SystemAmplitudes, bath: BathState, couplings: CouplingSet, t: float) -> np.ndarray:
        """The 2x2 system density matrix after tracing out the bath."""
        coherence = self.reduced_coherence(sys, bath, couplings, t)
        return np.array(
            [[abs(sys.a) ** 2, coherence], [np.conj(coherence), abs(sys.b) ** 2]],
            dtype=np.complex128,
        )

    def log_mean_prediction(self, bath: BathState) -> float:
        """Long-time mean of log10|r(t)| for incommensurate couplings.

        Each factor averages to log10 max(|alpha_i|^2, |beta_i|^2) over its phase.
        """
        return float(np.sum(np.log10(np.maximum(bath.up_weights, bath.down_weights))))


# Service instance
evolution_service = EvolutionService()
