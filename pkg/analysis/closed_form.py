"""
Closed-Form MPD Solution
Explicit solution of the unmatched-count differential equations on CLV-B graphs

For the degree classes d_1 < ... < d_l the scaled unmatched counts
z_d = -k_d * Y_d satisfy

    dz_d/dt = k_d (1 - e^{z_d}) prod_{d' < d} e^{z_{d'}},   z_d(0) = -k_d f_d

whose solution is a chain of constants C_i and auxiliary functions alpha_i.
Everything below is evaluated on log(alpha_i) and log(C_i): alpha grows like
an iterated power and overflows doubles long before the z values stop
mattering.
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
from robot.api import logger

from analysis.errors import AnalysisError
from generators.degree_profiles import DegreeProfile

__all__ = ['AnalyticSolution', 'closed_form_solution', 'asymptotic_solution', 'mpd_trajectory']


def _logaddexp(x: float, y: float) -> float:
    if x == -math.inf:
        return y
    if y == -math.inf:
        return x
    if x > y:
        return x + math.log1p(math.exp(y - x))
    return y + math.log1p(math.exp(x - y))


def _log_expm1(x: float) -> float:
    """log(e^x - 1) for x >= 0."""
    if x <= 0.0:
        return -math.inf
    if x > 1.0:
        return x + math.log1p(-math.exp(-x))
    return math.log(math.expm1(x))


@dataclass(frozen=True)
class AnalyticSolution:
    """
    Evaluable solution for one grouped profile.

    Attributes:
        degrees: Unique expected degrees, ascending
        sizes: Class sizes f_d (finite) or fractions lambda_d (asymptotic)
        rates: k_d = -log(1 - d/m) (finite) or d (asymptotic); 0 for a degree-0 class
        log_constants: log C_d (-inf for an empty class)
        horizon: End of the process, m (finite) or 1 (asymptotic)
        asymptotic: Which substitution produced the solution
    """

    degrees: np.ndarray
    sizes: np.ndarray
    rates: np.ndarray
    log_constants: np.ndarray
    horizon: float
    asymptotic: bool = False

    def __len__(self) -> int:
        return len(self.degrees)

    @property
    def constants(self) -> np.ndarray:
        """C_d; may be inf where only log C_d is representable."""
        with np.errstate(over='ignore'):
            return np.exp(self.log_constants)

    def log_alpha(self, t: float) -> np.ndarray:
        """
        log alpha_d(t) for every class (nan for the first positive class, which has none).
        """
        return self._evaluate(t)[1]

    def z(self, t: float) -> np.ndarray:
        """
        Solution values z_d(t) for every class.

        Args:
            t: Time in [0, horizon]

        Returns:
            Array of z values (<= 0)
        """
        return self._evaluate(t)[0]

    def unmatched(self, t: Optional[float] = None) -> np.ndarray:
        """Expected unmatched count (or fraction) -z_d(t)/k_d per class; t defaults to the horizon."""
        z = self.z(self.horizon if t is None else t)
        out = np.array(self.sizes, dtype=np.float64)
        positive = self.rates > 0
        out[positive] = -z[positive] / self.rates[positive]
        return out

    def matched(self, t: Optional[float] = None) -> float:
        """Expected number (or fraction) of matched offline nodes at time t."""
        return math.fsum(self.sizes) - math.fsum(self.unmatched(t))

    def _evaluate(self, t: float):
        count = len(self.degrees)
        z = np.zeros(count)
        log_alpha = np.full(count, np.nan)
        exponent = None
        next_log_alpha = None
        previous_rate = None
        rates = self.rates.tolist()
        log_constants = self.log_constants.tolist()
        for i in range(count):
            rate = rates[i]
            if rate == 0.0:
                continue
            if previous_rate is None:
                exponent = rate * t
            else:
                log_alpha[i] = next_log_alpha
                exponent = (rate / previous_rate) * next_log_alpha
            z[i] = -_logaddexp(0.0, log_constants[i] - exponent)
            next_log_alpha = _logaddexp(exponent, log_constants[i])
            previous_rate = rate
        return z, log_alpha


def _build(degrees: np.ndarray, sizes: np.ndarray, rates: np.ndarray,
           horizon: float, asymptotic: bool) -> AnalyticSolution:
    log_constants = np.full(len(degrees), -math.inf)
    next_log_alpha = None
    previous_rate = None
    for i, (rate, size) in enumerate(zip(rates.tolist(), sizes.tolist())):
        if rate == 0.0:
            continue
        exponent = 0.0 if previous_rate is None else (rate / previous_rate) * next_log_alpha
        log_constants[i] = exponent + _log_expm1(rate * size)
        next_log_alpha = _logaddexp(exponent, log_constants[i])
        previous_rate = rate
    return AnalyticSolution(degrees, sizes, rates, log_constants, horizon, asymptotic)


def closed_form_solution(profile: DegreeProfile, n: Optional[int], m: int) -> AnalyticSolution:
    """
    Finite-size solution with k_d = -log(1 - d/m) and class sizes f_d.

    Args:
        profile: Degree profile (grouped profiles are scaled by n)
        n: Number of offline nodes (may be None for per-node profiles)
        m: Number of online nodes

    Returns:
        AnalyticSolution with horizon m

    Raises:
        AnalysisError: if some expected degree is >= m
    """
    if m < 1:
        raise AnalysisError(f"Need at least one online node, got m={m}")
    view = profile.grouped_view(n)
    degrees = np.asarray(view.degrees, dtype=np.float64)
    if len(degrees) and degrees[-1] >= m:
        logger.error(f"Expected degree {degrees[-1]} is not below m={m}")
        raise AnalysisError(
            f"expected degree {degrees[-1]} >= m={m}: rate -log(1 - d/m) is undefined")
    rates = -np.log1p(-degrees / m)
    return _build(degrees, np.asarray(view.counts, dtype=np.float64), rates, float(m), False)


def asymptotic_solution(profile: DegreeProfile) -> AnalyticSolution:
    """
    Solution as n = m -> infinity: k_d -> d, f_d -> lambda_d, time rescaled to [0, 1].

    Args:
        profile: Grouped (or per-node, grouped on the fly) profile

    Returns:
        AnalyticSolution with horizon 1
    """
    view = profile.grouped_view(1 if profile.is_grouped else None)
    degrees = np.asarray(view.degrees, dtype=np.float64)
    return _build(degrees, np.asarray(view.fractions, dtype=np.float64), degrees.copy(), 1.0, True)


def mpd_trajectory(solution: AnalyticSolution, points: Sequence[float]) -> List[np.ndarray]:
    """
    Expected unmatched counts per class at each time point.

    Args:
        solution: Finite or asymptotic solution
        points: Times in [0, horizon]

    Returns:
        One array of per-class unmatched counts per point
    """
    return [solution.unmatched(float(t)) for t in points]
