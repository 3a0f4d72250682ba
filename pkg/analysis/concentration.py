"""
Concentration Checks
Empirical checks that simulated matching sizes stay close to their mean
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from robot.api import logger
from scipy.stats import binom

from analysis.closed_form import AnalyticSolution

__all__ = ['ConcentrationReport', 'concentration_check', 'ExcessReport', 'unmatched_excess_check']

MIN_TRIALS = 30
SLACK_QUANTILE = 0.999


@dataclass(frozen=True)
class ConcentrationReport:
    """Outcome of a concentration check."""

    kind: str
    trials: int
    mean: float
    std: float
    max_deviation: float
    radius: float
    exceedances: int
    allowed_exceedances: int
    passed: bool


def concentration_check(results: Sequence[float], m: int, kind: str = "mpd",
                        n: Optional[int] = None, constant: float = 1.0) -> ConcentrationReport:
    """
    Compare trial deviations |X_i - mean| with the high-probability radius.

    kind="mpd": radius 2 sqrt(m) log m, exceedance probability 2/m.
    kind="hall": radius C sqrt(n) log n, exceedance probability 1/n.
    The check fails when more trials exceed the radius than the 0.999
    binomial quantile of that probability allows.

    Args:
        results: Matching sizes (or bounds) from independent trials
        m: Online node count
        kind: "mpd" or "hall"
        n: Offline node count for kind="hall" (defaults to m)
        constant: C for kind="hall"

    Returns:
        ConcentrationReport
    """
    values = np.asarray(results, dtype=np.float64)
    if len(values) < MIN_TRIALS:
        logger.warn(f"Concentration check on {len(values)} trials; at least {MIN_TRIALS} expected")
    if kind == "mpd":
        radius = 2.0 * math.sqrt(m) * math.log(m) if m > 1 else 0.0
        probability = min(1.0, 2.0 / m)
    elif kind == "hall":
        size = m if n is None else n
        radius = constant * math.sqrt(size) * math.log(size) if size > 1 else 0.0
        probability = min(1.0, 1.0 / size)
    else:
        raise ValueError(f"Unknown concentration kind: {kind}")

    mean = float(values.mean()) if len(values) else 0.0
    deviations = np.abs(values - mean)
    max_deviation = float(deviations.max()) if len(values) else 0.0
    exceedances = int((deviations >= radius).sum()) if radius > 0 else 0
    allowed = int(binom.ppf(SLACK_QUANTILE, len(values), probability))
    passed = exceedances <= allowed
    if not passed:
        logger.warn(f"Concentration ({kind}): {exceedances} of {len(values)} trials beyond "
                    f"radius {radius:.2f}, allowed {allowed}")
    return ConcentrationReport(kind, len(values), mean, float(values.std()) if len(values) else 0.0,
                               max_deviation, radius, exceedances, allowed, passed)


@dataclass(frozen=True)
class ExcessReport:
    """Largest excess of simulated unmatched counts over the high-probability ceiling."""

    ceiling: np.ndarray
    max_excess: float
    passed: bool


def unmatched_excess_check(observed_unmatched: Sequence[Sequence[float]],
                           solution: AnalyticSolution, c: float = 2.0) -> ExcessReport:
    """
    Check simulated final unmatched counts against -z_d(m)/k_d + c * m^(5/6).

    Args:
        observed_unmatched: One per-class count vector per trial (classes as in solution)
        solution: Finite AnalyticSolution (horizon m)
        c: Constant of the ceiling

    Returns:
        ExcessReport; max_excess <= 0 means every trial stayed below the ceiling
    """
    ceiling = solution.unmatched() + c * solution.horizon ** (5.0 / 6.0)
    observed = np.atleast_2d(np.asarray(observed_unmatched, dtype=np.float64))
    excess = observed - ceiling
    max_excess = float(excess.max()) if excess.size else -math.inf
    if max_excess > 0:
        logger.warn(f"Unmatched counts exceed the ceiling by up to {max_excess:.2f}")
    return ExcessReport(ceiling, max_excess, max_excess <= 0)
