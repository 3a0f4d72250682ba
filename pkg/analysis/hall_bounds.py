"""
Hall Bounds
Expected Hall-deficiency upper bound on the maximum matching of CLV-B graphs

The bound is n - (E|S*| - E|N(S*)|), where N(S*) is the set of online nodes
adjacent to some offline node of degree 1 and S*_D holds the degree-D
offline nodes whose D neighbours all lie in N(S*). The probability beta^D
that D given online nodes are all covered is an alternating
inclusion-exclusion sum whose terms grow like 2^D while the result shrinks
geometrically, so it is evaluated in mpmath with about 0.31 * D extra digits.
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from mpmath import mp
from robot.api import logger
from scipy.stats import binom, poisson

from analysis.errors import AnalysisError, NumericalInstabilityError
from generators.degree_profiles import DegreeProfile

__all__ = ['HallTerms', 'hall_expectation_terms', 'hall_expectation', 'asymptotic_hall_terms',
           'asymptotic_hall_bound']

BETA_CUTOFF = 1e-16
TAIL_MASS = 1e-12
NEGLIGIBLE_CONTRIBUTION = 1e-18
BETA_SLACK = 1e-9
DIVISION_FLOOR = 1e-12


@dataclass(frozen=True)
class HallTerms:
    """
    Components of an expected Hall bound.

    Finite terms are node counts; asymptotic terms are fractions of m.

    Attributes:
        expected_neighbourhood: E|N(S*)|
        expected_s_star: E|S*| summed up to delta_cutoff
        per_delta: E|S*_D| for D = 0..delta_cutoff
        beta: beta^D for D = 0..delta_cutoff (over all offline nodes in the finite case)
        delta_cutoff: Largest D included
        bound: n - (E|S*| - E|N(S*)|), or its fraction
    """

    expected_neighbourhood: float
    expected_s_star: float
    per_delta: Tuple[float, ...]
    beta: Tuple[float, ...]
    delta_cutoff: int
    bound: float


def _working_digits(delta: int) -> int:
    return int(0.31 * delta) + 30


def _coverage_cutoff(coverage: float, tail_cap: int) -> int:
    """
    Largest D worth summing: beta^D <= coverage^D (coverage events are
    negatively associated), so stop once coverage^D < BETA_CUTOFF.
    """
    if coverage <= 0.0:
        return min(1, tail_cap)
    if coverage >= 1.0:
        return tail_cap
    return int(min(tail_cap, math.floor(math.log(BETA_CUTOFF) / math.log(coverage)) + 1))


def _check_beta(value, delta: int, where: str) -> float:
    as_float = float(value)
    if not -BETA_SLACK <= as_float <= 1.0 + BETA_SLACK:
        logger.error(f"beta^{delta} = {as_float} outside [0, 1] ({where})")
        raise NumericalInstabilityError(
            f"inclusion-exclusion for beta^{delta} ({where}) gave {as_float}, outside [0, 1]",
            as_float)
    return min(max(as_float, 0.0), 1.0)


def _alternating_sum(delta: int, terms) -> object:
    """1 + sum_{r=1}^{D} (-1)^r binom(D, r) terms[r], with terms[0] = 1."""
    return mp.fsum((-1) ** r * mp.binomial(delta, r) * terms[r] for r in range(delta + 1))


# ==================== Finite Case ====================

def hall_expectation_terms(d: DegreeProfile, n: Optional[int], m: int) -> HallTerms:
    """
    Expected Hall-bound components for a CLV-B graph with expected degrees d.

    Args:
        d: Degree profile (grouped profiles are expanded to n nodes)
        n: Number of offline nodes (defaults to the per-node profile length)
        m: Number of online nodes

    Returns:
        HallTerms with node counts
    """
    if m < 1:
        raise AnalysisError(f"Need at least one online node, got m={m}")
    d.validate_for(m)
    values = d.node_vector(n if n is not None else len(d))
    n = len(values)
    if n == 0:
        return HallTerms(0.0, 0.0, (), (), 0, 0.0)

    unique_q, multiplicity = np.unique(values / m, return_counts=True)
    # p = probability that a fixed online node is the single neighbour of the offline node
    if m == 1:
        p = unique_q.copy()
    else:
        with np.errstate(divide='ignore', invalid='ignore'):
            p = np.where(unique_q > 0, unique_q * np.exp((m - 1) * np.log1p(-unique_q)), 0.0)
        p = np.nan_to_num(p, nan=0.0)
    with np.errstate(divide='ignore'):
        log_empty = float(np.dot(multiplicity, np.log1p(-p)))
    neighbourhood = -m * math.expm1(log_empty)
    coverage = neighbourhood / m

    per_delta: List[float] = [
        float(np.dot(multiplicity, binom.pmf(0, m, unique_q))),
        float(np.dot(multiplicity, binom.pmf(1, m, unique_q))),
    ]
    betas: List[float] = [1.0, 1.0]
    tail_cap = int(min(m, binom.isf(TAIL_MASS, m, float(unique_q.max())) + 1))
    cutoff = max(1, _coverage_cutoff(coverage, tail_cap))
    if m < 2:
        cutoff = 1
        per_delta = per_delta[:m + 1]
        betas = betas[:m + 1]

    if cutoff >= 2:
        with mp.workdps(_working_digits(cutoff)):
            p_mp = [mp.mpf(float(x)) for x in p]
            counts = [int(c) for c in multiplicity]
            log_factors = [[mp.log1p(-r * pj) for pj in p_mp] for r in range(cutoff + 1)]
            log_shared = [mp.fsum(c * lf for c, lf in zip(counts, row)) for row in log_factors]
            shared = [mp.exp(value) for value in log_shared]

            for delta in range(2, cutoff + 1):
                betas.append(_check_beta(_alternating_sum(delta, shared), delta, "all nodes"))

            pmf = {delta: binom.pmf(delta, m, unique_q) for delta in range(2, cutoff + 1)}
            totals = {delta: [] for delta in range(2, cutoff + 1)}
            for j, pj in enumerate(p_mp):
                excluded = []
                for r in range(cutoff + 1):
                    factor = 1 - r * pj
                    if factor > DIVISION_FLOOR:
                        excluded.append(shared[r] / factor)
                    else:
                        excluded.append(mp.exp(mp.fsum(
                            (c - (1 if k == j else 0)) * log_factors[r][k]
                            for k, c in enumerate(counts) if c - (1 if k == j else 0) > 0)))
                for delta in range(2, cutoff + 1):
                    weight = float(pmf[delta][j]) * counts[j]
                    if weight * betas[delta] < NEGLIGIBLE_CONTRIBUTION:
                        continue
                    beta_j = _check_beta(_alternating_sum(delta, excluded), delta, f"class {j}")
                    totals[delta].append(weight * beta_j)
            per_delta.extend(math.fsum(totals[delta]) for delta in range(2, cutoff + 1))

    s_star = math.fsum(per_delta)
    bound = n - (s_star - neighbourhood)
    logger.debug(f"Hall expectation n={n} m={m}: E|N|={neighbourhood:.6f} "
                 f"E|S*|={s_star:.6f} cutoff={cutoff} bound={bound:.6f}")
    return HallTerms(neighbourhood, s_star, tuple(per_delta), tuple(betas), cutoff, bound)


def hall_expectation(d: DegreeProfile, n: Optional[int], m: int) -> float:
    """
    Upper bound n - (E|S*| - E|N(S*)|) on the expected maximum matching size.

    Args:
        d: Degree profile
        n: Number of offline nodes
        m: Number of online nodes

    Returns:
        Expected Hall bound (node count)

    Raises:
        NumericalInstabilityError: if an inclusion-exclusion term leaves [0, 1]
    """
    return hall_expectation_terms(d, n, m).bound


# ==================== Asymptotic Case ====================

def _negligible_degree(cutoff: int) -> float:
    """Degree beyond which Poisson(delta) puts < 1e-30 mass on 0..cutoff."""
    limit = float(cutoff + 1)
    while poisson.logpmf(cutoff, limit) > math.log(1e-30):
        limit *= 2.0
    return limit


def asymptotic_hall_terms(profile: DegreeProfile) -> HallTerms:
    """
    Hall-bound components as n = m -> infinity (fractions of m).

    E|N(S*)|/m = 1 - exp(-P) with P = sum lambda_i delta_i e^{-delta_i};
    beta^D = 1 + sum_r (-1)^r binom(D, r) e^{-rP};
    E|S*_D|/m = sum_i lambda_i Poisson(D; delta_i) beta^D.

    Args:
        profile: Grouped (or per-node) profile

    Returns:
        HallTerms with fractions
    """
    view = profile.grouped_view(1 if profile.is_grouped else None)
    if len(view) == 0:
        return HallTerms(0.0, 0.0, (), (), 0, 0.0)
    degrees = np.asarray(view.degrees, dtype=np.float64)
    fractions = np.asarray(view.fractions, dtype=np.float64)

    pressure = math.fsum(fractions * degrees * np.exp(-degrees))
    coverage = -math.expm1(-pressure)
    tail_cap = int(poisson.isf(TAIL_MASS, float(degrees.max()))) + 1
    cutoff = max(1, _coverage_cutoff(coverage, tail_cap))

    relevant = degrees <= _negligible_degree(cutoff)
    near_degrees = degrees[relevant]
    near_fractions = fractions[relevant]

    betas = [1.0, 1.0]
    with mp.workdps(_working_digits(cutoff)):
        pressure_mp = mp.mpf(pressure)
        terms = [mp.exp(-r * pressure_mp) for r in range(cutoff + 1)]
        for delta in range(2, cutoff + 1):
            beta = _alternating_sum(delta, terms)
            closed = mp.power(1 - terms[1], delta)
            if abs(beta - closed) > BETA_SLACK:
                raise NumericalInstabilityError(
                    f"asymptotic beta^{delta} disagrees with its binomial form: "
                    f"{float(beta)} vs {float(closed)}", float(beta))
            betas.append(_check_beta(beta, delta, "asymptotic"))

    per_delta = [math.fsum(near_fractions * poisson.pmf(delta, near_degrees)) * betas[delta]
                 for delta in range(cutoff + 1)]
    s_star = math.fsum(per_delta)
    bound = 1.0 - (s_star - coverage)
    logger.debug(f"Asymptotic Hall bound over {len(degrees)} classes: E|N|/m={coverage:.6f} "
                 f"E|S*|/m={s_star:.6f} cutoff={cutoff} bound={bound:.6f}")
    return HallTerms(coverage, s_star, tuple(per_delta), tuple(betas), cutoff, bound)


def asymptotic_hall_bound(profile: DegreeProfile) -> float:
    """
    Asymptotic Hall bound fraction 1 - (E|S*|/m - E|N(S*)|/m).

    Args:
        profile: Truncated grouped profile

    Returns:
        Bound on the expected maximum matching as a fraction of m
    """
    return asymptotic_hall_terms(profile).bound
