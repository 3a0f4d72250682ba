"""
Self Test
Cross-checks of the oracles and the analytic engine on small fixed instances
"""

from dataclasses import dataclass
from typing import List

import numpy as np
from robot.api import logger
from scipy.integrate import solve_ivp

from algorithms.policy_factory import PolicyFactory
from analysis.closed_form import AnalyticSolution, closed_form_solution
from generators.clvb import clvb_sample
from generators.degree_profiles import DegreeProfile, zipf_profile
from generators.fixtures import half_competitive_instance
from graphs.online_driver import run_online
from graphs.trial_seed import TrialSeed
from oracle.brute_force import brute_force_matching
from oracle.hall import hall_subset
from oracle.hopcroft_karp import max_matching


@dataclass(frozen=True)
class SelfTestCheck:
    """Outcome of one cross-check."""

    name: str
    passed: bool
    detail: str


def integrate_unmatched_ode(solution: AnalyticSolution, t: float) -> np.ndarray:
    """
    Integrate dz_d/dt = k_d (1 - e^{z_d}) prod_{d' < d} e^{z_d'} numerically.

    Args:
        solution: Supplies rates, class sizes and the horizon
        t: End time

    Returns:
        z values at t
    """
    rates = solution.rates

    def rhs(_, z):
        blocked = np.concatenate(([0.0], np.cumsum(z)[:-1]))
        return rates * -np.expm1(z) * np.exp(blocked)

    start = -rates * solution.sizes
    if t == 0.0:
        return start
    out = solve_ivp(rhs, (0.0, t), start, method='LSODA', rtol=1e-10, atol=1e-12)
    if not out.success:
        raise ArithmeticError(f"ODE integration failed: {out.message}")
    return out.y[:, -1]


def _half_bound_check() -> SelfTestCheck:
    graph = half_competitive_instance()
    policy = PolicyFactory.create('mindegree', graph)
    size = run_online(graph, policy, TrialSeed(0)).size
    best = max_matching(graph)
    return SelfTestCheck('half-competitive instance', size == 3 and best == 6,
                         f"MinDegree matched {size}, maximum {best}")


def _oracle_agreement_check(samples: int, master_seed: int) -> SelfTestCheck:
    profile = DegreeProfile.from_vector([1.0, 1.5, 2.0, 2.5, 3.0, 3.0, 4.0, 5.0])
    for index in range(samples):
        graph = clvb_sample(profile, 8, TrialSeed(master_seed, index))
        fast, slow = max_matching(graph), brute_force_matching(graph)
        certificate = hall_subset(graph)
        if fast != slow:
            return SelfTestCheck('Hopcroft-Karp vs brute force', False,
                                 f"sample {index}: {fast} != {slow}")
        if not certificate.holds_for(graph) or fast > certificate.bound:
            return SelfTestCheck('Hopcroft-Karp vs brute force', False,
                                 f"sample {index}: Hall bound {certificate.bound} < {fast}")
    return SelfTestCheck('Hopcroft-Karp vs brute force', True,
                         f"{samples} graphs agree and respect the Hall bound")


def _ode_check(tolerance: float) -> SelfTestCheck:
    n = m = 100
    solution = closed_form_solution(zipf_profile(n, m / 2, 1.0), n, m)
    worst = 0.0
    for t in (0.25 * m, 0.5 * m, float(m)):
        worst = max(worst, float(np.max(np.abs(solution.z(t) - integrate_unmatched_ode(solution, t)))))
    return SelfTestCheck('closed form vs ODE integration', worst <= tolerance,
                         f"max |z_closed - z_numeric| = {worst:.3e}")


def selftest(samples: int = 50, master_seed: int = 0, tolerance: float = 1e-6) -> List[SelfTestCheck]:
    """
    Run every cross-check.

    Args:
        samples: Random graphs for the oracle comparison
        master_seed: Seed of those graphs
        tolerance: Allowed closed-form vs ODE deviation

    Returns:
        One SelfTestCheck per check
    """
    checks = [_half_bound_check(), _oracle_agreement_check(samples, master_seed), _ode_check(tolerance)]
    for check in checks:
        report = logger.info if check.passed else logger.error
        report(f"[{'PASS' if check.passed else 'FAIL'}] {check.name}: {check.detail}")
    return checks
