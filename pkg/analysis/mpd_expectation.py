"""
MPD Expectation
Expected MinPredictedDegree matching size from the closed-form solution
"""

from typing import Optional

from robot.api import logger

from analysis.closed_form import asymptotic_solution, closed_form_solution
from generators.degree_profiles import DegreeProfile

__all__ = ['expected_mpd_size', 'asymptotic_mpd_fraction']


def expected_mpd_size(profile: DegreeProfile, n: Optional[int], m: int) -> float:
    """
    Expected MPD matching size on a CLV-B graph: sum over classes of f_d + z_d(m)/k_d.

    Args:
        profile: Degree profile
        n: Number of offline nodes (required for grouped profiles)
        m: Number of online nodes

    Returns:
        Expected number of matched offline nodes
    """
    solution = closed_form_solution(profile, n, m)
    if len(solution) == 0:
        return 0.0
    size = solution.matched()
    logger.debug(f"Expected MPD size n={n} m={m}: {size:.6f}")
    return size


def asymptotic_mpd_fraction(profile: DegreeProfile) -> float:
    """
    Expected matched fraction as n = m -> infinity: sum of lambda_d + z_d(1)/d.

    Args:
        profile: Finite (truncated) grouped profile

    Returns:
        Matched fraction in [0, 1]
    """
    solution = asymptotic_solution(profile)
    if len(solution) == 0:
        return 0.0
    fraction = solution.matched()
    logger.debug(f"Asymptotic MPD fraction over {len(solution)} classes: {fraction:.6f}")
    return fraction
