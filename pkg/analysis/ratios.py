"""
Analytic Ratios
Expected MPD size over the expected Hall bound, finite and asymptotic, plus the grids built from them
"""

from typing import Dict, List, Optional, Sequence

from robot.api import logger

from analysis.hall_bounds import asymptotic_hall_bound, hall_expectation
from analysis.mpd_expectation import asymptotic_mpd_fraction, expected_mpd_size
from generators.degree_profiles import DegreeProfile, expcutoff_profile, zipf_profile

__all__ = ['analytic_ratio', 'expcutoff_ratio_cell', 'zipf_ratio_cell', 'expcutoff_ratio_grid',
           'zipf_ratio_curve']


def _ratio(numerator: float, denominator: float, label: str) -> float:
    if denominator == 0.0:
        if numerator != 0.0:
            raise ZeroDivisionError(f"{label}: Hall bound is 0 but MPD size is {numerator}")
        logger.warn(f"{label}: 0/0 ratio on an empty profile, reporting 1")
        return 1.0
    return numerator / denominator


def analytic_ratio(profile: DegreeProfile, n: Optional[int] = None, m: Optional[int] = None,
                   asymptotic: bool = False) -> float:
    """
    Lower bound on MPD's expected competitive ratio on CLV-B graphs.

    Args:
        profile: Degree profile
        n: Offline nodes (finite case)
        m: Online nodes (finite case)
        asymptotic: Use the n = m -> infinity engine instead

    Returns:
        expected MPD size / expected Hall bound, 1 for an empty profile
    """
    if asymptotic:
        return _ratio(asymptotic_mpd_fraction(profile), asymptotic_hall_bound(profile),
                      "asymptotic ratio")
    if m is None:
        raise ValueError("The finite ratio needs m")
    return _ratio(expected_mpd_size(profile, n, m), hall_expectation(profile, n, m),
                  "finite ratio")


def expcutoff_ratio_cell(alpha: float, cutoff: float, tail_eps: float = 1e-9) -> Dict[str, float]:
    """One (alpha, lambda) cell: alpha, lambda, mpd_expected, hall_bound, ratio."""
    profile = expcutoff_profile(alpha, cutoff, tail_eps)
    mpd = asymptotic_mpd_fraction(profile)
    hall = asymptotic_hall_bound(profile)
    ratio = _ratio(mpd, hall, "grid cell")
    logger.info(f"Cutoff grid alpha={alpha} lambda={cutoff}: ratio={ratio:.4f}")
    return {'alpha': alpha, 'lambda': cutoff, 'mpd_expected': mpd, 'hall_bound': hall,
            'ratio': ratio}


def zipf_ratio_cell(alpha: float, n: int, m: int, scale: Optional[float] = None) -> Dict[str, float]:
    """One Zipf point (C = m/2 by default): alpha, n, m, mpd_expected, hall_bound, ratio."""
    profile = zipf_profile(n, m / 2 if scale is None else scale, alpha)
    mpd = expected_mpd_size(profile, n, m)
    hall = hall_expectation(profile, n, m)
    ratio = _ratio(mpd, hall, "Zipf curve")
    logger.info(f"Zipf curve alpha={alpha} n={n}: ratio={ratio:.4f}")
    return {'alpha': alpha, 'n': n, 'm': m, 'mpd_expected': mpd, 'hall_bound': hall,
            'ratio': ratio}


def expcutoff_ratio_grid(alphas: Sequence[float], cutoffs: Sequence[float],
                         tail_eps: float = 1e-9) -> List[Dict[str, float]]:
    """Asymptotic ratios on an (alpha, lambda) grid, rows ordered by lambda then alpha."""
    return [expcutoff_ratio_cell(alpha, cutoff, tail_eps) for cutoff in cutoffs for alpha in alphas]


def zipf_ratio_curve(alphas: Sequence[float], n: int, m: int,
                     scale: Optional[float] = None) -> List[Dict[str, float]]:
    """Finite ratios for Zipf profiles, one row per alpha."""
    return [zipf_ratio_cell(alpha, n, m, scale) for alpha in alphas]
