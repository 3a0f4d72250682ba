"""
Degree Profiles
Expected-degree profiles for CLV-B graphs: per-node vectors or (degree, fraction) groups
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from robot.api import logger

from generators.errors import ProfileError

__all__ = ['GroupedView', 'DegreeProfile', 'zipf_profile', 'expcutoff_profile', 'uniform_profile']

FRACTION_TOLERANCE = 1e-9


@dataclass(frozen=True)
class GroupedView:
    """Unique expected degrees (ascending) with node counts and fractions."""

    degrees: np.ndarray
    counts: np.ndarray
    fractions: np.ndarray

    def __len__(self) -> int:
        return len(self.degrees)


class DegreeProfile:
    """
    Expected offline degrees, in one of two forms.

    * per-node: ``d[i]`` is the expected degree of offline node i.
    * grouped: a fraction ``fractions[j]`` of the offline nodes has expected
      degree ``degrees[j]``; degrees strictly increasing, fractions positive
      and summing to one.
    """

    def __init__(self, per_node: Optional[Sequence[float]] = None,
                 degrees: Optional[Sequence[float]] = None,
                 fractions: Optional[Sequence[float]] = None):
        if (per_node is None) == (degrees is None):
            raise ProfileError("Give either per-node degrees or grouped (degrees, fractions)")
        if per_node is not None:
            values = np.array(per_node, dtype=np.float64).reshape(-1)
            if not np.all(np.isfinite(values)) or np.any(values < 0):
                raise ProfileError("Per-node expected degrees must be finite and nonnegative")
            values.setflags(write=False)
            self.per_node = values
            self.degrees = None
            self.fractions = None
        else:
            if fractions is None:
                raise ProfileError("Grouped profile needs fractions")
            deg = np.array(degrees, dtype=np.float64).reshape(-1)
            frac = np.array(fractions, dtype=np.float64).reshape(-1)
            if len(deg) != len(frac):
                raise ProfileError(f"{len(deg)} degrees but {len(frac)} fractions")
            if np.any(deg < 0) or not np.all(np.isfinite(deg)):
                raise ProfileError("Grouped degrees must be finite and nonnegative")
            if len(deg) > 1 and np.any(np.diff(deg) <= 0):
                raise ProfileError("Grouped degrees must be strictly increasing")
            if np.any(frac <= 0):
                raise ProfileError("Grouped fractions must be positive")
            if len(frac) and abs(math.fsum(frac) - 1.0) > FRACTION_TOLERANCE:
                raise ProfileError(f"Grouped fractions sum to {math.fsum(frac)}, expected 1")
            deg.setflags(write=False)
            frac.setflags(write=False)
            self.per_node = None
            self.degrees = deg
            self.fractions = frac

    @classmethod
    def from_vector(cls, d: Sequence[float]) -> 'DegreeProfile':
        return cls(per_node=d)

    @classmethod
    def from_groups(cls, degrees: Sequence[float], fractions: Sequence[float]) -> 'DegreeProfile':
        return cls(degrees=degrees, fractions=fractions)

    @property
    def is_grouped(self) -> bool:
        return self.per_node is None

    def __len__(self) -> int:
        """Number of offline nodes (per-node) or of degree classes (grouped)."""
        return len(self.degrees) if self.is_grouped else len(self.per_node)

    def validate_for(self, m: int) -> None:
        """
        Check that every edge probability d/m lies in [0, 1].

        Args:
            m: Number of online nodes

        Raises:
            ProfileError: naming the first offending node or class
        """
        values = self.degrees if self.is_grouped else self.per_node
        too_large = np.flatnonzero(values > m)
        if len(too_large):
            index = int(too_large[0])
            logger.error(f"Expected degree {values[index]} exceeds m={m}")
            raise ProfileError(
                f"invalid profile: expected degree {values[index]} at position {index} exceeds m={m}")

    def grouped_view(self, n: Optional[int] = None) -> GroupedView:
        """
        Group the profile by unique expected degree.

        Args:
            n: Number of offline nodes; required to turn grouped fractions into counts

        Returns:
            GroupedView with ascending degrees
        """
        if self.is_grouped:
            if n is None:
                raise ProfileError("A grouped profile needs n to produce node counts")
            return GroupedView(self.degrees.copy(), self.fractions * n, self.fractions.copy())
        if len(self.per_node) == 0:
            empty = np.zeros(0)
            return GroupedView(empty, empty, empty)
        degrees, counts = np.unique(self.per_node, return_counts=True)
        counts = counts.astype(np.float64)
        return GroupedView(degrees, counts, counts / counts.sum())

    def node_vector(self, n: int) -> np.ndarray:
        """
        Per-node expected degrees for n offline nodes.

        Grouped profiles are expanded by rounding class sizes (largest remainders).
        """
        if not self.is_grouped:
            if len(self.per_node) != n:
                raise ProfileError(f"Profile has {len(self.per_node)} nodes, expected {n}")
            return np.array(self.per_node)
        raw = self.fractions * n
        counts = np.floor(raw).astype(np.int64)
        short = n - int(counts.sum())
        if short > 0:
            order = np.argsort(-(raw - counts), kind='stable')
            counts[order[:short]] += 1
        return np.repeat(self.degrees, counts)

    def __repr__(self) -> str:
        kind = "grouped" if self.is_grouped else "per_node"
        return f"DegreeProfile({kind}, size={len(self)})"


# ==================== Profile Builders ====================

def zipf_profile(n: int, C: float, alpha: float) -> DegreeProfile:
    """
    Zipf expected degrees d_i = C * i^(-alpha), i = 1..n.

    Args:
        n: Number of offline nodes (>= 1)
        C: Scale (> 0), usually m/2
        alpha: Exponent (>= 0)

    Returns:
        Per-node DegreeProfile
    """
    if n < 1 or C <= 0 or alpha < 0:
        raise ProfileError(f"Zipf profile needs n >= 1, C > 0, alpha >= 0 (got {n}, {C}, {alpha})")
    ranks = np.arange(1, n + 1, dtype=np.float64)
    return DegreeProfile(per_node=C * ranks ** (-alpha))


def expcutoff_profile(alpha: float, lam: float, tail_eps: float = 1e-9) -> DegreeProfile:
    """
    Power law with exponential cutoff: fraction of degree d proportional to
    d^(-alpha) * exp(-d / lam) for d = 1, 2, ...

    The series is truncated at the smallest D whose remaining tail mass is
    below tail_eps, then renormalized.

    Args:
        alpha: Power-law exponent (>= 0)
        lam: Cutoff scale (> 0)
        tail_eps: Tail mass allowed to be dropped, in (0, 1)

    Returns:
        Grouped DegreeProfile over degrees 1..D
    """
    if alpha < 0 or lam <= 0 or not 0 < tail_eps < 1:
        raise ProfileError(
            f"Cutoff profile needs alpha >= 0, lam > 0, tail_eps in (0,1) (got {alpha}, {lam}, {tail_eps})")
    # weights relative to d = 1; the geometric tail bound holds because d^-alpha is nonincreasing
    geometric = -math.expm1(-1.0 / lam)
    length = 64
    while True:
        d = np.arange(1, length + 2, dtype=np.float64)
        relative = np.exp(-alpha * np.log(d) - (d - 1.0) / lam)
        cumulative = np.cumsum(relative[:-1])
        tail_bounds = relative[1:] / geometric
        satisfied = np.flatnonzero(tail_bounds < tail_eps * cumulative)
        if len(satisfied):
            cut = int(satisfied[0]) + 1
            break
        length *= 2
    weights = relative[:cut]
    fractions = weights / math.fsum(weights)
    keep = fractions > 0
    if not np.all(keep):
        logger.warn(f"Dropped {int((~keep).sum())} underflowing classes from cutoff profile")
    logger.info(f"Cutoff profile alpha={alpha} lam={lam}: truncated at degree {cut}")
    degrees = np.arange(1, cut + 1, dtype=np.float64)[keep]
    fractions = fractions[keep]
    return DegreeProfile(degrees=degrees, fractions=fractions / math.fsum(fractions))


def uniform_profile(n: int, d: float) -> DegreeProfile:
    """Every offline node has expected degree d."""
    return DegreeProfile(per_node=np.full(n, float(d)))
