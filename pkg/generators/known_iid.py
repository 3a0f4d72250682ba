"""
Known I.I.D. Instances
Type graphs with an arrival distribution and the instances sampled from them
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
from robot.api import logger

from graphs.bipartite_graph import BipartiteGraph, DegreePredictor
from graphs.trial_seed import as_trial_seed

__all__ = ['TypeGraph', 'known_iid_sample']

DISTRIBUTION_TOLERANCE = 1e-12


@dataclass(frozen=True)
class TypeGraph:
    """
    Bipartite type graph plus a probability for every online type node.
    """

    base: BipartiteGraph
    type_distribution: Tuple[float, ...]

    def __post_init__(self):
        dist = self.type_distribution
        if len(dist) != self.base.m_online:
            raise ValueError(f"{len(dist)} type probabilities for {self.base.m_online} types")
        if any(p < 0 for p in dist):
            raise ValueError("Type probabilities must be nonnegative")
        total = math.fsum(dist)
        if dist and abs(total - 1.0) > DISTRIBUTION_TOLERANCE:
            raise ValueError(f"Type probabilities sum to {total!r}, expected 1")

    @classmethod
    def uniform(cls, base: BipartiteGraph) -> 'TypeGraph':
        m = base.m_online
        return cls(base, tuple([1.0 / m] * m) if m else ())

    @classmethod
    def weighted(cls, base: BipartiteGraph, weights: Sequence[float]) -> 'TypeGraph':
        """Normalize nonnegative weights into the type distribution."""
        values = np.asarray(weights, dtype=np.float64)
        probabilities = values / math.fsum(values)
        # push the rounding residue onto the largest entry
        probabilities[int(np.argmax(probabilities))] += 1.0 - math.fsum(probabilities)
        return cls(base, tuple(probabilities.tolist()))


def known_iid_sample(types: TypeGraph, m_hat: Optional[int] = None,
                     seed=None) -> Tuple[BipartiteGraph, DegreePredictor]:
    """
    Draw m_hat online nodes i.i.d. from the type distribution.

    Each drawn node copies the adjacency of its type. The predictor is the
    offline degree in the type graph rescaled by m_hat / |V|.

    Args:
        types: Type graph
        m_hat: Number of online nodes in the instance (defaults to |V|)
        seed: TrialSeed or int; the "graph" stream is used

    Returns:
        (instance graph, predictor)
    """
    base = types.base
    m_hat = base.m_online if m_hat is None else int(m_hat)
    if m_hat < 0:
        raise ValueError(f"m_hat must be nonnegative, got {m_hat}")
    if m_hat and not base.m_online:
        raise ValueError("Cannot sample online nodes from a type graph without types")
    rng = as_trial_seed(seed).rng("graph")
    drawn = rng.choice(base.m_online, size=m_hat, p=np.asarray(types.type_distribution)) \
        if m_hat else np.zeros(0, dtype=np.int64)
    instance = BipartiteGraph(base.n_offline, m_hat, [base.adjacency[t] for t in drawn])

    scale = m_hat / base.m_online if base.m_online else 0.0
    sigma = DegreePredictor(base.offline_degrees() * scale)
    logger.debug(f"Known i.i.d. sample: {m_hat} arrivals over {base.m_online} types")
    return instance, sigma
