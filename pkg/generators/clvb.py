"""
CLV-B Sampler
Bipartite Chung-Lu-Vu graphs: edge (u_i, v_j) present independently with probability d_i/m
"""

from typing import List, Optional

import numpy as np
from robot.api import logger

from generators.degree_profiles import DegreeProfile
from graphs.bipartite_graph import BipartiteGraph
from graphs.trial_seed import as_trial_seed

__all__ = ['clvb_sample']


def clvb_sample(d: DegreeProfile, m: int, seed=None, n: Optional[int] = None) -> BipartiteGraph:
    """
    Sample a CLV-B graph.

    Offline node i draws its degree from Binomial(m, d_i/m) and then a
    uniformly random neighbour set of that size, which is the same law as
    m independent Bernoulli(d_i/m) edges.

    Args:
        d: Expected degree profile (per-node; grouped profiles need n)
        m: Number of online nodes
        seed: TrialSeed or int; the "graph" stream is used
        n: Offline node count for grouped profiles

    Returns:
        BipartiteGraph with identity arrival order

    Raises:
        ProfileError: if some expected degree exceeds m
    """
    d.validate_for(m)
    expected = d.node_vector(n if n is not None else len(d))
    rng = as_trial_seed(seed).rng("graph")

    degrees = rng.binomial(m, expected / m) if m > 0 else np.zeros(len(expected), dtype=np.int64)
    adjacency: List[List[int]] = [[] for _ in range(m)]
    for u, degree in enumerate(degrees):
        if degree == 0:
            continue
        for v in rng.choice(m, size=int(degree), replace=False):
            adjacency[v].append(u)

    graph = BipartiteGraph(len(expected), m, adjacency)
    logger.debug(f"Sampled CLV-B graph: n={graph.n_offline} m={m} edges={int(degrees.sum())}")
    return graph
