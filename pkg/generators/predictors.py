"""
Degree Predictors
Builders for the predictors used in experiments: expected, exact, subsampled, snapshot and random
"""

import math
from typing import Optional, Sequence, Union

import numpy as np
from robot.api import logger

from generators.degree_profiles import DegreeProfile
from generators.edge_list import LoadedGraph
from graphs.bipartite_graph import BipartiteGraph, DegreePredictor
from graphs.trial_seed import as_trial_seed

__all__ = ['expected_degree_predictor', 'exact_degree_predictor', 'random_predictor',
           'subsample_predictor', 'first_snapshot_predictor']

UNSEEN_NODE_DEGREE = 1.0


def expected_degree_predictor(profile: DegreeProfile, n: Optional[int] = None) -> DegreePredictor:
    """sigma(u_i) = d_i, the expected degree the CLV-B sampler used."""
    return DegreePredictor(profile.node_vector(n if n is not None else len(profile)))


def exact_degree_predictor(graph: BipartiteGraph) -> DegreePredictor:
    """sigma(u) = true degree of u."""
    return DegreePredictor.exact(graph)


def random_predictor(n: int, seed=None) -> DegreePredictor:
    """
    I.i.d. Uniform(0, 1) predictions.

    With this predictor MinPredictedDegree behaves exactly like Ranking.
    """
    return DegreePredictor(as_trial_seed(seed).rng("predictor").random(n))


def subsample_predictor(graph: BipartiteGraph, fraction: float, seed=None) -> DegreePredictor:
    """
    Noisy predictor from a random sample of the online nodes.

    sigma(u) counts u's neighbours among a uniformly random subset of
    ceil(fraction * m) online nodes, divided by fraction.

    Args:
        graph: Graph whose degrees are estimated
        fraction: Sampled share of online nodes, in (0, 1]
        seed: TrialSeed or int; the "predictor" stream is used

    Returns:
        DegreePredictor over the offline nodes of graph
    """
    if not 0.0 < fraction <= 1.0:
        raise ValueError(f"Subsample fraction must lie in (0, 1], got {fraction}")
    m = graph.m_online
    # small slack so 0.1 * 1000 does not round up to 101
    sample_size = min(m, math.ceil(fraction * m - 1e-9))
    rng = as_trial_seed(seed).rng("predictor")
    sampled = rng.choice(m, size=sample_size, replace=False) if m else np.zeros(0, dtype=np.int64)

    counts = np.zeros(graph.n_offline, dtype=np.float64)
    for v in sampled:
        for u in graph.adjacency[v]:
            counts[u] += 1.0
    logger.debug(f"Subsample predictor: {sample_size} of {m} online nodes, fraction={fraction}")
    return DegreePredictor(counts / fraction)


def first_snapshot_predictor(first: LoadedGraph,
                             target: Union[LoadedGraph, Sequence[int]]) -> DegreePredictor:
    """
    Predict degrees in a later snapshot from the first one.

    sigma(u) is the degree of u in the first snapshot, or 1 if u does not
    appear there. Nodes are joined by their file ids.

    Args:
        first: First snapshot
        target: Later snapshot, or directly the offline ids to predict for

    Returns:
        DegreePredictor indexed like the target's offline side
    """
    target_ids = target.offline_ids if isinstance(target, LoadedGraph) else target
    first_degrees = first.graph.offline_degrees()
    first_index = first.offline_index()
    sigma = [float(first_degrees[first_index[node_id]]) if node_id in first_index
             else UNSEEN_NODE_DEGREE for node_id in target_ids]
    unseen = sum(1 for node_id in target_ids if node_id not in first_index)
    if unseen:
        logger.info(f"First-snapshot predictor: {unseen} of {len(sigma)} nodes unseen, sigma=1")
    return DegreePredictor(sigma)
