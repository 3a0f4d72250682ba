"""
MinPredictedDegree Policy
Match each arrival to its unmatched neighbour of smallest predicted degree
"""

from typing import Optional, Sequence

import numpy as np
from robot.api import logger

from algorithms.base_policy import OnlineAlgorithm
from graphs.bipartite_graph import BipartiteGraph, DegreePredictor


class MinPredictedDegree(OnlineAlgorithm):
    """
    Greedy policy ordering offline nodes by a fixed cost per node.

    Ties are broken by the smallest offline index, so a run is a pure
    function of the graph, the arrival order and the costs.
    """

    name = "mpd"

    def __init__(self, sigma: DegreePredictor, name: Optional[str] = None):
        self.sigma = sigma
        self._costs = sigma.as_list()
        if name:
            self.name = name

    def start(self, n_offline: int, rng: np.random.Generator) -> None:
        super().start(n_offline, rng)
        if len(self._costs) != n_offline:
            raise ValueError(
                f"Predictor covers {len(self._costs)} offline nodes, graph has {n_offline}")

    def choose(self, online_node: int, candidates: Sequence[int],
               rng: np.random.Generator) -> Optional[int]:
        costs = self._costs
        return min(candidates, key=lambda u: (costs[u], u))


def min_predicted_degree(sigma: DegreePredictor) -> MinPredictedDegree:
    """
    Build the MinPredictedDegree policy.

    Args:
        sigma: Degree predictor

    Returns:
        Policy choosing argmin sigma(u), smallest index on ties
    """
    return MinPredictedDegree(sigma)


def min_degree(graph: BipartiteGraph) -> MinPredictedDegree:
    """
    MinPredictedDegree with a perfect predictor (true degrees of graph).

    Args:
        graph: Full graph, read offline to obtain the degrees

    Returns:
        Policy named "mindegree"
    """
    logger.debug(f"Building MinDegree from true degrees of {graph!r}")
    return MinPredictedDegree(DegreePredictor.exact(graph), name="mindegree")
