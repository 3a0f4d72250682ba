"""
Ranking Policy
Random cost per offline node drawn at run start, then greedy by minimum cost
"""

from typing import Optional, Sequence

import numpy as np

from algorithms.base_policy import OnlineAlgorithm


class Ranking(OnlineAlgorithm):
    """
    Ranking as MinPredictedDegree over i.i.d. uniform costs.

    The costs are redrawn from the run's random stream on every ``start``.
    """

    name = "ranking"

    def __init__(self):
        self._costs = []

    def start(self, n_offline: int, rng: np.random.Generator) -> None:
        super().start(n_offline, rng)
        self._costs = rng.random(n_offline).tolist()

    @property
    def costs(self):
        return list(self._costs)

    def choose(self, online_node: int, candidates: Sequence[int],
               rng: np.random.Generator) -> Optional[int]:
        costs = self._costs
        return min(candidates, key=lambda u: (costs[u], u))


def ranking() -> Ranking:
    """Build a Ranking policy."""
    return Ranking()
