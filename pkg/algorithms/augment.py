"""
Augmentation Combinators
Replay a base policy and fill in its skips with a greedy rule
"""

from typing import Optional, Sequence

import numpy as np

from algorithms.base_policy import OnlineAlgorithm
from algorithms.greedy import RandomGreedy
from algorithms.min_predicted_degree import MinPredictedDegree
from graphs.bipartite_graph import DegreePredictor


class AugmentedPolicy(OnlineAlgorithm):
    """
    Defers every decision to ``base``; only a skip with candidates left is
    overridden by ``fallback``. A base decision to match is never changed.
    """

    def __init__(self, base: OnlineAlgorithm, fallback: OnlineAlgorithm, label: str):
        self.base = base
        self.fallback = fallback
        self.name = f"{label}:{base.name}"
        self.fallback_count = 0

    def start(self, n_offline: int, rng: np.random.Generator) -> None:
        super().start(n_offline, rng)
        self.base.start(n_offline, rng)
        # the fallback draws from a child stream so base decisions replay unchanged
        self._fallback_rng = np.random.default_rng(rng.bit_generator.seed_seq.spawn(1)[0])
        self.fallback.start(n_offline, self._fallback_rng)
        self.fallback_count = 0

    def choose(self, online_node: int, candidates: Sequence[int],
               rng: np.random.Generator) -> Optional[int]:
        choice = self.base.choose(online_node, candidates, rng)
        if choice is None and candidates:
            self.fallback_count += 1
            return self.fallback.choose(online_node, candidates, self._fallback_rng)
        return choice


def mpd_augment(base: OnlineAlgorithm, sigma: DegreePredictor) -> AugmentedPolicy:
    """
    Apply the MinPredictedDegree rule whenever base skips.

    Args:
        base: Any online policy
        sigma: Degree predictor used by the fallback rule

    Returns:
        Policy named "mpd-augment:<base>"
    """
    return AugmentedPolicy(base, MinPredictedDegree(sigma), "mpd-augment")


def greedy_augment(base: OnlineAlgorithm) -> AugmentedPolicy:
    """
    Match a uniformly random unmatched neighbour whenever base skips.

    Args:
        base: Any online policy

    Returns:
        Policy named "greedy-augment:<base>"
    """
    return AugmentedPolicy(base, RandomGreedy(), "greedy-augment")
