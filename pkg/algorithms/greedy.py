"""
Random Greedy Policy
Match each arrival to a uniformly random unmatched neighbour
"""

from typing import Optional, Sequence

import numpy as np

from algorithms.base_policy import OnlineAlgorithm


class RandomGreedy(OnlineAlgorithm):
    """Uniform choice among the offered candidates; never skips."""

    name = "greedy"

    def choose(self, online_node: int, candidates: Sequence[int],
               rng: np.random.Generator) -> Optional[int]:
        return candidates[int(rng.integers(len(candidates)))]


def random_greedy() -> RandomGreedy:
    """Build a random greedy policy."""
    return RandomGreedy()
