"""
Base Policy Class
Common interface for online matching policies
Policies hold per-run state only: create one instance per concurrent run
"""

from abc import ABC, abstractmethod
from typing import Optional, Sequence

import numpy as np


class OnlineAlgorithm(ABC):
    """
    Base class of every online matching policy.

    The driver calls ``start`` once per run and then ``choose`` for each
    arriving online node that still has unmatched neighbours. ``choose``
    returns one of the offered offline indices or None to skip.
    """

    name: str = "policy"

    def start(self, n_offline: int, rng: np.random.Generator) -> None:
        """
        Reset per-run state.

        Args:
            n_offline: Number of offline nodes of the graph about to be replayed
            rng: Per-run random stream
        """
        self.n_offline = n_offline

    @abstractmethod
    def choose(self, online_node: int, candidates: Sequence[int],
               rng: np.random.Generator) -> Optional[int]:
        """
        Pick an offline node for the arriving online node.

        Args:
            online_node: Index of the arriving online node
            candidates: Its unmatched offline neighbours (nonempty)
            rng: Per-run random stream

        Returns:
            Chosen offline index, or None to leave the node unmatched
        """

    @property
    def is_greedy(self) -> bool:
        """Greedy policies never skip when a candidate exists."""
        return True

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r})"
