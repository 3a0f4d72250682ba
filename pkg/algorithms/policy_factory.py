"""
Policy Factory
Resolves algorithm names used in configs and on the command line
"""

from typing import Callable, Dict, List, Optional

from robot.api import logger

from algorithms.augment import greedy_augment, mpd_augment
from algorithms.base_policy import OnlineAlgorithm
from algorithms.greedy import random_greedy
from algorithms.min_predicted_degree import min_degree, min_predicted_degree
from algorithms.ranking import ranking
from graphs.bipartite_graph import BipartiteGraph, DegreePredictor

__all__ = ['PolicyFactory', 'create_policy']

PolicyBuilder = Callable[[Optional[BipartiteGraph], Optional[DegreePredictor]], OnlineAlgorithm]


def _needs_sigma(name: str, sigma: Optional[DegreePredictor]) -> DegreePredictor:
    if sigma is None:
        raise ValueError(f"Algorithm '{name}' needs a degree predictor")
    return sigma


def _needs_graph(name: str, graph: Optional[BipartiteGraph]) -> BipartiteGraph:
    if graph is None:
        raise ValueError(f"Algorithm '{name}' needs the full graph")
    return graph


class PolicyFactory:
    """
    Factory for online policies.

    Names: "mpd", "mindegree", "ranking", "greedy", "mpd-augment:<base>",
    "greedy-augment:<base>". Extra base policies can be registered.
    """

    _builders: Dict[str, PolicyBuilder] = {
        'mpd': lambda graph, sigma: min_predicted_degree(_needs_sigma('mpd', sigma)),
        'mindegree': lambda graph, sigma: min_degree(_needs_graph('mindegree', graph)),
        'ranking': lambda graph, sigma: ranking(),
        'greedy': lambda graph, sigma: random_greedy(),
    }

    @classmethod
    def register(cls, name: str, builder: PolicyBuilder) -> None:
        """
        Register a custom policy builder.

        Args:
            name: Name used in configs (must not contain ':')
            builder: Callable (graph, sigma) -> OnlineAlgorithm
        """
        if ':' in name:
            raise ValueError(f"Policy name must not contain ':': {name}")
        cls._builders[name] = builder
        logger.info(f"Policy registered: {name}")

    @classmethod
    def known_names(cls) -> List[str]:
        return sorted(cls._builders)

    @classmethod
    def is_known(cls, name: str) -> bool:
        """True if name resolves (including nested augment prefixes)."""
        prefix, _, rest = name.partition(':')
        if rest and prefix in ('mpd-augment', 'greedy-augment'):
            return cls.is_known(rest)
        return not rest and name in cls._builders

    @classmethod
    def create(cls, name: str, graph: Optional[BipartiteGraph] = None,
               sigma: Optional[DegreePredictor] = None) -> OnlineAlgorithm:
        """
        Create a fresh policy instance.

        Args:
            name: Algorithm name
            graph: Full graph (needed by "mindegree")
            sigma: Degree predictor (needed by "mpd" and "mpd-augment")

        Returns:
            New OnlineAlgorithm instance
        """
        prefix, _, rest = name.partition(':')
        if rest and prefix == 'mpd-augment':
            return mpd_augment(cls.create(rest, graph, sigma), _needs_sigma(name, sigma))
        if rest and prefix == 'greedy-augment':
            return greedy_augment(cls.create(rest, graph, sigma))
        builder = cls._builders.get(name) if not rest else None
        if builder is None:
            logger.error(f"Unknown algorithm: {name}")
            raise ValueError(f"Unknown algorithm: {name}. Available: {cls.known_names()} "
                             f"plus 'mpd-augment:<base>' and 'greedy-augment:<base>'")
        return builder(graph, sigma)


# ==================== Library Functions ====================

def create_policy(name, graph=None, sigma=None):
    """
    Keyword: Create an online policy by name.

    Returns:
        OnlineAlgorithm instance
    """
    return PolicyFactory.create(name, graph, sigma)
