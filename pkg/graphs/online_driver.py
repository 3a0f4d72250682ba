"""
Online Driver
Replays the online arrivals of a bipartite graph against a matching policy
"""

from typing import List, Optional, Protocol, Sequence

import numpy as np
from robot.api import logger

from graphs.bipartite_graph import BipartiteGraph, Matching
from graphs.errors import ContractViolationError
from graphs.trial_seed import TrialSeed, as_trial_seed

__all__ = ['OnlinePolicy', 'run_online', 'run_many']


class OnlinePolicy(Protocol):
    """Structural interface every online algorithm satisfies."""

    name: str

    def start(self, n_offline: int, rng: np.random.Generator) -> None:
        ...

    def choose(self, online_node: int, candidates: Sequence[int],
               rng: np.random.Generator) -> Optional[int]:
        ...


def run_online(graph: BipartiteGraph, algo: OnlinePolicy, seed=None) -> Matching:
    """
    Process the online nodes of graph in arrival order.

    Each arriving node's unmatched neighbours are offered to the policy, which
    either returns one of them or None. Decisions are final.

    Args:
        graph: Valid bipartite graph
        algo: Online policy (fresh per-run state is created by ``start``)
        seed: TrialSeed (or int master seed) for the policy's random stream

    Returns:
        Matching built by the policy

    Raises:
        ContractViolationError: if the policy returns an index it was not offered
    """
    rng = as_trial_seed(seed).rng("algorithm")
    algo.start(graph.n_offline, rng)

    matched = bytearray(graph.n_offline)
    pairs: List[tuple] = []
    adjacency = graph.adjacency
    for v in graph.arrival_order:
        candidates = [u for u in adjacency[v] if not matched[u]]
        if not candidates:
            continue
        choice = algo.choose(v, candidates, rng)
        if choice is None:
            continue
        if choice not in candidates:
            logger.error(f"Policy '{algo.name}' picked offline node {choice} for online node {v}")
            reason = "non-neighbor" if choice not in adjacency[v] else "already matched"
            raise ContractViolationError(
                f"policy '{algo.name}' returned {reason} offline node {choice} "
                f"for online node {v}", online_node=v, offline_node=choice)
        matched[choice] = 1
        pairs.append((choice, v))

    logger.debug(f"Policy '{algo.name}' matched {len(pairs)} of {graph.m_online} online nodes")
    return Matching(tuple(pairs))


def run_many(graph: BipartiteGraph, algorithms: Sequence[OnlinePolicy],
             seed: TrialSeed) -> List[Matching]:
    """Run several policies on the identical graph and arrival order."""
    return [run_online(graph, algo, seed) for algo in algorithms]
