"""
Graph Transforms
Bipartite double cover, snapshot rewiring and degree histograms
"""

import dataclasses
from typing import Dict, Iterable, Tuple

import numpy as np
from robot.api import logger

from graphs.bipartite_graph import BipartiteGraph
from graphs.errors import GraphValidationError
from graphs.trial_seed import as_trial_seed

__all__ = ['bipartite_double_cover', 'rewire_edges', 'degree_histogram']


def bipartite_double_cover(edges: Iterable[Tuple[int, int]], n: int) -> BipartiteGraph:
    """
    Bipartite double cover of an undirected graph on n nodes.

    Edge {i, j} becomes (u'_i, v'_j) and (u'_j, v'_i); a self-loop {i, i}
    becomes the single edge (u'_i, v'_i).

    Args:
        edges: Undirected edges as (i, j) pairs
        n: Number of nodes

    Returns:
        BipartiteGraph with n offline and n online nodes
    """
    cover = set()
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise GraphValidationError(f"edge ({i}, {j}) has a node outside [0, {n})",
                                       node=i if not 0 <= i < n else j)
        cover.add((i, j))
        cover.add((j, i))
    return BipartiteGraph.from_edges(n, n, cover)


def rewire_edges(loaded, rate: float, seed=None):
    """
    Replace each edge with probability rate by an edge between uniformly
    random endpoints (duplicates collapse).

    Args:
        loaded: BipartiteGraph or LoadedGraph
        rate: Replacement probability in [0, 1]
        seed: TrialSeed or int; the "rewire" stream is used

    Returns:
        Same type as ``loaded``, sharing its node ids
    """
    if not 0.0 <= rate <= 1.0:
        raise ValueError(f"Rewire rate must lie in [0, 1], got {rate}")
    graph: BipartiteGraph = getattr(loaded, 'graph', loaded)
    rng = as_trial_seed(seed).rng("rewire")
    edges = list(graph.edges())
    replace = rng.random(len(edges)) < rate
    new_u = rng.integers(0, max(graph.n_offline, 1), size=len(edges))
    new_v = rng.integers(0, max(graph.m_online, 1), size=len(edges))
    rewired = [(int(new_u[k]), int(new_v[k])) if replace[k] else edge
               for k, edge in enumerate(edges)]
    logger.debug(f"Rewired {int(replace.sum())} of {len(edges)} edges")
    result = BipartiteGraph.from_edges(graph.n_offline, graph.m_online, rewired)
    if result.arrival_order != graph.arrival_order:
        result = result.with_arrival_order(graph.arrival_order)
    if loaded is graph:
        return result
    return dataclasses.replace(loaded, graph=result)


def degree_histogram(graph: BipartiteGraph) -> Dict[int, int]:
    """
    Count offline nodes by true degree.

    Returns:
        Mapping degree -> number of offline nodes with that degree (zero counts omitted)
    """
    counts = np.bincount(graph.offline_degrees(), minlength=1)
    return {int(degree): int(count) for degree, count in enumerate(counts) if count}
