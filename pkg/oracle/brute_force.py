"""
Exhaustive Matching Oracle
Maximum matching by dynamic programming over subsets of offline nodes
"""

import numpy as np
from robot.api import logger

from graphs.bipartite_graph import BipartiteGraph
from oracle.errors import OracleLimitError

__all__ = ['brute_force_matching']

MAX_OFFLINE_NODES = 12


def brute_force_matching(graph: BipartiteGraph) -> int:
    """
    Maximum matching size by exhaustive search.

    Walks the online nodes once, keeping the set of offline subsets that can
    be saturated by a matching of the nodes seen so far.

    Args:
        graph: Graph with at most MAX_OFFLINE_NODES offline nodes

    Returns:
        Maximum matching size

    Raises:
        OracleLimitError: if the graph has too many offline nodes
    """
    n = graph.n_offline
    if n > MAX_OFFLINE_NODES:
        logger.error(f"Brute-force oracle called with n_offline={n}")
        raise OracleLimitError(
            f"brute-force matching supports at most {MAX_OFFLINE_NODES} offline nodes, got {n}",
            MAX_OFFLINE_NODES)
    masks = np.arange(1 << n, dtype=np.int64)
    reachable = np.zeros(1 << n, dtype=bool)
    reachable[0] = True
    for neighbours in graph.adjacency:
        grown = reachable.copy()
        for u in neighbours:
            bit = 1 << u
            sources = masks[reachable & ((masks & bit) == 0)]
            grown[sources | bit] = True
        reachable = grown
    sizes = np.array([bin(int(mask)).count('1') for mask in masks[reachable]])
    return int(sizes.max())
