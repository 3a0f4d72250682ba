"""
Hopcroft-Karp
Exact maximum-cardinality bipartite matching in O(E * sqrt(V))
"""

from collections import deque
from typing import List

from robot.api import logger

from graphs.bipartite_graph import BipartiteGraph, Matching

__all__ = ['HopcroftKarp', 'maximum_matching', 'max_matching']

_FREE = -1


class HopcroftKarp:
    """
    Phase-based augmenting-path search.

    Each phase layers the offline nodes by a BFS from the free ones, then
    augments along vertex-disjoint shortest paths with an explicit-stack DFS
    (no recursion, so deep paths on large graphs are fine).
    """

    def __init__(self, graph: BipartiteGraph):
        self.graph = graph
        self.adjacency = graph.offline_neighbours()
        self.match_offline: List[int] = [_FREE] * graph.n_offline
        self.match_online: List[int] = [_FREE] * graph.m_online
        self._dist: List[float] = [0.0] * graph.n_offline
        self._free_layer = float('inf')

    def _layer(self) -> bool:
        """BFS from free offline nodes; True if some free online node is reachable."""
        inf = float('inf')
        dist = self._dist
        queue = deque()
        for u in range(self.graph.n_offline):
            if self.match_offline[u] == _FREE:
                dist[u] = 0.0
                queue.append(u)
            else:
                dist[u] = inf
        self._free_layer = inf
        while queue:
            u = queue.popleft()
            if dist[u] >= self._free_layer:
                continue
            for v in self.adjacency[u]:
                w = self.match_online[v]
                if w == _FREE:
                    if self._free_layer == inf:
                        self._free_layer = dist[u] + 1
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return self._free_layer != inf

    def _augment(self, root: int, cursor: List[int]) -> bool:
        """Search one shortest augmenting path from root and flip it."""
        dist = self._dist
        stack = [root]
        via: List[int] = []
        while stack:
            u = stack[-1]
            neighbours = self.adjacency[u]
            advanced = False
            while cursor[u] < len(neighbours):
                v = neighbours[cursor[u]]
                cursor[u] += 1
                w = self.match_online[v]
                if w == _FREE:
                    if dist[u] + 1 == self._free_layer:
                        via.append(v)
                        for uu, vv in zip(stack, via):
                            self.match_offline[uu] = vv
                            self.match_online[vv] = uu
                        return True
                elif dist[w] == dist[u] + 1:
                    via.append(v)
                    stack.append(w)
                    advanced = True
                    break
            if not advanced:
                dist[u] = float('inf')
                stack.pop()
                if via:
                    via.pop()
        return False

    def run(self) -> Matching:
        phases = 0
        while self._layer():
            phases += 1
            cursor = [0] * self.graph.n_offline
            for u in range(self.graph.n_offline):
                if self.match_offline[u] == _FREE:
                    self._augment(u, cursor)
        pairs = tuple((u, v) for u, v in enumerate(self.match_offline) if v != _FREE)
        logger.debug(f"Hopcroft-Karp: {len(pairs)} pairs after {phases} phases")
        return Matching(pairs)


def maximum_matching(graph: BipartiteGraph) -> Matching:
    """
    A maximum matching of graph.

    Returns:
        Matching of maximum cardinality
    """
    return HopcroftKarp(graph).run()


def max_matching(graph: BipartiteGraph) -> int:
    """
    Size of a maximum matching of graph.

    Args:
        graph: Valid bipartite graph

    Returns:
        Maximum matching size
    """
    return maximum_matching(graph).size
