"""
Hall Subset
Empirical S* certificate: offline nodes whose neighbourhoods lie inside that of the degree-1 nodes
"""

from dataclasses import dataclass
from typing import FrozenSet

from robot.api import logger

from graphs.bipartite_graph import BipartiteGraph

__all__ = ['HallCertificate', 'hall_subset']


@dataclass(frozen=True)
class HallCertificate:
    """
    Hall-deficiency upper bound on the maximum matching.

    bound = n - (|s_star| - |n_s_star|) >= maximum matching size.
    """

    s_star: FrozenSet[int]
    n_s_star: FrozenSet[int]
    bound: int

    @property
    def deficiency(self) -> int:
        return len(self.s_star) - len(self.n_s_star)

    def holds_for(self, graph: BipartiteGraph) -> bool:
        """Recompute N(s_star) from graph and compare with the certificate."""
        neighbours = graph.offline_neighbours()
        reached = frozenset(v for u in self.s_star for v in neighbours[u])
        return (reached == self.n_s_star
                and self.bound == graph.n_offline - (len(self.s_star) - len(reached)))


def hall_subset(graph: BipartiteGraph) -> HallCertificate:
    """
    Build the S* certificate from true degrees.

    U1 is the set of offline nodes of degree 1; S* holds every offline node
    whose neighbourhood is a subset of N(U1), so degree-0 nodes are included.

    Args:
        graph: Valid bipartite graph

    Returns:
        HallCertificate
    """
    neighbours = graph.offline_neighbours()
    covered = frozenset(nbrs[0] for nbrs in neighbours if len(nbrs) == 1)
    s_star = frozenset(u for u, nbrs in enumerate(neighbours) if covered.issuperset(nbrs))
    bound = graph.n_offline - (len(s_star) - len(covered))
    logger.debug(f"Hall subset: |S*|={len(s_star)} |N(S*)|={len(covered)} bound={bound}")
    return HallCertificate(s_star, covered, bound)
