"""
Fixed Instances
Small hand-built graphs with known answers
"""

from graphs.bipartite_graph import BipartiteGraph


def half_competitive_instance() -> BipartiteGraph:
    """
    Six-by-six instance on which a perfect-predictor MinPredictedDegree
    matches only three nodes although a perfect matching exists.

    Offline nodes 0-2 are adjacent to online nodes 0-2; offline node 3+i is
    adjacent to online nodes i and 3+i (i = 0, 1, 2).
    """
    offline = [[0, 1, 2], [0, 1, 2], [0, 1, 2], [0, 3], [1, 4], [2, 5]]
    return BipartiteGraph.from_offline_lists(offline, 6)


def complete_bipartite(n: int, m: int) -> BipartiteGraph:
    return BipartiteGraph(n, m, [list(range(n)) for _ in range(m)])


def empty_graph(n: int = 0, m: int = 0) -> BipartiteGraph:
    return BipartiteGraph(n, m, [[] for _ in range(m)])
