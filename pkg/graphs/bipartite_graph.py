"""
Bipartite Graph Types
Offline/online bipartite graph, degree predictor and matching containers
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from robot.api import logger

from graphs.errors import GraphValidationError

__all__ = ['BipartiteGraph', 'DegreePredictor', 'Matching', 'validate_graph', 'matching_size',
           'predictor_l2_error']


class BipartiteGraph:
    """
    Bipartite graph with a static offline side and ordered online arrivals.

    ``adjacency[v]`` lists the offline neighbours revealed when online node
    ``v`` arrives; ``arrival_order`` is the order in which online nodes are
    revealed. Instances are treated as immutable: every transform returns a
    new graph.
    """

    __slots__ = ('n_offline', 'm_online', 'adjacency', 'arrival_order', '_offline_degrees')

    def __init__(self, n_offline: int, m_online: int,
                 adjacency: Sequence[Sequence[int]],
                 arrival_order: Optional[Sequence[int]] = None):
        """
        Initialize the graph. No validation happens here, see validate_graph.

        Args:
            n_offline: Number of offline nodes
            m_online: Number of online nodes
            adjacency: Per-online-node list of offline indices
            arrival_order: Permutation of online indices (identity if None)
        """
        self.n_offline = int(n_offline)
        self.m_online = int(m_online)
        self.adjacency: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(int(u) for u in neighbours) for neighbours in adjacency
        )
        if arrival_order is None:
            arrival_order = range(self.m_online)
        self.arrival_order: Tuple[int, ...] = tuple(int(v) for v in arrival_order)
        self._offline_degrees: Optional[np.ndarray] = None

    @classmethod
    def from_edges(cls, n_offline: int, m_online: int,
                   edges: Iterable[Tuple[int, int]]) -> 'BipartiteGraph':
        """
        Build a graph from (offline, online) pairs, dropping repeated pairs.

        Args:
            n_offline: Number of offline nodes
            m_online: Number of online nodes
            edges: Iterable of (offline index, online index)

        Returns:
            Validated BipartiteGraph with sorted adjacency lists
        """
        neighbour_sets: List[set] = [set() for _ in range(m_online)]
        for u, v in edges:
            if not 0 <= v < m_online:
                raise GraphValidationError(
                    f"online index {v} out of range [0, {m_online})", node=v)
            neighbour_sets[v].add(int(u))
        graph = cls(n_offline, m_online, [sorted(s) for s in neighbour_sets])
        validate_graph(graph)
        return graph

    @classmethod
    def from_offline_lists(cls, offline_neighbours: Sequence[Sequence[int]],
                           m_online: int) -> 'BipartiteGraph':
        """
        Build a graph from per-offline-node neighbour lists.

        Args:
            offline_neighbours: offline_neighbours[u] lists online indices adjacent to u
            m_online: Number of online nodes

        Returns:
            Validated BipartiteGraph
        """
        edges = ((u, v) for u, nbrs in enumerate(offline_neighbours) for v in nbrs)
        return cls.from_edges(len(offline_neighbours), m_online, edges)

    # ==================== Structure ====================

    @property
    def edge_count(self) -> int:
        return sum(len(neighbours) for neighbours in self.adjacency)

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Iterate (offline, online) pairs in online-index order."""
        for v, neighbours in enumerate(self.adjacency):
            for u in neighbours:
                yield u, v

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= v < self.m_online and u in self.adjacency[v]

    def offline_degrees(self) -> np.ndarray:
        """
        True degree of every offline node.

        Returns:
            Read-only integer array of length n_offline
        """
        if self._offline_degrees is None:
            degrees = np.zeros(self.n_offline, dtype=np.int64)
            for neighbours in self.adjacency:
                for u in neighbours:
                    degrees[u] += 1
            degrees.setflags(write=False)
            self._offline_degrees = degrees
        return self._offline_degrees

    def online_degrees(self) -> np.ndarray:
        return np.array([len(neighbours) for neighbours in self.adjacency], dtype=np.int64)

    def offline_neighbours(self) -> List[List[int]]:
        """Transpose of the adjacency: online neighbours of every offline node."""
        neighbours: List[List[int]] = [[] for _ in range(self.n_offline)]
        for v, offline in enumerate(self.adjacency):
            for u in offline:
                neighbours[u].append(v)
        return neighbours

    # ==================== Transforms ====================

    def with_arrival_order(self, arrival_order: Sequence[int]) -> 'BipartiteGraph':
        """Same edges, different arrival order."""
        return BipartiteGraph(self.n_offline, self.m_online, self.adjacency, arrival_order)

    def shuffled(self, rng: np.random.Generator) -> 'BipartiteGraph':
        """
        Randomize the arrival order of the online nodes.

        Args:
            rng: Random stream owned by the caller

        Returns:
            New graph sharing adjacency storage
        """
        return self.with_arrival_order(rng.permutation(self.m_online).tolist())

    def relabel_offline(self, permutation: Sequence[int]) -> 'BipartiteGraph':
        """
        Rename the offline nodes: old node u becomes permutation[u].

        Generators hand out offline indices in profile order.

        Args:
            permutation: Permutation of [0, n_offline)

        Returns:
            New graph with the same arrival order

        Raises:
            GraphValidationError: if permutation is not a permutation of the offline side
        """
        mapping = [int(u) for u in permutation]
        if sorted(mapping) != list(range(self.n_offline)):
            logger.error(f"Offline relabelling of length {len(mapping)} is not a permutation")
            raise GraphValidationError(
                f"offline relabelling is not a permutation of [0, {self.n_offline})")
        adjacency = [sorted(mapping[u] for u in neighbours) for neighbours in self.adjacency]
        return BipartiteGraph(self.n_offline, self.m_online, adjacency, self.arrival_order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (self.n_offline == other.n_offline and self.m_online == other.m_online
                and self.adjacency == other.adjacency
                and self.arrival_order == other.arrival_order)

    def __hash__(self) -> int:
        return hash((self.n_offline, self.m_online, self.adjacency, self.arrival_order))

    def __repr__(self) -> str:
        return (f"BipartiteGraph(n_offline={self.n_offline}, m_online={self.m_online}, "
                f"edges={self.edge_count})")


class DegreePredictor:
    """
    Predicted degree sigma(u) >= 0 for every offline node.
    """

    __slots__ = ('sigma', '_as_list')

    def __init__(self, sigma: Sequence[float]):
        values = np.array(sigma, dtype=np.float64)
        if values.ndim != 1:
            raise ValueError("Predictor values must be one-dimensional")
        if not np.all(np.isfinite(values)) or np.any(values < 0):
            bad = int(np.flatnonzero(~np.isfinite(values) | (values < 0))[0])
            raise ValueError(f"Predicted degree of offline node {bad} must be a nonnegative real")
        values.setflags(write=False)
        self.sigma = values
        self._as_list: List[float] = values.tolist()

    @classmethod
    def exact(cls, graph: BipartiteGraph) -> 'DegreePredictor':
        """Perfect predictor: sigma(u) = true degree of u."""
        return cls(graph.offline_degrees())

    def __len__(self) -> int:
        return len(self._as_list)

    def __getitem__(self, u: int) -> float:
        return self._as_list[u]

    def as_list(self) -> List[float]:
        return self._as_list

    def covers(self, graph: BipartiteGraph) -> bool:
        return len(self) == graph.n_offline

    def relabeled(self, permutation: Sequence[int]) -> 'DegreePredictor':
        """Predictions under BipartiteGraph.relabel_offline(permutation)."""
        values = np.empty_like(self.sigma)
        values[np.asarray(permutation, dtype=np.int64)] = self.sigma
        return DegreePredictor(values)

    def __repr__(self) -> str:
        return f"DegreePredictor(n={len(self)})"


@dataclass(frozen=True)
class Matching:
    """
    Set of disjoint (offline, online) pairs.
    """

    pairs: Tuple[Tuple[int, int], ...] = ()

    @property
    def size(self) -> int:
        return len(self.pairs)

    def offline_matched(self) -> Dict[int, int]:
        return {u: v for u, v in self.pairs}

    def online_matched(self) -> Dict[int, int]:
        return {v: u for u, v in self.pairs}

    def is_valid_for(self, graph: BipartiteGraph) -> bool:
        """
        Check disjointness and that every pair is an edge of graph.

        Args:
            graph: Underlying graph

        Returns:
            True if all Matching invariants hold
        """
        offline = [u for u, _ in self.pairs]
        online = [v for _, v in self.pairs]
        if len(set(offline)) != len(offline) or len(set(online)) != len(online):
            return False
        return all(graph.has_edge(u, v) for u, v in self.pairs)

    def is_maximal_in(self, graph: BipartiteGraph) -> bool:
        """True if no edge of graph has both endpoints unmatched."""
        matched_offline = set(u for u, _ in self.pairs)
        matched_online = set(v for _, v in self.pairs)
        return not any(u not in matched_offline and v not in matched_online
                       for u, v in graph.edges())


# ==================== Operations ====================

def validate_graph(graph: BipartiteGraph) -> bool:
    """
    Check every BipartiteGraph invariant.

    Args:
        graph: Graph to check

    Returns:
        True if the graph is valid

    Raises:
        GraphValidationError: naming the first violated invariant and node
    """
    if graph.n_offline < 0 or graph.m_online < 0:
        logger.error(f"Negative node counts: n={graph.n_offline} m={graph.m_online}")
        raise GraphValidationError("node counts must be nonnegative")
    if len(graph.adjacency) != graph.m_online:
        logger.error(f"Adjacency has {len(graph.adjacency)} lists for {graph.m_online} online nodes")
        raise GraphValidationError(
            f"adjacency has {len(graph.adjacency)} lists for {graph.m_online} online nodes")
    for v, neighbours in enumerate(graph.adjacency):
        seen = set()
        for u in neighbours:
            if not 0 <= u < graph.n_offline:
                logger.error(f"Online node {v} lists offline index {u} out of range")
                raise GraphValidationError(
                    f"index out of range: online node {v} lists offline index {u} "
                    f"(n_offline={graph.n_offline})", node=v)
            if u in seen:
                logger.error(f"Online node {v} lists offline index {u} twice")
                raise GraphValidationError(
                    f"duplicate edge: online node {v} lists offline index {u} twice", node=v)
            seen.add(u)
    order = graph.arrival_order
    if len(order) != graph.m_online or sorted(order) != list(range(graph.m_online)):
        position = _first_bad_arrival(order, graph.m_online)
        logger.error(f"Arrival order is not a permutation at position {position}")
        raise GraphValidationError(
            f"arrival_order is not a permutation of [0, {graph.m_online}) "
            f"(first problem at position {position})", node=position)
    return True


def _first_bad_arrival(order: Sequence[int], m_online: int) -> int:
    seen = set()
    for position, v in enumerate(order):
        if not 0 <= v < m_online or v in seen:
            return position
        seen.add(v)
    return len(order)


def matching_size(matching: Matching) -> int:
    """Number of pairs in the matching."""
    return matching.size


def predictor_l2_error(sigma: DegreePredictor, graph: BipartiteGraph) -> float:
    """
    l2 distance between predicted and true offline degrees.

    Args:
        sigma: Degree predictor covering every offline node of graph
        graph: Graph providing the true degrees

    Returns:
        sqrt(sum_u (sigma(u) - deg(u))^2)
    """
    if not sigma.covers(graph):
        raise ValueError(
            f"Predictor covers {len(sigma)} nodes, graph has {graph.n_offline} offline nodes")
    residual = sigma.sigma - graph.offline_degrees()
    return float(np.sqrt(np.dot(residual, residual)))
