"""
Graph Fixtures
Robot Framework library for seeded random graphs, fixed instances and scripted policies
"""

import os
from typing import List, Optional, Sequence

import numpy as np
from robot.api import logger

from algorithms.base_policy import OnlineAlgorithm
from algorithms.policy_factory import PolicyFactory
from generators.clvb import clvb_sample
from generators.degree_profiles import DegreeProfile, uniform_profile, zipf_profile
from generators.fixtures import complete_bipartite, empty_graph, half_competitive_instance
from graphs.bipartite_graph import BipartiteGraph, DegreePredictor
from graphs.trial_seed import TrialSeed


class SkipEveryOther(OnlineAlgorithm):
    """Skips every second arrival that has candidates; otherwise takes the smallest index."""

    name = "skip-every-other"

    def start(self, n_offline: int, rng: np.random.Generator) -> None:
        super().start(n_offline, rng)
        self._offers = 0

    def choose(self, online_node, candidates, rng):
        self._offers += 1
        if self._offers % 2 == 0:
            return None
        return min(candidates)

    @property
    def is_greedy(self) -> bool:
        return False


class AlwaysSkip(OnlineAlgorithm):
    """Never matches."""

    name = "always-skip"

    def choose(self, online_node, candidates, rng):
        return None

    @property
    def is_greedy(self) -> bool:
        return False


class ScriptedPolicy(OnlineAlgorithm):
    """Returns a fixed offline index per online node (None skips), even if it was not offered."""

    name = "scripted"

    def __init__(self, script: dict):
        self.script = {int(v): (None if u is None else int(u)) for v, u in script.items()}

    def choose(self, online_node, candidates, rng):
        return self.script.get(online_node)


class GraphFixtures:
    """
    Test graph library.
    Provides Robot Framework keywords for seeded random graphs and policies used by property tests.
    """

    def __init__(self, master_seed: int = 20240611):
        """
        Initialize GraphFixtures with a master seed.

        Args:
            master_seed: Seed of every random fixture (index selects the stream)
        """
        self.master_seed = int(master_seed)
        logger.info(f"GraphFixtures initialized with master seed: {self.master_seed}")

    def trial_seed(self, index: int = 0) -> TrialSeed:
        return TrialSeed(self.master_seed, int(index))

    def generate_random_graph(self, n: int, m: int, p: float, index: int = 0) -> BipartiteGraph:
        """
        Generate a graph with independent edges of probability p and a shuffled arrival order.

        Args:
            n: Offline nodes
            m: Online nodes
            p: Edge probability
            index: Fixture index (stream selector)

        Returns:
            BipartiteGraph
        """
        rng = self.trial_seed(index).rng("graph")
        mask = rng.random((int(m), int(n))) < float(p)
        adjacency = [np.flatnonzero(row).tolist() for row in mask]
        graph = BipartiteGraph(int(n), int(m), adjacency).shuffled(self.trial_seed(index).rng("arrivals"))
        logger.debug(f"Random graph {index}: n={n} m={m} edges={graph.edge_count}")
        return graph

    def generate_random_graphs(self, count: int, max_offline: int = 12, max_online: int = 12) -> List[BipartiteGraph]:
        """
        Generate count random graphs with random sizes and densities.

        Args:
            count: Number of graphs
            max_offline: Largest offline side
            max_online: Largest online side

        Returns:
            List of BipartiteGraph
        """
        sizes = np.random.default_rng(self.trial_seed(-1).seed_sequence("sizes"))
        graphs = []
        for index in range(int(count)):
            n = int(sizes.integers(1, int(max_offline) + 1))
            m = int(sizes.integers(1, int(max_online) + 1))
            p = float(sizes.uniform(0.05, 0.6))
            graphs.append(self.generate_random_graph(n, m, p, index))
        logger.info(f"Generated {len(graphs)} random graphs")
        return graphs

    def generate_clvb_graph(self, degrees: Sequence[float], m: int, index: int = 0) -> BipartiteGraph:
        """
        Sample a CLV-B graph from a per-node expected degree list.

        Args:
            degrees: Expected degree of each offline node
            m: Online nodes
            index: Fixture index

        Returns:
            BipartiteGraph
        """
        profile = DegreeProfile.from_vector([float(d) for d in degrees])
        return clvb_sample(profile, int(m), self.trial_seed(index))

    def generate_zipf_graph(self, n: int, m: int, alpha: float, index: int = 0) -> BipartiteGraph:
        """Sample a CLV-B graph from the Zipf profile with scale m/2."""
        return clvb_sample(zipf_profile(int(n), int(m) / 2, float(alpha)), int(m), self.trial_seed(index))

    def generate_uniform_graph(self, n: int, m: int, degree: float, index: int = 0) -> BipartiteGraph:
        """Sample a CLV-B graph where every offline node has the same expected degree."""
        return clvb_sample(uniform_profile(int(n), float(degree)), int(m), self.trial_seed(index))

    def get_half_competitive_graph(self) -> BipartiteGraph:
        return half_competitive_instance()

    def get_complete_graph(self, n: int, m: int) -> BipartiteGraph:
        return complete_bipartite(int(n), int(m))

    def get_edgeless_graph(self, n: int = 0, m: int = 0) -> BipartiteGraph:
        return empty_graph(int(n), int(m))

    def build_graph_from_lists(self, offline_lists: Sequence[Sequence[int]], m: int) -> BipartiteGraph:
        """
        Build a graph from offline neighbour lists.

        Args:
            offline_lists: Online neighbours of each offline node
            m: Online nodes

        Returns:
            BipartiteGraph with identity arrival order
        """
        return BipartiteGraph.from_offline_lists([[int(v) for v in row] for row in offline_lists], int(m))

    def create_degree_profile(self, degrees: Sequence[float]) -> DegreeProfile:
        return DegreeProfile.from_vector([float(d) for d in degrees])

    def create_grouped_profile(self, degrees: Sequence[float], fractions: Sequence[float]) -> DegreeProfile:
        return DegreeProfile.from_groups([float(d) for d in degrees], [float(f) for f in fractions])

    def shuffle_arrivals(self, graph: BipartiteGraph, index: int = 0) -> BipartiteGraph:
        return graph.shuffled(self.trial_seed(index).rng("arrivals"))

    def create_predictor(self, values: Sequence[float]) -> DegreePredictor:
        return DegreePredictor([float(v) for v in values])

    def create_constant_predictor(self, n: int, value: float = 0.0) -> DegreePredictor:
        """Predictor with identical values, so MPD reduces to smallest-index greedy."""
        return DegreePredictor([float(value)] * int(n))

    def create_exact_predictor(self, graph: BipartiteGraph) -> DegreePredictor:
        return DegreePredictor.exact(graph)

    def create_skip_every_other_policy(self) -> SkipEveryOther:
        return SkipEveryOther()

    def create_always_skip_policy(self) -> AlwaysSkip:
        return AlwaysSkip()

    def create_scripted_policy(self, script: dict) -> ScriptedPolicy:
        """
        Policy returning script[online_node] (None skips).

        Args:
            script: Mapping online index -> offline index or None

        Returns:
            ScriptedPolicy
        """
        return ScriptedPolicy(script)

    def register_scripted_policies(self) -> List[str]:
        """
        Register the skipping policies with PolicyFactory.

        Returns:
            Registered names
        """
        PolicyFactory.register(SkipEveryOther.name, lambda graph, sigma: SkipEveryOther())
        PolicyFactory.register(AlwaysSkip.name, lambda graph, sigma: AlwaysSkip())
        return [SkipEveryOther.name, AlwaysSkip.name]

    def write_edge_file(self, directory: str, name: str, edges: Sequence[Sequence[int]],
                        header: Optional[str] = None) -> str:
        """
        Write raw "u v" lines (and an optional first line) to a file.

        Args:
            directory: Target directory (created if missing)
            name: File name
            edges: Pairs to write
            header: Optional first line, e.g. "# bipartite 3 2"

        Returns:
            Path of the file
        """
        os.makedirs(directory, exist_ok=True)
        path = os.path.join(directory, name)
        lines = [header] if header else []
        lines.extend(f"{int(u)} {int(v)}" for u, v in edges)
        with open(path, 'w', encoding='utf-8') as f:
            f.write("\n".join(lines) + "\n")
        logger.info(f"Wrote {len(edges)} edges to: {path}")
        return path

    def write_text_file(self, directory: str, name: str, text: str) -> str:
        os.makedirs(directory, exist_ok=True)
        path = os.path.join(directory, name)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        return path
