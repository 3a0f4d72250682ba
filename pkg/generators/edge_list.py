"""
Edge-List Files
Read and write whitespace-separated "u v" edge lists with dense id compaction
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple, Union

from robot.api import logger

from generators.errors import EdgeListParseError
from generators.transforms import bipartite_double_cover
from graphs.bipartite_graph import BipartiteGraph

__all__ = ['LoadedGraph', 'load_edge_list', 'load_undirected_edge_list', 'write_edge_list']

HEADER_TAG = "bipartite"

PathLike = Union[str, Path]


@dataclass(frozen=True)
class LoadedGraph:
    """
    Graph read from a file together with the original node ids.

    ``offline_ids[i]`` is the file id of offline index i (likewise online),
    so predictors can be joined across snapshots by id.
    """

    graph: BipartiteGraph
    offline_ids: Tuple[int, ...]
    online_ids: Tuple[int, ...]

    def offline_index(self) -> Dict[int, int]:
        return {node_id: index for index, node_id in enumerate(self.offline_ids)}

    def online_index(self) -> Dict[int, int]:
        return {node_id: index for index, node_id in enumerate(self.online_ids)}


def _parse_pairs(path: PathLike) -> Tuple[List[Tuple[int, int]], Optional[Tuple[int, int]]]:
    """Read (u, v) pairs and the optional "# bipartite n m" header."""
    pairs: List[Tuple[int, int]] = []
    header: Optional[Tuple[int, int]] = None
    with open(path, 'r', encoding='utf-8') as handle:
        for line_number, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith('#'):
                words = line[1:].split()
                if words and words[0] == HEADER_TAG:
                    if len(words) != 3 or not all(w.isdigit() for w in words[1:]):
                        raise EdgeListParseError(
                            f"malformed header '{line}', expected '# {HEADER_TAG} n m'",
                            str(path), line_number)
                    header = (int(words[1]), int(words[2]))
                continue
            tokens = line.split()
            if len(tokens) != 2:
                logger.error(f"Malformed edge-list line {line_number} in {path}")
                raise EdgeListParseError(
                    f"expected two integer ids, got '{line}'", str(path), line_number)
            try:
                u, v = int(tokens[0]), int(tokens[1])
            except ValueError:
                logger.error(f"Non-integer id on line {line_number} in {path}")
                raise EdgeListParseError(
                    f"expected two integer ids, got '{line}'", str(path), line_number) from None
            if u < 0 or v < 0:
                raise EdgeListParseError(f"negative node id in '{line}'", str(path), line_number)
            pairs.append((u, v))
    return pairs, header


def _dense_ids(ids: Iterable[int]) -> Tuple[Tuple[int, ...], Dict[int, int]]:
    ordered = tuple(sorted(set(ids)))
    return ordered, {node_id: index for index, node_id in enumerate(ordered)}


def load_edge_list(path: PathLike) -> LoadedGraph:
    """
    Load a bipartite edge list: first column offline id, second online id.

    Without a header, ids on each side are compacted to dense indices in
    ascending id order. With a "# bipartite n m" header the ids are taken as
    indices directly, which keeps isolated nodes.

    Args:
        path: Edge-list file

    Returns:
        LoadedGraph with identity arrival order

    Raises:
        EdgeListParseError: on a malformed line, a negative id or an id outside the header sizes
    """
    pairs, header = _parse_pairs(path)
    if header is not None:
        n, m = header
        for u, v in pairs:
            if u >= n or v >= m:
                raise EdgeListParseError(
                    f"edge ({u}, {v}) outside declared sizes n={n} m={m}", str(path))
        offline_ids, online_ids = tuple(range(n)), tuple(range(m))
        edges = pairs
    else:
        offline_ids, offline_map = _dense_ids(u for u, _ in pairs)
        online_ids, online_map = _dense_ids(v for _, v in pairs)
        edges = [(offline_map[u], online_map[v]) for u, v in pairs]

    graph = BipartiteGraph.from_edges(len(offline_ids), len(online_ids), edges)
    logger.info(f"Loaded edge list {path}: n={graph.n_offline} m={graph.m_online} "
                f"edges={graph.edge_count}")
    return LoadedGraph(graph, offline_ids, online_ids)


def load_undirected_edge_list(path: PathLike) -> LoadedGraph:
    """
    Load an undirected edge list and return its bipartite double cover.

    Both sides share one id universe: offline index i and online index i are
    the two copies of the same original node.

    Args:
        path: Undirected edge-list file ("# bipartite n n" header allowed)

    Returns:
        LoadedGraph of the double cover
    """
    pairs, header = _parse_pairs(path)
    if header is not None:
        n = max(header)
        ids = tuple(range(n))
        edges = pairs
        if any(max(u, v) >= n for u, v in pairs):
            raise EdgeListParseError(f"edge outside declared size n={n}", str(path))
    else:
        ids, id_map = _dense_ids(node for pair in pairs for node in pair)
        edges = [(id_map[u], id_map[v]) for u, v in pairs]
    graph = bipartite_double_cover(edges, len(ids))
    logger.info(f"Loaded undirected edge list {path} as double cover: n={len(ids)} "
                f"edges={graph.edge_count}")
    return LoadedGraph(graph, ids, ids)


def write_edge_list(graph: Union[BipartiteGraph, LoadedGraph], path: PathLike) -> Path:
    """
    Write a graph in dense-index form with a "# bipartite n m" header.

    Args:
        graph: BipartiteGraph or LoadedGraph (its dense indices are written)
        path: Output file

    Returns:
        Path written
    """
    if isinstance(graph, LoadedGraph):
        graph = graph.graph
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"# {HEADER_TAG} {graph.n_offline} {graph.m_online}"]
    lines.extend(f"{u} {v}" for u, v in sorted(graph.edges()))
    target.write_text("\n".join(lines) + "\n", encoding='utf-8')
    logger.debug(f"Wrote {graph.edge_count} edges to {target}")
    return target

