"""
Snapshot Experiments
Degree predictions taken from the first snapshot of an evolving graph, evaluated on later ones
"""

from typing import Any, Dict, List, Sequence

import numpy as np
from robot.api import logger

from algorithms.policy_factory import PolicyFactory
from generators.edge_list import LoadedGraph, load_edge_list, load_undirected_edge_list
from generators.predictors import first_snapshot_predictor
from generators.transforms import rewire_edges
from graphs.bipartite_graph import BipartiteGraph, predictor_l2_error
from graphs.online_driver import run_online
from graphs.trial_seed import TrialSeed
from oracle.hopcroft_karp import max_matching

__all__ = ['compare_snapshots', 'snapshot_experiment', 'as_loaded', 'drift_snapshots',
           'drift_experiment']

DEFAULT_ALGORITHMS = ('mpd', 'mindegree', 'ranking')


def compare_snapshots(first: LoadedGraph, later: Sequence[LoadedGraph], trials: int,
                      master_seed: int = 0,
                      algorithms: Sequence[str] = DEFAULT_ALGORITHMS,
                      labels: Sequence[str] = ()) -> List[Dict[str, Any]]:
    """
    Evaluate first-snapshot predictions on every later snapshot.

    For each snapshot the arrival order is reshuffled per trial and every
    algorithm runs on the identical order.

    Args:
        first: Snapshot the predictor is built from
        later: Snapshots to evaluate
        trials: Shuffles per snapshot
        master_seed: Seed of the shuffles
        algorithms: Policy names ("mpd" uses the first-snapshot predictor)
        labels: Optional name per snapshot for the report

    Returns:
        One row per snapshot: snapshot, n, m, edges, predictor_l2_error, max_matching,
        mean_ratio[<algo>] and std_ratio[<algo>]
    """
    rows = []
    for position, snapshot in enumerate(later):
        graph = snapshot.graph
        sigma = first_snapshot_predictor(first, snapshot)
        best = max_matching(graph)
        ratios: Dict[str, List[float]] = {name: [] for name in algorithms}
        for trial in range(trials):
            seed = TrialSeed(master_seed, trial)
            shuffled = graph.shuffled(seed.rng("arrivals"))
            for name in algorithms:
                size = run_online(shuffled, PolicyFactory.create(name, shuffled, sigma), seed).size
                ratios[name].append(size / best if best else 1.0)
        row: Dict[str, Any] = {
            'snapshot': labels[position] if position < len(labels) else position + 1,
            'n': graph.n_offline,
            'm': graph.m_online,
            'edges': graph.edge_count,
            'predictor_l2_error': predictor_l2_error(sigma, graph),
            'max_matching': best,
        }
        for name in algorithms:
            row[f'mean_ratio[{name}]'] = float(np.mean(ratios[name]))
            row[f'std_ratio[{name}]'] = float(np.std(ratios[name]))
        logger.info(f"Snapshot {row['snapshot']}: l2 error {row['predictor_l2_error']:.3f}, "
                    f"MPD ratio {row.get('mean_ratio[mpd]', float('nan')):.4f}")
        rows.append(row)
    return rows


def snapshot_experiment(first_path: str, later_paths: Sequence[str], trials: int,
                        master_seed: int = 0, undirected: bool = True,
                        algorithms: Sequence[str] = DEFAULT_ALGORITHMS) -> List[Dict[str, Any]]:
    """
    File-based snapshot pipeline.

    Args:
        first_path: Edge list of the first snapshot
        later_paths: Edge lists of later snapshots (same node-id universe)
        trials: Shuffles per snapshot
        master_seed: Seed of the shuffles
        undirected: Read files as undirected graphs and take double covers
        algorithms: Policy names

    Returns:
        One row per later snapshot
    """
    loader = load_undirected_edge_list if undirected else load_edge_list
    first = loader(first_path)
    later = [loader(path) for path in later_paths]
    return compare_snapshots(first, later, trials, master_seed, algorithms, labels=list(later_paths))


def as_loaded(graph: BipartiteGraph) -> LoadedGraph:
    """Wrap a generated graph so that node ids are its indices."""
    return LoadedGraph(graph, tuple(range(graph.n_offline)), tuple(range(graph.m_online)))


def drift_snapshots(base: LoadedGraph, rates: Sequence[float], master_seed: int = 0) -> List[LoadedGraph]:
    """Synthetic later snapshots: base with a growing share of edges rewired."""
    return [rewire_edges(base, rate, TrialSeed(master_seed, index)) for index, rate in enumerate(rates)]


def drift_experiment(base: LoadedGraph, rates: Sequence[float], trials: int,
                     master_seed: int = 0,
                     algorithms: Sequence[str] = DEFAULT_ALGORITHMS) -> List[Dict[str, Any]]:
    """
    Snapshot pipeline on synthetic drift: one row per rewiring rate.

    Returns:
        Rows as compare_snapshots, labelled by rate
    """
    later = drift_snapshots(base, rates, master_seed)
    return compare_snapshots(base, later, trials, master_seed, algorithms,
                             labels=[f"rate={rate}" for rate in rates])
