"""
Experiment Runner
Seeded trial batches comparing online policies against the maximum matching
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from robot.api import logger

from algorithms.policy_factory import PolicyFactory
from graphs.bipartite_graph import BipartiteGraph, DegreePredictor, predictor_l2_error
from graphs.online_driver import run_online
from graphs.trial_seed import TrialSeed
from harness.builders import build_graph, build_predictor
from harness.config import ExperimentConfig
from harness.errors import TrialInvariantError
from oracle.hall import hall_subset
from oracle.hopcroft_karp import max_matching

__all__ = ['TrialResult', 'ExperimentResult', 'relabel_offline', 'run_trial', 'summarize',
           'run_experiment', 'run_sweep']


@dataclass(frozen=True)
class TrialResult:
    """Outcome of one trial: every algorithm ran on the same graph and arrival order."""

    trial_index: int
    sizes: Dict[str, int]
    max_matching: int
    hall_bound: Optional[int]
    predictor_l2_error: float
    wall_time: float = 0.0

    def ratio(self, algorithm: str) -> float:
        """Empirical competitive ratio; an empty maximum matching counts as ratio 1."""
        if self.max_matching == 0:
            return 1.0
        return self.sizes[algorithm] / self.max_matching

    def as_row(self) -> Dict[str, Any]:
        row: Dict[str, Any] = {
            'trial_index': self.trial_index,
            'max_matching': self.max_matching,
            'hall_bound': self.hall_bound if self.hall_bound is not None else '',
            'predictor_l2_error': self.predictor_l2_error,
        }
        for name, size in self.sizes.items():
            row[f'size[{name}]'] = size
            row[f'ratio[{name}]'] = self.ratio(name)
        return row


@dataclass(frozen=True)
class ExperimentResult:
    """Per-trial records in trial order plus per-algorithm summaries."""

    config: ExperimentConfig
    trials: List[TrialResult]
    summary: Dict[str, Dict[str, float]] = field(default_factory=dict)

    def summary_rows(self) -> List[Dict[str, Any]]:
        return [{'algorithm': name, **stats} for name, stats in self.summary.items()]


def _check_invariants(result: TrialResult, greedy: Dict[str, bool]) -> None:
    for name, size in result.sizes.items():
        if size > result.max_matching:
            raise TrialInvariantError(
                f"{name} matched {size} > maximum matching {result.max_matching}",
                result.trial_index, name)
        if greedy[name] and 2 * size < result.max_matching:
            raise TrialInvariantError(
                f"greedy policy {name} matched {size} < half of {result.max_matching}",
                result.trial_index, name)
    if result.hall_bound is not None and result.max_matching > result.hall_bound:
        raise TrialInvariantError(
            f"maximum matching {result.max_matching} exceeds Hall bound {result.hall_bound}",
            result.trial_index)


def relabel_offline(graph: BipartiteGraph, sigma: DegreePredictor,
                    seed: TrialSeed) -> Tuple[BipartiteGraph, DegreePredictor]:
    """
    Apply one random offline relabelling to a graph and its predictor.

    Policies break ties by the smallest offline index; after relabelling
    that index carries no information about the degree.

    Args:
        graph: Trial graph
        sigma: Predictor indexed like graph
        seed: Seed of the trial; the "labels" stream is used

    Returns:
        (relabelled graph, relabelled predictor)
    """
    permutation = seed.rng("labels").permutation(graph.n_offline).tolist()
    return graph.relabel_offline(permutation), sigma.relabeled(permutation)


def run_trial(cfg: ExperimentConfig, trial_index: int) -> TrialResult:
    """
    Run one trial.

    Generates the graph from seed (master_seed, trial_index), optionally
    shuffles the arrivals, builds the predictor, optionally relabels the
    offline side at random and runs every algorithm.

    Args:
        cfg: Validated configuration
        trial_index: Index of the trial

    Returns:
        TrialResult

    Raises:
        TrialInvariantError: if a size invariant fails
    """
    started = time.perf_counter()
    seed = TrialSeed(cfg.master_seed, trial_index)
    built = build_graph(cfg.generator, seed)
    graph = built.graph.shuffled(seed.rng("arrivals")) if cfg.shuffle_arrivals else built.graph
    sigma = build_predictor(cfg.predictor, built, graph, seed)
    if cfg.shuffle_offline:
        graph, sigma = relabel_offline(graph, sigma, seed)

    sizes: Dict[str, int] = {}
    greedy: Dict[str, bool] = {}
    for name in cfg.algorithms:
        policy = PolicyFactory.create(name, graph, sigma)
        sizes[name] = run_online(graph, policy, seed).size
        greedy[name] = policy.is_greedy
    best = max_matching(graph)
    bound = hall_subset(graph).bound if cfg.hall_bound else None
    result = TrialResult(trial_index, sizes, best, bound, predictor_l2_error(sigma, graph),
                         time.perf_counter() - started)
    _check_invariants(result, greedy)
    if best == 0:
        logger.warn(f"Trial {trial_index}: empty maximum matching, ratios reported as 1")
    return result


def summarize(cfg: ExperimentConfig, trials: List[TrialResult]) -> Dict[str, Dict[str, float]]:
    """Mean and population standard deviation of each algorithm's ratio across trials."""
    summary = {}
    for name in cfg.algorithms:
        ratios = np.array([trial.ratio(name) for trial in trials])
        sizes = np.array([trial.sizes[name] for trial in trials], dtype=np.float64)
        summary[name] = {
            'trials': len(trials),
            'mean_ratio': float(ratios.mean()),
            'std_ratio': float(ratios.std()),
            'mean_size': float(sizes.mean()),
            'mean_max_matching': float(np.mean([trial.max_matching for trial in trials])),
        }
    return summary


def run_experiment(cfg: ExperimentConfig) -> ExperimentResult:
    """
    Run cfg.trials trials and summarize them.

    Trials run in cfg.workers processes; records are kept in trial order.

    Args:
        cfg: Validated configuration

    Returns:
        ExperimentResult
    """
    cfg.validate()
    logger.info(f"Running {cfg.trials} trials of {cfg.generator.get('name')} with "
                f"{cfg.algorithms} (seed={cfg.master_seed}, workers={cfg.workers})")
    indices = range(cfg.trials)
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            trials = list(pool.map(run_trial, [cfg] * cfg.trials, indices))
    else:
        trials = [run_trial(cfg, index) for index in indices]
    summary = summarize(cfg, trials)
    for name, stats in summary.items():
        logger.info(f"{name}: mean ratio {stats['mean_ratio']:.4f} +/- {stats['std_ratio']:.4f}")
    return ExperimentResult(cfg, trials, summary)


def run_sweep(cfg: ExperimentConfig, parameter: Optional[str] = None,
              values: Optional[List[Any]] = None) -> List[Dict[str, Any]]:
    """
    Repeat run_experiment while varying one parameter.

    Args:
        cfg: Base configuration
        parameter: Dotted name such as "generator.alpha" (defaults to cfg.sweep)
        values: Values to try (defaults to cfg.sweep)

    Returns:
        One row per value with mean and std ratio per algorithm
    """
    parameter = parameter or cfg.sweep.get('parameter')
    values = values if values is not None else cfg.sweep.get('values', [])
    if not parameter or not values:
        raise ValueError("A sweep needs a parameter and at least one value")
    rows = []
    for value in values:
        result = run_experiment(cfg.with_parameter(parameter, value))
        row: Dict[str, Any] = {'parameter': parameter, 'value': value}
        for name, stats in result.summary.items():
            row[f'mean_ratio[{name}]'] = stats['mean_ratio']
            row[f'std_ratio[{name}]'] = stats['std_ratio']
        row['mean_l2_error'] = float(np.mean([t.predictor_l2_error for t in result.trials]))
        rows.append(row)
    return rows
