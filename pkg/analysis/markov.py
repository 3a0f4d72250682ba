"""
Unmatched-Count Markov Chain
Exact one-arrival transitions of MPD's unmatched counts on CLV-B graphs
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
from robot.api import logger

from generators.degree_profiles import DegreeProfile
from graphs.trial_seed import as_trial_seed

__all__ = ['MarkovState', 'markov_step_expectation', 'sample_markov_step', 'simulate_markov_chain']


@dataclass(frozen=True)
class MarkovState:
    """
    Unmatched counts Y_d per unique expected degree (ascending degrees).
    """

    degrees: np.ndarray
    unmatched: np.ndarray
    step: int = 0

    @classmethod
    def initial(cls, profile: DegreeProfile, n: Optional[int] = None) -> 'MarkovState':
        """Y_d^0 = f_d."""
        view = profile.grouped_view(n)
        return cls(np.asarray(view.degrees, dtype=np.float64),
                   np.rint(view.counts).astype(np.int64))

    def scaled(self, m: int) -> np.ndarray:
        """Z_d = -k_d * Y_d with k_d = -log(1 - d/m)."""
        return np.log1p(-self.degrees / m) * self.unmatched


def _miss_log_probabilities(state: MarkovState, m: int) -> np.ndarray:
    """log of (1 - d/m)^{Y_d}: no unmatched class-d node is adjacent to the arrival."""
    # 0 * -inf when d = m and Y_d = 0
    with np.errstate(divide='ignore', invalid='ignore'):
        log_keep = np.log1p(-state.degrees / m)
        return np.where(state.unmatched > 0, log_keep * state.unmatched, 0.0)


def markov_step_expectation(state: MarkovState, m: int) -> np.ndarray:
    """
    Expected one-step change E[Y_d^{t+1} - Y_d^t] for every class.

    The arrival is matched into class d when it sees an unmatched class-d
    node and no unmatched node of a smaller expected degree.

    Args:
        state: Current counts
        m: Number of online nodes

    Returns:
        Array of expected changes (<= 0)
    """
    log_miss = _miss_log_probabilities(state, m)
    before = np.concatenate(([0.0], np.cumsum(log_miss)[:-1])) if len(log_miss) else log_miss
    hit = -np.expm1(log_miss)
    return -hit * np.exp(before)


def sample_markov_step(state: MarkovState, m: int, rng: np.random.Generator) -> MarkovState:
    """
    Draw one arrival: classes are tried in ascending degree and the first
    hit loses one unmatched node.

    Args:
        state: Current counts
        m: Number of online nodes
        rng: Random stream owned by the caller

    Returns:
        Next state
    """
    hit = -np.expm1(_miss_log_probabilities(state, m))
    draws = rng.random(len(hit))
    unmatched = state.unmatched.copy()
    hits = np.flatnonzero(draws < hit)
    if len(hits):
        unmatched[hits[0]] -= 1
    return MarkovState(state.degrees, unmatched, state.step + 1)


def simulate_markov_chain(profile: DegreeProfile, n: Optional[int], m: int,
                          seed=None, steps: Optional[int] = None) -> np.ndarray:
    """
    Run the chain from Y^0 = f for ``steps`` arrivals (default m).

    Args:
        profile: Degree profile
        n: Offline node count for grouped profiles
        m: Number of online nodes
        seed: TrialSeed or int; the "markov" stream is used
        steps: Number of arrivals

    Returns:
        Array of shape (steps + 1, classes) with the unmatched counts after every arrival
    """
    state = MarkovState.initial(profile, n)
    steps = m if steps is None else steps
    rng = as_trial_seed(seed).rng("markov")
    path = np.empty((steps + 1, len(state.degrees)), dtype=np.int64)
    path[0] = state.unmatched
    for t in range(1, steps + 1):
        state = sample_markov_step(state, m, rng)
        path[t] = state.unmatched
    logger.debug(f"Markov chain: {steps} steps, matched {int(path[0].sum() - path[-1].sum())}")
    return path

