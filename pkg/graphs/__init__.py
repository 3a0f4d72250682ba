"""
Graph Core Package
Bipartite graph, predictor and matching types plus the online execution driver
"""

from .bipartite_graph import (BipartiteGraph, DegreePredictor, Matching, matching_size,
                              predictor_l2_error, validate_graph)
from .errors import ContractViolationError, GraphValidationError
from .online_driver import OnlinePolicy, run_many, run_online
from .trial_seed import TrialSeed, as_trial_seed

__all__ = ['BipartiteGraph', 'DegreePredictor', 'Matching', 'TrialSeed', 'OnlinePolicy',
           'GraphValidationError', 'ContractViolationError', 'as_trial_seed',
           'validate_graph', 'run_online', 'run_many', 'matching_size', 'predictor_l2_error']
