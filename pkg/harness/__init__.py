"""
Experiment Harness Package
Configuration, seeded trial batches, analytic grids, snapshot pipelines and result output
"""

from .analysis_runner import analysis_columns, run_analysis
from .builders import BuiltGraph, build_graph, build_predictor, generator_profile
from .config import ConfigLoader, ExperimentConfig, load_experiment_config
from .errors import ConfigError, TrialInvariantError
from .experiment import ExperimentResult, TrialResult, run_experiment, run_sweep, run_trial, summarize
from .results import (experiment_payload, read_csv_rows, render_html_report, write_experiment,
                      write_json, write_rows, write_rows_csv)
from .selftest import SelfTestCheck, integrate_unmatched_ode, selftest
from .snapshot import (as_loaded, compare_snapshots, drift_experiment, drift_snapshots,
                       snapshot_experiment)

__all__ = ['ConfigLoader', 'ExperimentConfig', 'ConfigError', 'TrialInvariantError',
           'BuiltGraph', 'ExperimentResult', 'TrialResult', 'SelfTestCheck',
           'load_experiment_config', 'build_graph', 'build_predictor', 'generator_profile',
           'run_trial', 'run_experiment', 'run_sweep', 'summarize',
           'run_analysis', 'analysis_columns',
           'compare_snapshots', 'snapshot_experiment', 'drift_snapshots', 'drift_experiment', 'as_loaded',
           'write_rows_csv', 'read_csv_rows', 'write_json', 'write_rows', 'write_experiment',
           'experiment_payload', 'render_html_report', 'selftest', 'integrate_unmatched_ode']
