"""
Command Line Interface
python -m harness {generate,run,analyze,snapshot,selftest}
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv
from robot.api import logger

from analysis.errors import AnalysisError, NumericalInstabilityError
from generators.edge_list import write_edge_list
from generators.errors import EdgeListParseError, ProfileError
from graphs.errors import ContractViolationError, GraphValidationError
from graphs.trial_seed import TrialSeed
from harness.analysis_runner import analysis_columns, run_analysis
from harness.builders import build_graph
from harness.config import ConfigLoader
from harness.errors import ConfigError, TrialInvariantError
from harness.experiment import run_experiment, run_sweep
from harness.results import render_html_report, write_experiment, write_rows
from harness.selftest import selftest
from harness.snapshot import as_loaded, drift_experiment, snapshot_experiment
from oracle.errors import OracleLimitError

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2

USAGE_ERRORS = (ConfigError, ProfileError, EdgeListParseError, FileNotFoundError)
RUNTIME_ERRORS = (AnalysisError, NumericalInstabilityError, GraphValidationError, ContractViolationError,
                  TrialInvariantError, OracleLimitError, ValueError, ArithmeticError, OSError)


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help="YAML config file (default: $MATCHING_CONFIG or config/config.yaml)")
    common.add_argument('--seed', type=int, help="master seed")
    common.add_argument('--trials', type=int, help="trials per experiment")
    common.add_argument('--out', help="output file")
    common.add_argument('--format', choices=('csv', 'json'), help="output format")
    common.add_argument('--workers', type=int, help="worker processes")
    common.add_argument('--log-level', choices=('DEBUG', 'INFO', 'WARNING', 'ERROR'),
                        help="log level")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog='python -m harness',
        description="Online bipartite matching with degree predictions: experiments and analysis")
    commands = parser.add_subparsers(dest='command', required=True)

    generate = commands.add_parser('generate', parents=[common], help="emit one generated graph as an edge list")
    generate.add_argument('--trial', type=int, default=0, help="trial index of the seed")

    run = commands.add_parser('run', parents=[common], help="run the configured experiment")
    run.add_argument('--report', help="also render an HTML summary to this file")
    run.add_argument('--sweep', action='store_true', help="run the configured parameter sweep")

    analyze = commands.add_parser('analyze', parents=[common], help="evaluate the analytic ratio grids")
    analyze.add_argument('--mode', choices=('table', 'figure'), help="cutoff grid or Zipf curves")

    snapshot = commands.add_parser('snapshot', parents=[common], help="first-snapshot predictor pipeline")
    snapshot.add_argument('--first', help="edge list of the first snapshot")
    snapshot.add_argument('--later', nargs='+', help="edge lists of later snapshots")
    snapshot.add_argument('--directed', action='store_true', help="read files as bipartite edge lists")
    snapshot.add_argument('--drift', nargs='+', type=float, metavar='RATE',
                          help="synthetic snapshots: rewire the generated graph at these rates")

    test = commands.add_parser('selftest', parents=[common], help="oracle and analytic cross-checks")
    test.add_argument('--samples', type=int, default=50, help="random graphs for the oracle check")
    return parser


def _default_out(name: str) -> str:
    base = ConfigLoader.get_section('output').get('path') or 'robot-tests/results/experiment.csv'
    return str(Path(base).parent / name)


def _cmd_generate(args) -> int:
    cfg = ConfigLoader.experiment_config(master_seed=args.seed)
    built = build_graph(cfg.generator, TrialSeed(cfg.master_seed, args.trial))
    target = write_edge_list(built.graph, args.out or _default_out('graph.txt'))
    print(target)
    return EXIT_OK


def _cmd_run(args) -> int:
    cfg = ConfigLoader.experiment_config(master_seed=args.seed, trials=args.trials, output_path=args.out,
                                         output_format=args.format, workers=args.workers)
    out = cfg.output_path or _default_out('experiment.csv')
    if args.sweep:
        print(write_rows(run_sweep(cfg), out, cfg.output_format))
        return EXIT_OK
    result = run_experiment(cfg)
    print(write_experiment(result, out, cfg.output_format))
    report = args.report or ConfigLoader.get_section('output').get('report')
    if report:
        print(render_html_report(result, report))
    return EXIT_OK


def _cmd_analyze(args) -> int:
    section = ConfigLoader.get_section('analysis')
    mode = args.mode or section.get('mode', 'table')
    workers = args.workers or int(ConfigLoader.get_section('execution').get('workers', 1))
    rows = run_analysis(section, mode, workers)
    out = args.out or _default_out(f'analysis-{mode}.csv')
    print(write_rows(rows, out, args.format or 'csv', analysis_columns(mode)))
    return EXIT_OK


def _cmd_snapshot(args) -> int:
    section = ConfigLoader.get_section('snapshot')
    cfg = ConfigLoader.experiment_config(master_seed=args.seed, trials=args.trials)
    algorithms = section.get('algorithms') or ['mpd', 'mindegree', 'ranking']
    if args.drift:
        base = as_loaded(build_graph(cfg.generator, TrialSeed(cfg.master_seed, 0)).graph)
        rows = drift_experiment(base, args.drift, cfg.trials, cfg.master_seed, algorithms)
    else:
        first = args.first or section.get('first')
        later = args.later or section.get('later') or []
        if not first or not later:
            raise ConfigError("snapshot needs a first file and at least one later file "
                              "(--first/--later or the snapshot config section)")
        undirected = not args.directed and bool(section.get('undirected', True))
        rows = snapshot_experiment(first, later, cfg.trials, cfg.master_seed, undirected, algorithms)
    print(write_rows(rows, args.out or _default_out('snapshot.csv'), args.format or 'csv'))
    return EXIT_OK


def _cmd_selftest(args) -> int:
    seed = args.seed if args.seed is not None else 0
    checks = selftest(samples=args.samples, master_seed=seed)
    for check in checks:
        print(f"{'PASS' if check.passed else 'FAIL'}  {check.name}: {check.detail}")
    return EXIT_OK if all(check.passed for check in checks) else EXIT_RUNTIME


COMMANDS = {
    'generate': _cmd_generate,
    'run': _cmd_run,
    'analyze': _cmd_analyze,
    'snapshot': _cmd_snapshot,
    'selftest': _cmd_selftest,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    CLI entry point.

    Returns:
        0 on success, 2 for configuration or usage errors, 1 for runtime failures
    """
    load_dotenv()
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exit_request:
        return EXIT_USAGE if exit_request.code else EXIT_OK

    try:
        ConfigLoader.reset()
        ConfigLoader.load_config(args.config)
        level = args.log_level or ConfigLoader.get_section('execution').get('log_level', 'INFO')
        logging.basicConfig(level=getattr(logging, str(level).upper(), logging.INFO),
                            format='%(asctime)s %(levelname)s %(message)s', stream=sys.stderr)
        return COMMANDS[args.command](args)
    except USAGE_ERRORS as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except RUNTIME_ERRORS as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RUNTIME
