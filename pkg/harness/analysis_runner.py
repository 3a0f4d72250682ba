"""
Analysis Runner
Evaluates the analytic engine over configured grids
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional

from robot.api import logger

from analysis.ratios import expcutoff_ratio_cell, zipf_ratio_cell
from harness.errors import ConfigError

__all__ = ['run_analysis', 'analysis_columns']

TABLE_COLUMNS = ['alpha', 'lambda', 'mpd_expected', 'hall_bound', 'ratio']
FIGURE_COLUMNS = ['alpha', 'n', 'm', 'mpd_expected', 'hall_bound', 'ratio']


def _table_cell(args) -> Dict[str, float]:
    return expcutoff_ratio_cell(*args)


def _figure_cell(args) -> Dict[str, float]:
    return zipf_ratio_cell(*args)


def run_analysis(section: Dict[str, Any], mode: Optional[str] = None,
                 workers: int = 1) -> List[Dict[str, Any]]:
    """
    Evaluate the analytic ratio on every grid cell.

    mode "table": asymptotic ratio per (alpha, lambda) for power-law-with-cutoff profiles.
    mode "figure": finite ratio per (alpha, n) for Zipf profiles with n = m and C = m/2.

    Args:
        section: Analysis section of the configuration
        mode: Overrides section["mode"]
        workers: Process count; cells are independent

    Returns:
        Rows in grid order
    """
    mode = mode or section.get('mode', 'table')
    if mode == 'table':
        tail_eps = float(section.get('tail_eps', 1e-9))
        cells = [(float(alpha), float(cutoff), tail_eps)
                 for cutoff in section.get('cutoffs', []) for alpha in section.get('alphas', [])]
        worker = _table_cell
    elif mode == 'figure':
        cells = [(float(alpha), int(size), int(size))
                 for alpha in section.get('figure_alphas', []) for size in section.get('figure_sizes', [])]
        worker = _figure_cell
    else:
        raise ConfigError(f"analysis mode must be 'table' or 'figure', got '{mode}'")
    if not cells:
        raise ConfigError(f"analysis grid for mode '{mode}' is empty")

    logger.info(f"Evaluating {len(cells)} {mode} cells with {workers} worker(s)")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(worker, cells))
    return [worker(cell) for cell in cells]


def analysis_columns(mode: str) -> List[str]:
    return TABLE_COLUMNS if mode == 'table' else FIGURE_COLUMNS
