"""
Analysis Package
Closed-form MPD expectations, expected Hall bounds, ratios and concentration checks
"""

from .closed_form import AnalyticSolution, asymptotic_solution, closed_form_solution, mpd_trajectory
from .concentration import (ConcentrationReport, ExcessReport, concentration_check,
                            unmatched_excess_check)
from .errors import AnalysisError, NumericalInstabilityError
from .hall_bounds import (HallTerms, asymptotic_hall_bound, asymptotic_hall_terms,
                          hall_expectation, hall_expectation_terms)
from .markov import (MarkovState, markov_step_expectation, sample_markov_step,
                     simulate_markov_chain)
from .mpd_expectation import asymptotic_mpd_fraction, expected_mpd_size
from .ratios import (analytic_ratio, expcutoff_ratio_cell, expcutoff_ratio_grid, zipf_ratio_cell,
                     zipf_ratio_curve)

__all__ = ['AnalyticSolution', 'MarkovState', 'HallTerms', 'ConcentrationReport', 'ExcessReport',
           'AnalysisError', 'NumericalInstabilityError',
           'closed_form_solution', 'asymptotic_solution', 'mpd_trajectory',
           'expected_mpd_size', 'asymptotic_mpd_fraction',
           'markov_step_expectation', 'sample_markov_step', 'simulate_markov_chain',
           'hall_expectation', 'hall_expectation_terms', 'asymptotic_hall_bound',
           'asymptotic_hall_terms', 'analytic_ratio', 'expcutoff_ratio_cell', 'zipf_ratio_cell',
           'expcutoff_ratio_grid', 'zipf_ratio_curve',
           'concentration_check', 'unmatched_excess_check']
