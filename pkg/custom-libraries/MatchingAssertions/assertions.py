"""
Matching Assertions
Robot Framework library of property checks for online matchings, oracles and the analytic engine
"""

import math
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
from robot.api import logger
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching
from scipy.stats import binomtest, chi2_contingency

from algorithms.policy_factory import PolicyFactory
from analysis.closed_form import closed_form_solution
from analysis.hall_bounds import asymptotic_hall_bound, hall_expectation, hall_expectation_terms
from analysis.markov import MarkovState, markov_step_expectation, sample_markov_step, simulate_markov_chain
from analysis.mpd_expectation import asymptotic_mpd_fraction, expected_mpd_size
from analysis.ratios import analytic_ratio
from generators.clvb import clvb_sample
from generators.degree_profiles import DegreeProfile
from generators.predictors import expected_degree_predictor
from graphs.bipartite_graph import BipartiteGraph, DegreePredictor, Matching
from graphs.online_driver import run_online
from graphs.trial_seed import TrialSeed
from harness.results import read_csv_rows
from harness.selftest import integrate_unmatched_ode
from oracle.brute_force import MAX_OFFLINE_NODES, brute_force_matching
from oracle.hall import hall_subset
from oracle.hopcroft_karp import max_matching


def scipy_max_matching(graph: BipartiteGraph) -> int:
    """Maximum matching size from scipy.sparse.csgraph on the online-by-offline biadjacency."""
    if graph.edge_count == 0:
        return 0
    indptr = np.cumsum([0] + [len(row) for row in graph.adjacency])
    indices = np.fromiter((u for row in graph.adjacency for u in row), dtype=np.int32)
    biadjacency = csr_matrix((np.ones(len(indices)), indices, indptr),
                             shape=(graph.m_online, graph.n_offline))
    match = maximum_bipartite_matching(biadjacency, perm_type='column')
    return int((match >= 0).sum())


class MatchingAssertions:
    """
    Property-check library.
    Keywords raise AssertionError naming the first failing case and return a summary otherwise.
    """

    def __init__(self, master_seed: int = 20240611):
        self.master_seed = int(master_seed)

    # ==================== Single Matchings ====================

    def matching_should_be_valid(self, matching: Matching, graph: BipartiteGraph) -> None:
        if not matching.is_valid_for(graph):
            raise AssertionError(f"Matching {matching.pairs} is not valid for {graph!r}")

    def matching_should_be_maximal(self, matching: Matching, graph: BipartiteGraph) -> None:
        if not matching.is_maximal_in(graph):
            raise AssertionError(f"Matching of size {matching.size} is not maximal")

    def values_should_be_close(self, actual: float, expected: float, tolerance: float) -> None:
        """Fail unless |actual - expected| <= tolerance."""
        actual, expected, tolerance = float(actual), float(expected), float(tolerance)
        if not abs(actual - expected) <= tolerance:
            raise AssertionError(f"{actual!r} differs from {expected!r} by more than {tolerance}")

    def values_should_be_nondecreasing(self, values: Sequence[float], slack: float = 0.0) -> None:
        values = [float(v) for v in values]
        for index in range(1, len(values)):
            if values[index] < values[index - 1] - float(slack):
                raise AssertionError(f"Sequence decreases at position {index}: {values}")

    def values_should_be_nonincreasing(self, values: Sequence[float], slack: float = 0.0) -> None:
        self.values_should_be_nondecreasing([-float(v) for v in values], slack)

    # ==================== Policies ====================

    def check_greedy_policies(self, graphs: Sequence[BipartiteGraph],
                              names: Sequence[str] = ('mpd', 'mindegree', 'ranking', 'greedy'),
                              predictor: str = 'random') -> Dict[str, Any]:
        """
        Run each named policy on each graph: valid, maximal and at least half the maximum.

        Args:
            graphs: Test graphs
            names: Policy names (must be greedy)
            predictor: "random", "exact" or "constant" predictions for "mpd"

        Returns:
            Summary with graphs, runs and violations (always 0 on return)
        """
        runs = 0
        for index, graph in enumerate(graphs):
            seed = TrialSeed(self.master_seed, index)
            sigma = self._predictor(graph, predictor, seed)
            best = max_matching(graph)
            for name in names:
                policy = PolicyFactory.create(name, graph, sigma)
                matching = run_online(graph, policy, seed)
                runs += 1
                if not matching.is_valid_for(graph):
                    raise AssertionError(f"graph {index}: {name} returned an invalid matching")
                if policy.is_greedy and not matching.is_maximal_in(graph):
                    raise AssertionError(f"graph {index}: {name} returned a non-maximal matching")
                if policy.is_greedy and 2 * matching.size < best:
                    raise AssertionError(f"graph {index}: {name} matched {matching.size} < {best}/2")
        logger.info(f"Greedy property check: {runs} runs on {len(graphs)} graphs, 0 violations")
        return {'graphs': len(graphs), 'runs': runs, 'violations': 0}

    def check_augmented_policy(self, graphs: Sequence[BipartiteGraph], base: str,
                               wrapper: str = 'mpd-augment') -> Dict[str, Any]:
        """
        Compare "<wrapper>:<base>" with base on identical seeds.

        The augmented matching must be maximal and at least half the base
        matching on every graph, and at least the base on average.

        Returns:
            Summary with mean_base and mean_augmented
        """
        base_sizes, augmented_sizes = [], []
        for index, graph in enumerate(graphs):
            seed = TrialSeed(self.master_seed, index)
            sigma = DegreePredictor.exact(graph)
            base_size = run_online(graph, PolicyFactory.create(base, graph, sigma), seed).size
            matching = run_online(graph, PolicyFactory.create(f"{wrapper}:{base}", graph, sigma), seed)
            if not matching.is_maximal_in(graph):
                raise AssertionError(f"graph {index}: {wrapper}:{base} is not maximal")
            if 2 * matching.size < base_size:
                raise AssertionError(f"graph {index}: augmented {matching.size} < base {base_size}/2")
            base_sizes.append(base_size)
            augmented_sizes.append(matching.size)
        summary = {'mean_base': float(np.mean(base_sizes)), 'mean_augmented': float(np.mean(augmented_sizes))}
        if summary['mean_augmented'] < summary['mean_base']:
            raise AssertionError(f"augmented mean {summary['mean_augmented']} below base {summary['mean_base']}")
        return summary

    def mpd_should_equal_mindegree(self, graphs: Sequence[BipartiteGraph]) -> int:
        """MPD with true degrees and MinDegree return identical pairs on every graph."""
        for index, graph in enumerate(graphs):
            sigma = DegreePredictor.exact(graph)
            left = run_online(graph, PolicyFactory.create('mpd', graph, sigma), index)
            right = run_online(graph, PolicyFactory.create('mindegree', graph), index)
            if left.pairs != right.pairs:
                raise AssertionError(f"graph {index}: MPD(true degrees) and MinDegree differ")
        return len(graphs)

    def ranking_should_match_uniform_predictions(self, graph: BipartiteGraph, runs: int = 10000,
                                                 significance: float = 0.001) -> float:
        """
        Matching-size distribution of Ranking against MPD with i.i.d. uniform predictions.

        Returns:
            Chi-square p-value (1 when both constructions always give one size)
        """
        ranking_sizes, mpd_sizes = [], []
        for index in range(int(runs)):
            seed = TrialSeed(self.master_seed, index)
            ranking_sizes.append(run_online(graph, PolicyFactory.create('ranking'), seed).size)
            sigma = DegreePredictor(seed.rng("predictor").random(graph.n_offline))
            mpd_sizes.append(run_online(graph, PolicyFactory.create('mpd', graph, sigma), seed).size)
        values = sorted(set(ranking_sizes) | set(mpd_sizes))
        if len(values) == 1:
            return 1.0
        table = np.array([[sizes.count(value) for value in values] for sizes in (ranking_sizes, mpd_sizes)])
        p_value = float(chi2_contingency(table)[1])
        logger.info(f"Ranking vs uniform-prediction MPD: sizes {values}, p={p_value:.4f}")
        if p_value < float(significance):
            raise AssertionError(f"Size distributions differ: {table.tolist()} (p={p_value:.2e})")
        return p_value

    def random_greedy_should_be_uniform(self, runs: int = 10000, significance: float = 0.001) -> float:
        """
        Offer two candidates to random greedy many times and test the choice frequency against 1/2.

        Returns:
            Binomial test p-value
        """
        graph = BipartiteGraph(2, 1, [[0, 1]])
        chosen_first = sum(
            1 for index in range(int(runs))
            if run_online(graph, PolicyFactory.create('greedy'), TrialSeed(self.master_seed, index)).pairs[0][0] == 0)
        p_value = float(binomtest(chosen_first, int(runs), 0.5).pvalue)
        if p_value < float(significance):
            raise AssertionError(f"First candidate chosen {chosen_first} of {runs} times (p={p_value:.2e})")
        return p_value

    def _predictor(self, graph: BipartiteGraph, kind: str, seed: TrialSeed) -> DegreePredictor:
        if kind == 'exact':
            return DegreePredictor.exact(graph)
        if kind == 'constant':
            return DegreePredictor([0.0] * graph.n_offline)
        return DegreePredictor(seed.rng("predictor").random(graph.n_offline).tolist())

    # ==================== Oracles ====================

    def oracles_should_agree(self, graphs: Sequence[BipartiteGraph]) -> Dict[str, Any]:
        """
        Hopcroft-Karp, scipy csgraph and (for small graphs) brute force agree,
        and the Hall certificate bounds the maximum.

        Returns:
            Summary with graphs and brute_force_checked
        """
        exhaustive = 0
        for index, graph in enumerate(graphs):
            fast = max_matching(graph)
            reference = scipy_max_matching(graph)
            if fast != reference:
                raise AssertionError(f"graph {index}: Hopcroft-Karp {fast} != scipy {reference}")
            if graph.n_offline <= MAX_OFFLINE_NODES:
                slow = brute_force_matching(graph)
                exhaustive += 1
                if fast != slow:
                    raise AssertionError(f"graph {index}: Hopcroft-Karp {fast} != brute force {slow}")
            certificate = hall_subset(graph)
            if fast > certificate.bound or not certificate.holds_for(graph):
                raise AssertionError(f"graph {index}: Hall bound {certificate.bound} < maximum {fast}")
        return {'graphs': len(graphs), 'brute_force_checked': exhaustive}

    # ==================== Analytic Engine ====================

    def closed_form_should_match_ode(self, profile: DegreeProfile, n: Optional[int], m: int,
                                     tolerance: float = 1e-6, points: int = 5) -> float:
        """
        Compare closed-form z values with numerical integration at evenly spaced times.

        Returns:
            Largest absolute deviation
        """
        solution = closed_form_solution(profile, None if n is None else int(n), int(m))
        worst = 0.0
        for t in np.linspace(0.0, solution.horizon, int(points)):
            deviation = np.abs(solution.z(float(t)) - integrate_unmatched_ode(solution, float(t)))
            worst = max(worst, float(deviation.max()) if deviation.size else 0.0)
        if worst > float(tolerance):
            raise AssertionError(f"Closed form deviates from the ODE by {worst:.3e}")
        logger.info(f"Closed form vs ODE: max deviation {worst:.3e}")
        return worst

    def _random_grouped_profiles(self, count: int, m: int):
        """Up to 5 classes, distinct degrees at most m/10, Dirichlet class fractions."""
        rng = TrialSeed(self.master_seed, -1).rng("profiles")
        for _ in range(int(count)):
            classes = int(rng.integers(1, 6))
            degrees = np.sort(rng.choice(np.arange(1, m // 10 + 1), size=classes, replace=False)).astype(float)
            fractions = rng.dirichlet(np.ones(classes))
            yield DegreeProfile.from_groups(degrees.tolist(), (fractions / fractions.sum()).tolist())

    def closed_form_should_match_ode_on_random_profiles(self, count: int = 50, m: int = 200,
                                                        relative_tolerance: float = 1e-6,
                                                        points: int = 5) -> float:
        """
        ODE fidelity on random grouped profiles with n = m.

        Returns:
            Largest deviation divided by m
        """
        m = int(m)
        worst = 0.0
        for index, profile in enumerate(self._random_grouped_profiles(count, m)):
            try:
                deviation = self.closed_form_should_match_ode(profile, m, m, relative_tolerance * m, points)
            except AssertionError as e:
                raise AssertionError(f"Profile {index} {profile}: {e}") from None
            worst = max(worst, deviation / m)
        logger.info(f"{count} random profiles: max deviation {worst:.3e} * m")
        return worst

    def analytic_ratio_should_be_bounded_on_random_profiles(self, count: int = 30,
                                                            m: int = 200) -> Dict[str, float]:
        """
        Finite (n = m) and asymptotic analytic ratios lie in (0, 1] on random grouped profiles.

        Returns:
            Smallest and largest ratio seen
        """
        m = int(m)
        ratios = []
        for index, profile in enumerate(self._random_grouped_profiles(count, m)):
            for ratio in (analytic_ratio(profile, m, m), analytic_ratio(profile, asymptotic=True)):
                if not 0.0 < ratio <= 1.0:
                    raise AssertionError(f"Profile {index} {profile}: analytic ratio {ratio} outside (0, 1]")
                ratios.append(ratio)
        return {'min_ratio': min(ratios), 'max_ratio': max(ratios)}

    def hall_terms_should_match_monte_carlo(self, profile: DegreeProfile, n: Optional[int], m: int,
                                            samples: int = 100000,
                                            standard_errors: float = 3.0) -> Dict[str, float]:
        """
        E|S*| and E|N(S*)| from hall_expectation_terms against hall_subset on sampled graphs.

        Returns:
            Expected and simulated values of both terms
        """
        n = None if n is None else int(n)
        terms = hall_expectation_terms(profile, n, int(m))
        s_star = np.empty(int(samples))
        neighbourhood = np.empty(int(samples))
        for index in range(int(samples)):
            certificate = hall_subset(clvb_sample(profile, int(m), TrialSeed(self.master_seed, index), n=n))
            s_star[index] = len(certificate.s_star)
            neighbourhood[index] = len(certificate.n_s_star)
        summary = {'expected_s_star': terms.expected_s_star, 'simulated_s_star': float(s_star.mean()),
                   'expected_neighbourhood': terms.expected_neighbourhood,
                   'simulated_neighbourhood': float(neighbourhood.mean())}
        for label, observed, expected in (('E|S*|', s_star, terms.expected_s_star),
                                          ('E|N(S*)|', neighbourhood, terms.expected_neighbourhood)):
            error = observed.std(ddof=1) / math.sqrt(len(observed))
            if abs(observed.mean() - expected) > standard_errors * error + 1e-12:
                raise AssertionError(f"{label}: simulated {observed.mean():.5f} vs expected {expected:.5f} "
                                     f"(standard error {error:.5f})")
        logger.info(f"Hall terms vs {samples} samples: {summary}")
        return summary

    def hall_expectation_should_bound_max_matching(self, profile: DegreeProfile, n: Optional[int], m: int,
                                                   trials: int = 30,
                                                   standard_errors: float = 3.0) -> Dict[str, float]:
        """
        Expected Hall bound against sampled maximum matchings and sampled Hall certificates.

        The bound must exceed the mean maximum matching and the mean certificate
        bound, each less standard_errors standard errors.

        Returns:
            Summary with bound and both simulated means
        """
        n = None if n is None else int(n)
        best, certified = [], []
        for index in range(int(trials)):
            graph = clvb_sample(profile, int(m), TrialSeed(self.master_seed, index), n=n)
            best.append(max_matching(graph))
            certified.append(hall_subset(graph).bound)
        bound = hall_expectation(profile, n, int(m))
        for label, values in (('maximum matching', best), ('Hall certificate bound', certified)):
            mean = float(np.mean(values))
            error = float(np.std(values, ddof=1)) / math.sqrt(len(values))
            if bound < mean - standard_errors * error:
                raise AssertionError(f"Expected Hall bound {bound:.2f} below mean {label} {mean:.2f} "
                                     f"by more than {standard_errors} standard errors ({error:.3f})")
        return {'bound': bound, 'mean_max_matching': float(np.mean(best)),
                'mean_certificate_bound': float(np.mean(certified))}

    def markov_step_should_match_samples(self, state: MarkovState, m: int, samples: int = 100000,
                                         standard_errors: float = 3.0) -> List[float]:
        """
        Per-class decrement frequency of sample_markov_step against markov_step_expectation.

        Returns:
            Empirical decrement frequencies per class
        """
        m = int(m)
        expected = -markov_step_expectation(state, m)
        rng = TrialSeed(self.master_seed, 0).rng("markov")
        decrements = np.zeros(len(expected))
        for _ in range(int(samples)):
            decrements += state.unmatched - sample_markov_step(state, m, rng).unmatched
        frequencies = decrements / int(samples)
        for index, (observed, probability) in enumerate(zip(frequencies, expected)):
            error = math.sqrt(probability * (1.0 - probability) / int(samples))
            if abs(observed - probability) > standard_errors * error + 1e-12:
                raise AssertionError(f"Class {index}: decrement frequency {observed:.5f} vs "
                                     f"expected {probability:.5f} (standard error {error:.5f})")
        return frequencies.tolist()

    def finite_gaps_should_shrink(self, profile: DegreeProfile,
                                  sizes: Sequence[int] = (100, 1000, 10000, 100000)) -> Dict[str, List[float]]:
        """
        Finite per-node MPD and Hall fractions approach their n = m -> infinity limits.

        The MPD gap must be nonincreasing in n; the Hall gap must end below where it started.

        Returns:
            Gaps per size for both quantities
        """
        mpd_limit = asymptotic_mpd_fraction(profile)
        hall_limit = asymptotic_hall_bound(profile)
        mpd_gaps, hall_gaps = [], []
        for size in (int(value) for value in sizes):
            mpd_gaps.append(abs(expected_mpd_size(profile, size, size) / size - mpd_limit))
            hall_gaps.append(abs(hall_expectation(profile, size, size) / size - hall_limit))
        logger.info(f"Finite gaps for n={list(sizes)}: mpd {mpd_gaps}, hall {hall_gaps}")
        if any(later > earlier for earlier, later in zip(mpd_gaps, mpd_gaps[1:])):
            raise AssertionError(f"MPD gap to the asymptotic fraction is not monotone: {mpd_gaps}")
        if hall_gaps[-1] >= hall_gaps[0]:
            raise AssertionError(f"Hall gap to the asymptotic bound did not shrink: {hall_gaps}")
        return {'mpd': mpd_gaps, 'hall': hall_gaps}

    def simulate_mpd_sizes(self, profile: DegreeProfile, n: Optional[int], m: int,
                           trials: int) -> List[int]:
        """MPD matching sizes on independent CLV-B samples, predictor = expected degrees."""
        sizes = []
        n = None if n is None else int(n)
        for index in range(int(trials)):
            seed = TrialSeed(self.master_seed, index)
            graph = clvb_sample(profile, int(m), seed, n=n)
            sigma = expected_degree_predictor(profile, graph.n_offline)
            sizes.append(run_online(graph, PolicyFactory.create('mpd', graph, sigma), seed).size)
        return sizes

    def mpd_mean_should_match_expectation(self, profile: DegreeProfile, n: Optional[int], m: int,
                                          trials: int = 200, relative_tolerance: float = 0.03) -> Dict[str, float]:
        """
        Monte-Carlo MPD mean against expected_mpd_size.

        Returns:
            Summary with simulated, expected and relative_error
        """
        n = None if n is None else int(n)
        simulated = float(np.mean(self.simulate_mpd_sizes(profile, n, m, trials)))
        expected = expected_mpd_size(profile, n, int(m))
        error = abs(simulated - expected) / max(expected, 1.0)
        logger.info(f"MPD Monte-Carlo mean {simulated:.2f} vs closed form {expected:.2f}")
        if error > float(relative_tolerance):
            raise AssertionError(f"Simulated MPD mean {simulated:.2f} vs expected {expected:.2f} "
                                 f"(relative error {error:.4f})")
        return {'simulated': simulated, 'expected': expected, 'relative_error': error}

    def markov_chain_should_track_closed_form(self, profile: DegreeProfile, n: Optional[int], m: int,
                                              trials: int = 100,
                                              relative_tolerance: float = 0.03) -> Dict[str, float]:
        """
        Mean number of arrivals matched by the class-count chain against the closed form.

        Returns:
            Summary with simulated, expected and relative_error
        """
        n = None if n is None else int(n)
        matched = []
        for index in range(int(trials)):
            path = simulate_markov_chain(profile, n, int(m), TrialSeed(self.master_seed, index))
            matched.append(float(path[0].sum() - path[-1].sum()))
        simulated = float(np.mean(matched))
        expected = closed_form_solution(profile, n, int(m)).matched()
        error = abs(simulated - expected) / max(expected, 1.0)
        if error > float(relative_tolerance):
            raise AssertionError(f"Markov chain matched {simulated:.2f} vs closed form {expected:.2f}")
        return {'simulated': simulated, 'expected': expected, 'relative_error': error}

    # ==================== Output ====================

    def csv_should_round_trip(self, rows: Sequence[Dict[str, Any]], path: str) -> None:
        """Every numeric field read back from path equals the value in rows."""
        loaded = read_csv_rows(path)
        if len(loaded) != len(rows):
            raise AssertionError(f"{path}: {len(loaded)} rows read, {len(rows)} written")
        for index, (original, reread) in enumerate(zip(rows, loaded)):
            for key, value in original.items():
                if isinstance(value, (int, float)) and not isinstance(value, bool):
                    back = reread.get(key)
                    same = back == value or (isinstance(value, float) and math.isnan(value)
                                             and isinstance(back, float) and math.isnan(back))
                    if not same:
                        raise AssertionError(f"{path} row {index} column {key}: wrote {value!r}, read {back!r}")
