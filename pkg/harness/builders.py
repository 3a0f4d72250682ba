"""
Trial Builders
Turn generator and predictor specs from the configuration into graphs and predictors
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional

from robot.api import logger

from generators.clvb import clvb_sample
from generators.degree_profiles import (DegreeProfile, expcutoff_profile, uniform_profile,
                                        zipf_profile)
from generators.edge_list import LoadedGraph, load_edge_list, load_undirected_edge_list
from generators.fixtures import half_competitive_instance
from generators.known_iid import known_iid_sample
from generators.predictors import (exact_degree_predictor, expected_degree_predictor,
                                   random_predictor, subsample_predictor)
from generators.type_graphs import molloy_reed_typegraph, pref_attachment_typegraph
from graphs.bipartite_graph import BipartiteGraph, DegreePredictor
from graphs.trial_seed import TrialSeed
from harness.errors import ConfigError


@dataclass(frozen=True)
class BuiltGraph:
    """A generated graph plus whatever side information its generator provides."""

    graph: BipartiteGraph
    profile: Optional[DegreeProfile] = None
    type_sigma: Optional[DegreePredictor] = None
    loaded: Optional[LoadedGraph] = None


def _require(spec: Dict[str, Any], key: str):
    if spec.get(key) is None:
        raise ConfigError(f"generator '{spec.get('name')}' needs parameter '{key}'")
    return spec[key]


def generator_profile(spec: Dict[str, Any]) -> DegreeProfile:
    """
    The expected-degree profile of a CLV-B generator section.

    Args:
        spec: Generator section (name clvb_zipf, clvb_expcutoff or clvb_uniform)

    Returns:
        DegreeProfile
    """
    name = spec.get('name')
    m = int(_require(spec, 'm'))
    if name == 'clvb_zipf':
        scale = spec.get('scale')
        return zipf_profile(int(_require(spec, 'n')), m / 2 if scale is None else float(scale),
                            float(_require(spec, 'alpha')))
    if name == 'clvb_expcutoff':
        return expcutoff_profile(float(_require(spec, 'alpha')), float(_require(spec, 'lam')),
                                 float(spec.get('tail_eps', 1e-9)))
    if name == 'clvb_uniform':
        return uniform_profile(int(_require(spec, 'n')), float(_require(spec, 'degree')))
    raise ConfigError(f"generator '{name}' has no degree profile")


def build_graph(spec: Dict[str, Any], seed: TrialSeed) -> BuiltGraph:
    """
    Generate the graph of one trial.

    Args:
        spec: Generator section of the configuration
        seed: Seed of the trial

    Returns:
        BuiltGraph
    """
    name = spec.get('name')
    if name in ('clvb_zipf', 'clvb_expcutoff', 'clvb_uniform'):
        profile = generator_profile(spec)
        n = int(spec['n']) if spec.get('n') is not None else None
        return BuiltGraph(clvb_sample(profile, int(spec['m']), seed, n=n), profile=profile)
    if name in ('molloy_reed', 'pref_attachment'):
        if name == 'molloy_reed':
            types = molloy_reed_typegraph(int(_require(spec, 'n')), int(_require(spec, 'm')),
                                          float(_require(spec, 'alpha')),
                                          float(_require(spec, 'lam')), seed)
        else:
            types = pref_attachment_typegraph(int(_require(spec, 'n')), int(_require(spec, 'm')),
                                              int(spec.get('edges_per_step', 1)), seed)
        graph, sigma = known_iid_sample(types, spec.get('m_hat'), seed.child(1))
        return BuiltGraph(graph, type_sigma=sigma)
    if name in ('edge_list', 'undirected_edge_list'):
        path = _require(spec, 'path')
        loaded = load_undirected_edge_list(path) if name == 'undirected_edge_list' \
            else load_edge_list(path)
        return BuiltGraph(loaded.graph, loaded=loaded)
    if name == 'half_competitive':
        return BuiltGraph(half_competitive_instance())
    raise ConfigError(f"unknown generator '{name}'")


def build_predictor(spec: Dict[str, Any], built: BuiltGraph, graph: BipartiteGraph,
                    seed: TrialSeed) -> DegreePredictor:
    """
    Build the predictor of one trial.

    Args:
        spec: Predictor section of the configuration
        built: Output of build_graph
        graph: Trial graph (possibly with shuffled arrivals)
        seed: Seed of the trial

    Returns:
        DegreePredictor covering graph
    """
    name = spec.get('name')
    if name == 'expected':
        if built.profile is None:
            logger.warn("Expected-degree predictor without a CLV-B profile, using exact degrees")
            return exact_degree_predictor(graph)
        return expected_degree_predictor(built.profile, graph.n_offline)
    if name == 'exact':
        return exact_degree_predictor(graph)
    if name == 'subsample':
        return subsample_predictor(graph, float(spec.get('fraction', 1.0)), seed)
    if name == 'random':
        return random_predictor(graph.n_offline, seed)
    if name == 'type_graph':
        if built.type_sigma is None:
            raise ConfigError("predictor 'type_graph' needs a molloy_reed or pref_attachment generator")
        return built.type_sigma
    raise ConfigError(f"unknown predictor '{name}'")
