"""
Generators Package
Random graph models, degree profiles, predictors, transforms and edge-list files
"""

from .clvb import clvb_sample
from .degree_profiles import (DegreeProfile, GroupedView, expcutoff_profile, uniform_profile,
                              zipf_profile)
from .edge_list import LoadedGraph, load_edge_list, load_undirected_edge_list, write_edge_list
from .errors import EdgeListParseError, ProfileError
from .fixtures import complete_bipartite, empty_graph, half_competitive_instance
from .known_iid import TypeGraph, known_iid_sample
from .predictors import (exact_degree_predictor, expected_degree_predictor,
                         first_snapshot_predictor, random_predictor, subsample_predictor)
from .transforms import bipartite_double_cover, degree_histogram, rewire_edges
from .type_graphs import (configuration_model_typegraph, molloy_reed_typegraph,
                          pref_attachment_typegraph)

__all__ = ['DegreeProfile', 'GroupedView', 'TypeGraph', 'LoadedGraph',
           'ProfileError', 'EdgeListParseError',
           'zipf_profile', 'expcutoff_profile', 'uniform_profile', 'clvb_sample',
           'subsample_predictor', 'first_snapshot_predictor', 'expected_degree_predictor',
           'exact_degree_predictor', 'random_predictor', 'known_iid_sample',
           'configuration_model_typegraph', 'molloy_reed_typegraph', 'pref_attachment_typegraph',
           'bipartite_double_cover', 'rewire_edges', 'degree_histogram',
           'load_edge_list', 'load_undirected_edge_list', 'write_edge_list',
           'half_competitive_instance', 'complete_bipartite', 'empty_graph']
