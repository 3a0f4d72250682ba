"""
Algorithms Package
Online matching policies and the factory resolving them by name
"""

from .augment import AugmentedPolicy, greedy_augment, mpd_augment
from .base_policy import OnlineAlgorithm
from .greedy import RandomGreedy, random_greedy
from .min_predicted_degree import MinPredictedDegree, min_degree, min_predicted_degree
from .policy_factory import PolicyFactory, create_policy
from .ranking import Ranking, ranking

__all__ = ['OnlineAlgorithm', 'MinPredictedDegree', 'Ranking', 'RandomGreedy', 'AugmentedPolicy',
           'PolicyFactory', 'min_predicted_degree', 'min_degree', 'ranking', 'random_greedy',
           'mpd_augment', 'greedy_augment', 'create_policy']
