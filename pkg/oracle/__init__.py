"""
Oracle Package
Exact maximum matchings and the Hall-subset upper bound
"""

from .brute_force import MAX_OFFLINE_NODES, brute_force_matching
from .errors import OracleLimitError
from .hall import HallCertificate, hall_subset
from .hopcroft_karp import HopcroftKarp, max_matching, maximum_matching

__all__ = ['HopcroftKarp', 'HallCertificate', 'OracleLimitError', 'MAX_OFFLINE_NODES',
           'max_matching', 'maximum_matching', 'brute_force_matching', 'hall_subset']
