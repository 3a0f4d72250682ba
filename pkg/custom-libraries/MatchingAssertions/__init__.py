"""
MatchingAssertions Custom Library
Robot Framework library for matching property checks and oracle comparisons
"""

from .assertions import MatchingAssertions

__all__ = ['MatchingAssertions']
