"""
GraphFixtures Custom Library
Robot Framework library for generating bipartite test graphs and scripted policies
"""

from .fixtures import GraphFixtures

__all__ = ['GraphFixtures']
