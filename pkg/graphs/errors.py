"""
Graph Errors
Exceptions raised by graph validation and the online execution driver
"""

from typing import Optional


class GraphValidationError(ValueError):
    """Raised when a bipartite graph breaks one of its structural invariants."""

    def __init__(self, message: str, node: Optional[int] = None):
        super().__init__(message)
        self.node = node


class ContractViolationError(RuntimeError):
    """Raised when an online algorithm picks an offline node it was not offered."""

    def __init__(self, message: str, online_node: int, offline_node: Optional[int]):
        super().__init__(message)
        self.online_node = online_node
        self.offline_node = offline_node
