"""
Oracle Errors
"""


class OracleLimitError(ValueError):
    """Raised when an exhaustive oracle is asked for a graph beyond its size cap."""

    def __init__(self, message: str, limit: int):
        super().__init__(message)
        self.limit = limit
