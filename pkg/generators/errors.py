"""
Generator Errors
Exceptions raised while building profiles and reading graph files
"""

from typing import Optional


class ProfileError(ValueError):
    """Raised for a degree profile that is invalid for the requested graph size."""


class EdgeListParseError(ValueError):
    """Raised for a malformed edge-list file."""

    def __init__(self, message: str, path: str, line_number: Optional[int] = None):
        location = f"{path}:{line_number}" if line_number is not None else path
        super().__init__(f"{location}: {message}")
        self.path = path
        self.line_number = line_number
