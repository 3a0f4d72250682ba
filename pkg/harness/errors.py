"""
Harness Errors
"""

from typing import Optional


class ConfigError(ValueError):
    """Raised for an unreadable, malformed or inconsistent experiment configuration."""


class TrialInvariantError(RuntimeError):
    """Raised when a trial violates size(algorithm) <= max matching <= Hall bound or the half bound."""

    def __init__(self, message: str, trial_index: int, algorithm: Optional[str] = None):
        super().__init__(f"trial {trial_index}: {message}")
        self.trial_index = trial_index
        self.algorithm = algorithm
