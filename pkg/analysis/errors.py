"""
Analysis Errors
"""


class AnalysisError(ValueError):
    """Raised when a profile is outside the domain of the analytic engine."""


class NumericalInstabilityError(ArithmeticError):
    """Raised when an evaluated probability leaves [0, 1] beyond rounding slack."""

    def __init__(self, message: str, value: float = float('nan')):
        super().__init__(message)
        self.value = value
