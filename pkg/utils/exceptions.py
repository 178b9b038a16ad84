from typing import Optional


class UnitonError(Exception):
    """Base class for every failure raised by the engine"""


class InvalidInputError(UnitonError, ValueError):
    """Malformed text, shape mismatch, block-profile violation or degenerate data"""


class NotNilpotentError(InvalidInputError):
    """B^n did not vanish"""


class ObstructionError(UnitonError):
    """Raised by callers that cannot return an IntegrationObstruction"""

    def __init__(self, obstruction, where: Optional[str] = None):
        self.obstruction = obstruction
        self.where = where
        location = f" at {where}" if where else ""
        super().__init__(
            f"Integration obstruction{location}: remainder {obstruction.remainder}"
        )


class NumericalFailure(UnitonError, ArithmeticError):
    """Pole, rank drop or failed numeric postcondition"""


class StructuralError(UnitonError):
    """Input lacks the structure an algorithm relies on"""
