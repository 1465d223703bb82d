# toricdeg/core/exceptions.py
from __future__ import annotations

from typing import Optional


class ToricError(Exception):
    """
    Base class for domain errors.

    `exit_code` plays the role an HTTP status plays for a web handler:
    the CLI maps it straight to the process exit status.
    """

    exit_code: int = 1

    def __init__(self, detail: str) -> None:
        super().__init__(detail)
        self.detail = detail


class UsageError(ToricError):
    exit_code = 2


class ProblemParseError(UsageError):
    def __init__(
        self, detail: str, line: Optional[int] = None, column: Optional[int] = None
    ) -> None:
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{detail}{where}")
        self.line = line
        self.column = column


class DimensionMismatch(UsageError):
    pass


class InvalidParams(UsageError):
    pass


class LimitExceeded(UsageError):
    """A configured search limit was hit; raise the limit in settings to go further."""


class SubsetLimitExceeded(LimitExceeded):
    pass


class NotPointed(ToricError):
    def __init__(self, detail: str = "semigroup is not pointed (S ∩ -S ≠ {0})") -> None:
        super().__init__(detail)


class NotHomogeneous(ToricError):
    pass


class HypothesisViolated(ToricError):
    pass


class MissingUniqueBetti(HypothesisViolated):
    pass


class MissingDegenerationData(HypothesisViolated):
    pass


class CertificationFailure(ToricError):
    pass


class TheoryViolation(ToricError):
    """A computed result contradicts a proven statement: always a bug."""
