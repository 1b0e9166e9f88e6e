"""The errors raised by the library.

Validation errors derive from `DomainError`, numerical certification failures from
`NumericsError`. The command line maps them to the exit codes 2 and 3.

Examples:
```python
from cerbernetix.bernstein.errors import DomainError, NumericsError

try:
    pair = build_pair(spec, 1.0)
except DomainError as error:
    print(f"invalid input: {error}")
except NumericsError as error:
    print(f"numerical failure: {error}")
```
"""
from __future__ import annotations


class BernsteinError(Exception):
    """The base class for all errors raised by the library."""


class DomainError(BernsteinError, ValueError):
    """An argument lies outside the domain of the operation."""


class MissingBoundaryError(DomainError):
    """An operator needs the value at x=0 but the grid does not contain it."""


class DegenerateMeasureError(DomainError):
    """The triplet describes the zero Bernstein function."""


class NotAdmissibleError(DomainError):
    """The Bernstein function does not satisfy the assumptions needed to build a Sonine pair."""


class CensoringConditionError(DomainError):
    """The contraction constant is not below 1, the censored operators are not defined."""


class InsufficientDataError(DomainError):
    """Too few samples are available for a statistical test."""


class ConfigError(DomainError):
    """A configuration or spec file is malformed.

    Attributes:
        source (str): The name of the file or text block that was parsed.
        line (int): The 1-based line number of the offending entry, or 0 when unknown.
    """

    def __init__(self, message: str, source: str = None, line: int = 0) -> None:
        """Creates a configuration error.

        Args:
            message (str): The description of the problem.
            source (str, optional): The name of the parsed file. Defaults to None.
            line (int, optional): The 1-based line number of the offending entry. Defaults to 0.
        """
        self.source = source
        self.line = line

        location = ""
        if source and line:
            location = f"{source}:{line}: "
        elif source:
            location = f"{source}: "
        elif line:
            location = f"line {line}: "

        super().__init__(f"{location}{message}")


class NumericsError(BernsteinError, ArithmeticError):
    """A computed value cannot be certified within its admissible range."""


class SingularConjugateError(NumericsError):
    """The Bernstein function underflows to 0 and its conjugate cannot be evaluated."""


class InversionUnstableError(NumericsError):
    """The Gaver-Stehfest partial sums blow up or cancel completely."""


class SeriesDivergenceError(NumericsError):
    """A series did not show a certified decay within the allowed number of terms."""
