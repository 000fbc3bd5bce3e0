"""Exception hierarchy shared by the library and the command line.

Every error carries the exit code the command line reports for it:
2 for malformed input, 1 for a property that does not hold and 3 for a
computation that could not be finished exactly.
"""

from typing import Any

EXIT_OK = 0
EXIT_PROPERTY_FAILS = 1
EXIT_INPUT_ERROR = 2
EXIT_INCOMPLETE = 3


class LsaError(Exception):
    """Base class for toolkit errors."""

    exit_code: int = EXIT_PROPERTY_FAILS

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.details = details


# Input and format errors


class InputError(LsaError):
    exit_code = EXIT_INPUT_ERROR


class DimensionMismatch(InputError):
    """Operand shapes are incompatible."""


class AlgebraFormatError(InputError):
    """An algebra file or scalar string could not be parsed."""


class BadParameters(InputError):
    """Parameters outside the documented domain of an operation."""


# Properties that do not hold


class PropertyError(LsaError):
    exit_code = EXIT_PROPERTY_FAILS


class NotLeftSymmetric(PropertyError):
    pass


class NotComplete(PropertyError):
    pass


class NotSolvable(PropertyError):
    pass


class NotCartan(PropertyError):
    pass


class NotCanonical(PropertyError):
    pass


class NotOneDimensional(PropertyError):
    pass


class NotNilpotent(PropertyError):
    pass


class SingularMatrix(PropertyError):
    pass


class SeedNotRegular(PropertyError):
    pass


class TemplateExhausted(PropertyError):
    pass


# Computations that could not be completed exactly


class IncompleteComputation(LsaError):
    exit_code = EXIT_INCOMPLETE


class NumericFallback(IncompleteComputation):
    """Eigenvalues leave the Gaussian rationals; rerun in numeric mode."""

    def __init__(self, message: str, polynomial: Any = None, **details: Any):
        super().__init__(message, **details)
        self.polynomial = polynomial


class SolverIncomplete(IncompleteComputation):
    """Some branches of a structure-constant system were left unsolved."""

    def __init__(self, message: str, branches: list[Any] | None = None, **details: Any):
        super().__init__(message, **details)
        self.branches = branches or []


class MaxIterations(IncompleteComputation):
    pass
