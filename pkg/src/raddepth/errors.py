"""Exception types raised across the package."""

from .linalg import AmbientMismatch


class NonAdmissible(ValueError):
    """The path basis did not die out within the length bound."""


class DivisionAlgebraEnd(ArithmeticError):
    """End/rad of a summand could not be split or certified as a field."""


class CocycleMismatch(ValueError):
    """A cocycle does not live in the expected Hom space."""


class NotAlmostSplit(RuntimeError):
    """No candidate extension passed the right almost split check."""


class EnumerationBound(RuntimeError):
    """Enumeration of indecomposables hit ``max_modules`` or ``max_dim``.

    ``found`` holds the indecomposables collected so far; whether the algebra
    has finite type is left undetermined.
    """

    def __init__(self, message, found=()):
        super().__init__(message)
        self.found = list(found)


class PowerBound(RuntimeError):
    """The radical power table did not stabilize within ``max_power``."""

    def __init__(self, message, table=None):
        super().__init__(message)
        self.table = table


class EmptyLevelWithRemainder(RuntimeError):
    """A partition level came out empty while objects remained."""


class CoverFailure(RuntimeError):
    """A level does not cover (or cocover) the requested object."""


class NonVanishingSelfExt(ValueError):
    """Ext^1(Delta(j), Delta(j)) is nonzero, so the universal extension is undefined."""


__all__ = [
    "AmbientMismatch",
    "NonAdmissible",
    "DivisionAlgebraEnd",
    "CocycleMismatch",
    "NotAlmostSplit",
    "EnumerationBound",
    "PowerBound",
    "EmptyLevelWithRemainder",
    "CoverFailure",
    "NonVanishingSelfExt",
]
