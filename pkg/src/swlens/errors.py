"""Exception types raised across the package."""


class SWLensError(ValueError):
    """Base class for invalid-input errors."""


class NotCoprime(SWLensError):
    pass


class BadModulus(SWLensError):
    pass


class ModulusMismatch(SWLensError):
    pass


class ZeroDenominator(SWLensError, ZeroDivisionError):
    pass


class NotNegativeDefinite(SWLensError):
    pass


class UnsupportedStructure(SWLensError):
    pass


class RDependenceNonzero(ArithmeticError):
    """An eta combination kept a nonzero metric-parameter coefficient.

    Signals an internal inconsistency, never bad user input.
    """
