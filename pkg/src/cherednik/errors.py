"""Exception types shared across the package."""


class CherednikError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(CherednikError, ValueError):
    """An operation was asked for a value outside its domain (e.g. 1/0)."""


class IntegrityError(CherednikError, ArithmeticError):
    """An internal invariant failed: a division that must be exact was not,
    a subspace that must be closed was not, and so on.

    These are never expected on correct input; they signal a bug or a wrong
    convention somewhere upstream.
    """


class UnsupportedError(CherednikError, NotImplementedError):
    """The requested computation is outside what is implemented."""
