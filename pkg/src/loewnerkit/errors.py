"""Exception types shared across the package."""


class LoewnerkitError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LoewnerkitError, ValueError):
    """A point lies outside (or too close to the boundary of) the required domain."""


class FlowEscapeError(LoewnerkitError, RuntimeError):
    """An ODE trajectory left the disk / half-plane mid-integration."""


class BranchCutError(LoewnerkitError, RuntimeError):
    """A logarithm argument violated the positivity guard for the principal branch."""


class NumericsError(LoewnerkitError, RuntimeError):
    """An eigensolver or linear solve failed."""


class ConfigError(LoewnerkitError, ValueError):
    """A CLI configuration failed schema validation."""
