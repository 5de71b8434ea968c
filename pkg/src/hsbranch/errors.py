"""Exception hierarchy shared by every module."""


class HSBranchError(Exception):
    """Base class for all errors raised by the library."""


class ConfigurationError(HSBranchError, ValueError):
    """An unsupported type label, rank, or pair specification."""


class UsageError(HSBranchError, ValueError):
    """A caller passed arguments that violate an operation's preconditions."""


class DomainError(HSBranchError, ValueError):
    """An input lies outside the mathematical domain of the operation.

    ``root`` names the offending root when one exists.
    """

    def __init__(self, message, root=None, condition=None):
        super().__init__(message)
        self.root = root
        self.condition = condition


class UnsupportedError(HSBranchError):
    """The request is well formed but the feature or scale is not supported."""


class InvariantViolation(HSBranchError, AssertionError):
    """An internal consistency check failed; always a bug or a false premise."""
