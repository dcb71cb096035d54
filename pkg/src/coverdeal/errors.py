"""Exception types shared across coverdeal.

Each carries the CLI exit code it maps to.
"""


class CoverdealError(Exception):
    exit_code = 1


class ValidationError(CoverdealError, ValueError):
    """Malformed graph, family spec, or ideal input."""

    exit_code = 1


class ResourceLimitError(CoverdealError):
    """An enumeration or search exceeded its configured cap."""

    exit_code = 2


class UnsupportedConfiguration(CoverdealError):
    """Input is valid but outside the regime a closed form covers."""

    exit_code = 3
