"""Exception types shared across the package.

The CLI maps these onto exit codes: ConfigError -> 2, NumericalError -> 3.
Plain ValueError is used for local precondition violations (dimension
mismatches and the like).
"""


class SsesimError(Exception):
    """Base class for package-specific failures."""


class ConfigError(SsesimError):
    """Invalid run configuration; message carries the offending field path."""


class NumericalError(SsesimError):
    """A solver or factorization failed to meet its accuracy contract."""
