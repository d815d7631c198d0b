"""Exception types shared across the workbench.

The command-line driver maps these onto exit codes: configuration problems
exit with 2, numeric failures (non-convergent quadrature, singular solves)
with 3.  Everything else is an ordinary check failure (exit 1) reported in
the JSON output rather than raised.
"""


class WedgebenchError(Exception):
    """Base class for all workbench errors."""


class DomainError(WedgebenchError):
    """Argument outside the domain an operation is defined on."""


class SizeError(WedgebenchError):
    """Input too small (or mismatched) for the requested operation."""


class NumericError(WedgebenchError):
    """Quadrature or linear solve failed to converge to tolerance."""


class PoleError(WedgebenchError):
    """Evaluation requested too close to a declared pole."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class CoincidenceError(WedgebenchError):
    """Coincident rapidities where an exchange or state is ill-defined."""


class ResolutionError(WedgebenchError):
    """Grid or scan resolution insufficient for a reliable answer."""


class OrderingError(DomainError):
    """Rapidity ordering precondition violated."""


class ConfigError(WedgebenchError):
    """Invalid run configuration (unknown key, bad value)."""
