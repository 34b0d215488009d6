"""Typed errors raised across the package."""


class MamlLqrError(Exception):
    """Base class for every error this package raises on purpose."""


class DimensionError(MamlLqrError, ValueError):
    """Matrix arguments have inconsistent or invalid shapes."""


class NumericalError(MamlLqrError, RuntimeError):
    """A numerical routine produced an unusable result."""


class InstabilityError(MamlLqrError, ValueError):
    """A policy violates a closed-loop stability requirement.

    Carries the offending spectral radius, the task id (when known) and
    which check failed ("task" for the current policy, "inner" for an
    adapted policy).
    """

    def __init__(self, message, radius=None, task_id=None, check=None):
        super().__init__(message)
        self.radius = radius
        self.task_id = task_id
        self.check = check


class ConvergenceError(MamlLqrError, RuntimeError):
    """An iterative solver hit its iteration cap before converging."""

    def __init__(self, message, iterations=None):
        super().__init__(message)
        self.iterations = iterations


class SafeguardError(MamlLqrError, RuntimeError):
    """A step-size safeguard exhausted its budget; carries the last good state."""

    def __init__(self, message, last_result=None):
        super().__init__(message)
        self.last_result = last_result


class GenerationError(MamlLqrError, RuntimeError):
    """Random task generation exhausted its redraw budget."""


class TaskFileError(MamlLqrError, ValueError):
    """A task or config file is malformed; message names the offending field."""


class EmptyRegionError(MamlLqrError, ValueError):
    """A search box contains no stabilizing grid point."""
