"""Exception hierarchy shared by all sphervol modules."""

from __future__ import annotations


class SphervolError(Exception):
    """Base class for every error raised by this package."""


class DomainError(SphervolError, ValueError):
    """Arguments fall outside the admissible geometric domain."""


class DegenerateTriangleError(DomainError):
    """A lateral triangle with sides (a, c, c) collapses (1 + cos a - 2 cos^2 c <= 0)."""


class RegionError(DomainError):
    """An antiprism spec lies outside the existence region.

    ``margins`` carries the offending :class:`~sphervol.antiprism.ExistenceMargins`
    when available so callers can report which inequality failed.
    """

    def __init__(self, message: str, margins=None):
        super().__init__(message)
        self.margins = margins


class InconsistencyError(SphervolError):
    """Two routes to the same quantity disagree beyond tolerance."""


class DegeneracyError(SphervolError):
    """A face of an embedded polytope does not span a 3-dimensional subspace."""


class IncidenceError(SphervolError):
    """Edge/face adjacency lookup failed on an embedded polytope."""


class ConvergenceError(SphervolError):
    """Adaptive quadrature hit its subdivision cap before reaching tolerance."""
