"""Spherical antiprisms A_n(a, c) in the 3-sphere: existence, angles, volumes."""

from .antiprism import (
    AntiprismSpec,
    DihedralAngles,
    EmbeddingFrame,
    ExistenceMargins,
    c_lower_bound,
    center_distance,
    circumradius,
    dihedral_angles,
    existence_margins,
    exists,
    octa_angle_from_edge,
    octa_edge_from_angle,
    tetra_angle_from_edge,
    tetra_edge_from_angle,
)
from .errors import (
    ConvergenceError,
    DegeneracyError,
    DomainError,
    IncidenceError,
    InconsistencyError,
    RegionError,
    SphervolError,
)
from .volume import (
    QuadratureConfig,
    VolumeEstimate,
    antiprism_volume,
    octa_volume_by_angle,
    octa_volume_by_edge,
    schlafli_residual,
    tetra_volume_by_angle,
    tetra_volume_by_edge,
)

__version__ = "0.1.0"
