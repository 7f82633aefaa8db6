"""Parameter model of the spherical antiprism A_n(a, c).

An antiprism is fixed by its gonality ``n``, the edge length ``a`` of the two
regular n-gon faces and the lateral edge length ``c``.  This module answers
whether such an antiprism exists, builds the frame quantities of its
construction (circumradius, centre distance, pole angle), gives the dihedral
angles (A along the a-edges, C along the c-edges), and the regular
tetrahedron (n = 2, a = c) and octahedron (n = 3, a = c) relations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateTriangleError, DomainError, InconsistencyError, RegionError
from .spherical_trig import (
    CLAMP_TOL,
    Angle,
    Arc,
    clamp_unit,
    cos_pi_over,
    cos_two_pi_over,
    isosceles_triangle_angles,
    regular_ngon_half_angle,
    safe_acos,
    safe_sqrt,
)

BOUNDARY_TOL = 1e-12
# Dihedral angles this close below a degenerate limit (arccos(1/3) or
# arccos(-1/3)) are read as the limit itself, so 8-9 digit inputs work.
LIMIT_SNAP = 1e-8

TETRA_ANGLE_MIN = math.acos(1.0 / 3.0)
TETRA_EDGE_MAX = math.acos(-1.0 / 3.0)
OCTA_ANGLE_MIN = math.acos(-1.0 / 3.0)
OCTA_EDGE_MAX = 0.5 * math.pi


@dataclass(frozen=True)
class AntiprismSpec:
    """Gonality ``n`` and the edge lengths ``a`` (n-gon faces) and ``c`` (lateral)."""

    n: int
    a: Arc
    c: Arc

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 2:
            raise DomainError(f"gonality n must be an integer >= 2, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        for name in ("a", "c"):
            v = float(getattr(self, name))
            if not 0.0 <= v <= math.pi:
                raise DomainError(f"edge length {name} = {v!r} must lie in [0, pi]")
            object.__setattr__(self, name, v)


@dataclass(frozen=True)
class ExistenceMargins:
    """Left-hand sides of the three existence inequalities, in order."""

    m1: float
    m2: float
    m3: float

    def min(self) -> float:
        return min(self.m1, self.m2, self.m3)

    @property
    def admissible(self) -> bool:
        return self.min() >= -BOUNDARY_TOL

    def violated(self) -> list[str]:
        return [name for name in ("m1", "m2", "m3") if getattr(self, name) < -BOUNDARY_TOL]


@dataclass(frozen=True)
class DihedralAngles:
    A: Angle
    C: Angle


@dataclass(frozen=True)
class EmbeddingFrame:
    """Construction quantities of an antiprism inscribed in its cylinder.

    ``R_circ`` is the circumradius of an n-gon face, ``H`` the distance from a
    vertex to the midpoint of the opposite n-gon edge in a lateral triangle,
    ``h`` the apothem of an n-gon face, ``d`` the distance between the two
    face centres and ``Psi`` the angle at the pole where the geodesics through
    the centres meet (equal to ``d``).
    """

    R_circ: Arc
    H: Arc
    h: Arc
    d: Arc
    Psi: Angle
    cos_d: float


@dataclass(frozen=True)
class FaceAngles:
    """Face angles meeting at a vertex: the n-gon angle ``x``, lateral base angle ``y``
    and lateral apex angle ``z``."""

    x: Angle
    y: Angle
    z: Angle


def margins_from_cosines(n: int, cos_a: float, cos_c: float) -> ExistenceMargins:
    k = cos_pi_over(n)
    return ExistenceMargins(
        m1=1.0 + cos_a - 2.0 * (1.0 + k) * cos_c + 2.0 * k,
        m2=1.0 + cos_a + 2.0 * (1.0 - k) * cos_c - 2.0 * k,
        m3=cos_a - cos_two_pi_over(n),
    )


def existence_margins(spec: AntiprismSpec) -> ExistenceMargins:
    return margins_from_cosines(spec.n, math.cos(spec.a), math.cos(spec.c))


def exists(spec: AntiprismSpec) -> bool:
    """True when the spec lies in the closed existence region."""
    return existence_margins(spec).admissible


def require_exists(spec: AntiprismSpec) -> ExistenceMargins:
    margins = existence_margins(spec)
    if not margins.admissible:
        raise RegionError(
            f"{spec} lies outside the existence region (violated: {', '.join(margins.violated())})",
            margins,
        )
    return margins


def on_degenerate_boundary(spec: AntiprismSpec, margins: ExistenceMargins | None = None) -> bool:
    """True on the boundary pieces where the antiprism collapses to zero volume.

    These are the c = c0 segment (m1 = 0, the solid flattens to a 2n-gon), the
    a = 0 segment (a geodesic segment) and the corner cos a = cos(2pi/n).
    The m2 = 0 segment is not included: there the centre distance reaches pi
    and the solid is a hemisphere-sized body, not a degenerate one.
    """
    if margins is None:
        margins = existence_margins(spec)
    return (
        abs(margins.m1) <= BOUNDARY_TOL
        or abs(margins.m3) <= BOUNDARY_TOL
        or 1.0 - math.cos(spec.a) <= BOUNDARY_TOL
    )


def circumradius(n: int, a: Arc) -> Arc:
    """Spherical circumradius of the regular n-gon with side ``a`` (in [0, pi/2])."""
    c2 = cos_two_pi_over(n)
    num = math.cos(a) - c2
    if num < -CLAMP_TOL:
        raise DomainError(f"regular {n}-gon with side {a!r} does not exist (cos a < cos 2pi/n)")
    # sin^2 R = (1 - cos a)/(1 - cos 2pi/n); use whichever of sin R, cos R is the smaller
    s = math.sin(0.5 * a)
    sin2 = 2.0 * s * s / (1.0 - c2)
    if sin2 < 0.5:
        return math.asin(math.sqrt(sin2))
    return safe_acos(safe_sqrt(num / (1.0 - c2)), "cos R_circ")


def center_distance(spec: AntiprismSpec) -> EmbeddingFrame:
    """Populate the construction frame, including the face-centre distance d."""
    n, a, c = spec.n, spec.a, spec.c
    k = cos_pi_over(n)
    ca, cc = math.cos(a), math.cos(c)
    m3 = ca - cos_two_pi_over(n)
    if m3 <= 0.0:
        raise DomainError(f"n-gon face of {spec} lies on a great circle or does not exist")
    raw = (2.0 * cc * (1.0 - k * k) - k * (1.0 - ca)) / m3
    if abs(raw) > 1.0 + CLAMP_TOL:
        raise InconsistencyError(f"cos d = {raw!r} for {spec}: spec is outside the existence region")
    cos_d = clamp_unit(raw)
    d = math.acos(cos_d)

    R = circumradius(n, a)
    cos_half_a = math.cos(0.5 * a)
    H = safe_acos(cc / cos_half_a, "cos H")
    h = safe_acos(math.cos(R) / cos_half_a, "cos h")
    # Triangle P M v1: sides pi/2 - h and pi/2 - R around the pole angle, H opposite.
    cos_psi = (math.cos(H) - math.sin(h) * math.sin(R)) / (math.cos(h) * math.cos(R))
    psi = safe_acos(cos_psi, "cos Psi")
    return EmbeddingFrame(R_circ=R, H=H, h=h, d=d, Psi=psi, cos_d=cos_d)


def dihedral_cosines(n: int, a, c):
    """Unclamped (cos A, cos C) in closed form.

    Written with ``numpy``-compatible operations only so it accepts complex
    arguments (used for complex-step derivatives in the volume engine).
    """
    k = cos_pi_over(n)
    ca = np.cos(a)
    cc = np.cos(c)
    gap = 1.0 + ca - 2.0 * cc * cc
    m3 = ca - cos_two_pi_over(n)
    cos_A = np.sqrt(1.0 - ca) * (2.0 * cc * k - ca - 1.0) / np.sqrt(2.0 * gap * m3)
    cos_C = (cc - ca * cc + 2.0 * (cc * cc - 1.0) * k) / gap
    return cos_A, cos_C


def dihedral_angles(spec: AntiprismSpec) -> DihedralAngles:
    """Dihedral angles A (along a-edges) and C (along c-edges).

    For n = 2 the n-gon faces are degenerate 2-gons and A is the angle between
    that 2-gon and a lateral face; the tetrahedron's own dihedral angle along
    the a-edge is then 2A - pi.
    """
    require_exists(spec)
    ca, cc = math.cos(spec.a), math.cos(spec.c)
    if not 1.0 + ca - 2.0 * cc * cc > 0.0:
        raise DegenerateTriangleError(f"lateral triangle of {spec} is degenerate")
    if not ca - cos_two_pi_over(spec.n) > 0.0:
        raise DomainError(f"n-gon face of {spec} lies on a great circle")
    cos_A, cos_C = dihedral_cosines(spec.n, spec.a, spec.c)
    return DihedralAngles(A=safe_acos(float(cos_A), "cos A"), C=safe_acos(float(cos_C), "cos C"))


def face_angles(spec: AntiprismSpec) -> FaceAngles:
    cos_hx, sin_hx = regular_ngon_half_angle(spec.n, spec.a)
    cos_y, sin_y, sin_hz, cos_hz = isosceles_triangle_angles(spec.a, spec.c)
    return FaceAngles(
        x=2.0 * math.atan2(sin_hx, cos_hx),
        y=math.atan2(sin_y, cos_y),
        z=2.0 * math.atan2(sin_hz, cos_hz),
    )


def c_lower_bound(n: int, a: Arc) -> Arc:
    """Smallest admissible lateral edge c0(n, a), where the antiprism flattens (m1 = 0)."""
    k = cos_pi_over(n)
    ca = math.cos(a)
    if ca - cos_two_pi_over(n) < -CLAMP_TOL:
        raise DomainError(f"no regular {n}-gon with side {a!r}")
    c0 = safe_acos((1.0 + ca + 2.0 * k) / (2.0 * (1.0 + k)), "cos c0")
    m1 = margins_from_cosines(n, ca, math.cos(c0)).m1
    assert abs(m1) <= 1e-12, f"c0 does not zero the first margin (m1 = {m1!r})"
    return c0


def c_upper_bound(n: int, a: Arc) -> Arc:
    """Largest admissible lateral edge for (n, a), where m2 = 0 (face centres antipodal)."""
    k = cos_pi_over(n)
    ca = math.cos(a)
    if ca - cos_two_pi_over(n) < -CLAMP_TOL:
        raise DomainError(f"no regular {n}-gon with side {a!r}")
    return safe_acos((2.0 * k - 1.0 - ca) / (2.0 * (1.0 - k)), "cos c_max")


def _acos_from_gap(one_minus_x: float, what: str) -> float:
    """arccos(x) given 1 - x, accurate when x is near 1."""
    half = 0.5 * one_minus_x
    if not -CLAMP_TOL <= half <= 1.0 + CLAMP_TOL:
        raise DomainError(f"{what} = {one_minus_x!r} is outside [0, 2]")
    return 2.0 * math.asin(math.sqrt(min(max(half, 0.0), 1.0)))


def tetra_angle_from_edge(a: Arc) -> Angle:
    """Dihedral angle of the regular spherical tetrahedron with edge ``a``."""
    if not 0.0 <= a <= TETRA_EDGE_MAX + CLAMP_TOL:
        raise DomainError(f"tetrahedron edge {a!r} must lie in [0, arccos(-1/3)]")
    ca = math.cos(a)
    # cos A = 1/3 - 2 sin^2(a/2) / (3 (1 + 2cos a)) keeps the small-a information
    s = math.sin(0.5 * a)
    return safe_acos(1.0 / 3.0 - 2.0 * s * s / (3.0 * (1.0 + 2.0 * ca)), "cos A (tetrahedron)")


def tetra_edge_from_angle(A: Angle) -> Arc:
    """Edge of the regular spherical tetrahedron with dihedral angle ``A``."""
    if not TETRA_ANGLE_MIN - LIMIT_SNAP <= A <= math.pi:
        raise DomainError(f"tetrahedron dihedral angle {A!r} must lie in [arccos(1/3), pi]")
    A = max(A, TETRA_ANGLE_MIN)
    # 1 - cos a = (1 - 3cos A)/(1 - 2cos A), with 1 - 3cos A in product form
    gap = 6.0 * math.sin(0.5 * (A + TETRA_ANGLE_MIN)) * math.sin(0.5 * (A - TETRA_ANGLE_MIN))
    return _acos_from_gap(gap / (1.0 - 2.0 * math.cos(A)), "1 - cos a (tetrahedron)")


def octa_angle_from_edge(a: Arc) -> Angle:
    """Dihedral angle of the regular spherical octahedron with edge ``a``."""
    if not 0.0 <= a <= OCTA_EDGE_MAX + CLAMP_TOL:
        raise DomainError(f"octahedron edge {a!r} must lie in [0, pi/2]")
    ca = max(math.cos(a), 0.0)
    # 1 + cos A = 2cos a/(1 + 2cos a): measure A from pi
    return math.pi - _acos_from_gap(2.0 * ca / (1.0 + 2.0 * ca), "1 + cos A (octahedron)")


def octa_edge_from_angle(A: Angle) -> Arc:
    """Edge of the regular spherical octahedron with dihedral angle ``A``."""
    if not OCTA_ANGLE_MIN - LIMIT_SNAP <= A <= math.pi:
        raise DomainError(f"octahedron dihedral angle {A!r} must lie in [arccos(-1/3), pi]")
    A = max(A, OCTA_ANGLE_MIN)
    # 1 - cos a = (3cos A + 1)/(2cos A), with 3cos A + 1 in product form
    gap = -3.0 * math.sin(0.5 * (A + OCTA_ANGLE_MIN)) * math.sin(0.5 * (A - OCTA_ANGLE_MIN)) / math.cos(A)
    return _acos_from_gap(gap, "1 - cos a (octahedron)")
