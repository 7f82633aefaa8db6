"""Spherical trigonometry on the unit 2-sphere.

Cosine rules for triangles, the face and vertex-figure angles of regular
triangles and squares, half-angles of regular n-gons, the angles of the
isosceles lateral triangle (a, c, c), and the angle formulas for an
isosceles spherical trapezoid.

All arcs and angles are radians.  Arguments handed to ``acos``/``sqrt`` that
leave their domain by at most ``CLAMP_TOL`` are treated as round-off and
clamped; anything larger raises :class:`~sphervol.errors.DomainError`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateTriangleError, DomainError

Arc = float
Angle = float

CLAMP_TOL = 1e-12


def clamp_unit(x: float, what: str = "cosine") -> float:
    """Clamp ``x`` into [-1, 1], raising if it is outside by more than CLAMP_TOL."""
    if not math.isfinite(x):
        raise DomainError(f"{what} is not finite: {x!r}")
    if x > 1.0:
        if x > 1.0 + CLAMP_TOL:
            raise DomainError(f"{what} = {x!r} exceeds 1")
        return 1.0
    if x < -1.0:
        if x < -1.0 - CLAMP_TOL:
            raise DomainError(f"{what} = {x!r} is below -1")
        return -1.0
    return x


def safe_acos(x: float, what: str = "cosine") -> float:
    return math.acos(clamp_unit(x, what))


def safe_sqrt(x: float, what: str = "radicand") -> float:
    if not math.isfinite(x):
        raise DomainError(f"{what} is not finite: {x!r}")
    if x < 0.0:
        if x < -CLAMP_TOL:
            raise DomainError(f"{what} = {x!r} is negative")
        return 0.0
    return math.sqrt(x)


# Exact values for small n keep the n = 2 and n = 3 special cases free of
# cos(pi/2) = 6e-17 style noise.
_COS_PI_OVER = {2: 0.0, 3: 0.5}
_COS_TWO_PI_OVER = {2: -1.0, 3: -0.5, 4: 0.0}


def _check_n(n: int) -> int:
    if isinstance(n, bool) or int(n) != n or n < 2:
        raise DomainError(f"gonality n must be an integer >= 2, got {n!r}")
    return int(n)


def cos_pi_over(n: int) -> float:
    """cos(pi/n)."""
    n = _check_n(n)
    return _COS_PI_OVER.get(n, math.cos(math.pi / n))


def cos_two_pi_over(n: int) -> float:
    """cos(2 pi/n)."""
    n = _check_n(n)
    return _COS_TWO_PI_OVER.get(n, math.cos(2.0 * math.pi / n))


def angle_from_sides(opposite: Arc, b: Arc, c: Arc) -> Angle:
    """Angle opposite ``opposite`` in the spherical triangle with sides (opposite, b, c)."""
    for name, side in (("opposite", opposite), ("b", b), ("c", c)):
        if not 0.0 < side < math.pi:
            raise DomainError(f"side {name} = {side!r} must lie in (0, pi)")
    num = math.cos(opposite) - math.cos(b) * math.cos(c)
    return safe_acos(num / (math.sin(b) * math.sin(c)), "spherical cosine rule")


def regular_triangle_face_angle(a: Arc) -> Angle:
    """Face angle of the regular spherical triangle with side ``a``.

    cos(alpha) = cos a / (1 + cos a), valid for 0 < a < 2 pi/3.
    """
    if not 0.0 < a < 2.0 * math.pi / 3.0:
        raise DomainError(f"regular triangle side a = {a!r} must lie in (0, 2pi/3)")
    ca = math.cos(a)
    return safe_acos(ca / (1.0 + ca), "cos(face angle)")


def triangle_vertex_figure_angle(alpha: Angle) -> Angle:
    """Dihedral angle of a regular tetrahedron whose faces have angle ``alpha``.

    The vertex figure is a regular triangle with sides ``alpha``, so
    cos A = cos(alpha) / (1 + cos(alpha)).
    """
    calpha = math.cos(alpha)
    if 1.0 + calpha <= 0.0:
        raise DomainError(f"face angle {alpha!r} gives no regular vertex triangle")
    return safe_acos(calpha / (1.0 + calpha), "cos(vertex-figure angle)")


def square_vertex_figure_angle(alpha: Angle) -> Angle:
    """Angle A of a regular spherical square with sides ``alpha``.

    Inverts cos(alpha) = (1 + cos A)/(1 - cos A), i.e.
    cos A = (cos(alpha) - 1)/(cos(alpha) + 1).  Needs cos(alpha) >= 0.
    """
    calpha = math.cos(alpha)
    if calpha < -CLAMP_TOL:
        raise DomainError(f"no regular spherical square with side {alpha!r} (cos < 0)")
    calpha = max(calpha, 0.0)
    return safe_acos((calpha - 1.0) / (calpha + 1.0), "cos(square angle)")


def regular_ngon_half_angle(n: int, a: Arc) -> tuple[float, float]:
    """(cos(x/2), sin(x/2)) for the interior angle x of a regular spherical n-gon with side a."""
    ca = math.cos(a)
    c2 = cos_two_pi_over(n)
    if ca - c2 < -CLAMP_TOL:
        raise DomainError(f"regular {n}-gon with side {a!r} does not exist (cos a < cos 2pi/n)")
    cos_half = safe_sqrt((ca - c2) / (ca + 1.0))
    sin_half = safe_sqrt((c2 + 1.0) / (ca + 1.0))
    return cos_half, sin_half


def isosceles_triangle_angles(a: Arc, c: Arc) -> tuple[float, float, float, float]:
    """Angles of the lateral triangle with base ``a`` and legs ``c``.

    Returns ``(cos_y, sin_y, sin_half_z, cos_half_z)`` where y is the angle at
    each end of the base and z the apex angle opposite the base.
    """
    ca = math.cos(a)
    cc = math.cos(c)
    sc = math.sin(c)
    gap = 1.0 + ca - 2.0 * cc * cc
    if not gap > 0.0 or sc <= 0.0:
        raise DegenerateTriangleError(
            f"triangle (a, c, c) = ({a!r}, {c!r}, {c!r}) is degenerate: 1 + cos a - 2cos^2 c = {gap!r}"
        )
    cos_y = clamp_unit(cc / sc * math.tan(0.5 * a), "cos y")
    sin_y = safe_sqrt(1.0 - cos_y * cos_y)
    sin_half_z = clamp_unit(math.sqrt(1.0 - ca) / (math.sqrt(2.0) * sc), "sin(z/2)")
    cos_half_z = clamp_unit(math.sqrt(gap) / (math.sqrt(2.0) * sc), "cos(z/2)")
    return cos_y, sin_y, sin_half_z, cos_half_z


@dataclass(frozen=True)
class TrapezoidShape:
    """Isosceles spherical trapezoid: bases ``x`` and ``z``, lateral sides ``y``."""

    x: Arc
    y: Arc
    z: Arc

    def __post_init__(self):
        for name in ("x", "y", "z"):
            v = getattr(self, name)
            if not 0.0 < v < math.pi:
                raise DomainError(f"trapezoid side {name} = {v!r} must lie in (0, pi)")


def trapezoid_cosines(
    cos_y: float,
    sin_y: float,
    sin_half_x: float,
    cos_half_x: float,
    sin_half_z: float,
    cos_half_z: float,
) -> tuple[float, float]:
    """Unclamped (cos A, cos C) from the half-angle data of a trapezoid.

    A is the angle at base x, C the angle at base z.  The two expressions are
    the same function with the roles of x and z exchanged.
    """
    if sin_y == 0.0:
        raise DomainError("trapezoid lateral side has sin y = 0")
    return (
        _base_angle_cosine(cos_y, sin_y, sin_half_x, cos_half_x, sin_half_z),
        _base_angle_cosine(cos_y, sin_y, sin_half_z, cos_half_z, sin_half_x),
    )


def _base_angle_cosine(cos_y, sin_y, sin_half_own, cos_half_own, sin_half_other):
    if cos_half_own == 0.0:
        raise DomainError("trapezoid base of length pi (cos of half-base is 0)")
    return (cos_y * sin_half_own - sin_half_other) / (sin_y * cos_half_own)


def trapezoid_angles(shape: TrapezoidShape) -> tuple[Angle, Angle]:
    """Base angles (A at base x, C at base z) of an isosceles spherical trapezoid."""
    hx = 0.5 * shape.x
    hz = 0.5 * shape.z
    cos_a, cos_c = trapezoid_cosines(
        math.cos(shape.y),
        math.sin(shape.y),
        math.sin(hx),
        math.cos(hx),
        math.sin(hz),
        math.cos(hz),
    )
    return safe_acos(cos_a, "cos A (trapezoid)"), safe_acos(cos_c, "cos C (trapezoid)")
