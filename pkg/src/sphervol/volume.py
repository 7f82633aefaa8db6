"""Volumes of spherical antiprisms and of the regular tetrahedron and octahedron.

Every volume here is a one-dimensional integral obtained from the Schläfli
differential dV = (1/2) sum(l_e dθ_e).  The integrands carry inverse square-root
singularities at the ends of their ranges (the flat antiprism at c = c0, the
hemisphere limit of the octahedron at a = pi/2, ...).  All integrals are
therefore taken in the variable theta of

    t = lo + (hi - lo) * sin^2(theta / 2),    theta in [0, pi],

which turns a 1/sqrt singularity at either end into a smooth integrand.  The
map also gives ``t - lo`` and ``hi - t`` without cancellation, and the
integrands below use those offsets to evaluate their vanishing factors in
product form.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate

from .antiprism import (
    BOUNDARY_TOL,
    LIMIT_SNAP,
    OCTA_ANGLE_MIN,
    OCTA_EDGE_MAX,
    TETRA_ANGLE_MIN,
    TETRA_EDGE_MAX,
    AntiprismSpec,
    c_lower_bound,
    c_upper_bound,
    dihedral_angles,
    dihedral_cosines,
    existence_margins,
    margins_from_cosines,
    on_degenerate_boundary,
    require_exists,
)
from .errors import ConvergenceError, DomainError
from .spherical_trig import CLAMP_TOL, Arc, Angle, cos_pi_over, cos_two_pi_over

S3_VOLUME = 2.0 * math.pi**2


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_subdivisions: int = 200

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("quadrature tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


DEFAULT_QUADRATURE = QuadratureConfig()
# Used where differences of volumes are formed.
TIGHT_QUADRATURE = QuadratureConfig(rel_tol=1e-13, abs_tol=1e-15, max_subdivisions=500)


@dataclass(frozen=True)
class VolumeEstimate:
    """A volume in units where the whole 3-sphere has volume 2 pi^2."""

    value: float
    error_bound: float
    method: str
    evaluations: int = 0


@dataclass(frozen=True)
class IntegrandTerms:
    G: float
    H_term: float
    R_rad: float
    denom: float
    t: Arc
    value: float


@dataclass(frozen=True)
class SchlafliResidual:
    """Central-difference residuals of dV = n a dA + n c dC, per unit step.

    ``along_c`` perturbs the lateral edge, ``along_a`` the n-gon edge.  Both are
    O(step^2).
    """

    along_c: float
    along_a: float
    step: float


def _integrate_mapped(
    f: Callable[[float, float, float], float],
    lo: float,
    hi: float,
    cfg: QuadratureConfig,
) -> tuple[float, float, int]:
    """Integrate f(t, t - lo, hi - t) dt over [lo, hi] via the sin^2 map."""
    span = hi - lo
    if span == 0.0:
        return 0.0, 0.0, 0

    def g(theta: float) -> float:
        s = math.sin(0.5 * theta)
        co = math.cos(0.5 * theta)
        dlo = span * s * s
        dhi = span * co * co
        return f(lo + dlo, dlo, dhi) * span * s * co

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        out = integrate.quad(
            g,
            0.0,
            math.pi,
            epsabs=cfg.abs_tol,
            epsrel=cfg.rel_tol,
            limit=cfg.max_subdivisions,
            full_output=1,
        )
    value, err, info = out[0], out[1], out[2]
    if not math.isfinite(value):
        raise ConvergenceError(f"quadrature produced a non-finite value on [{lo!r}, {hi!r}]")
    if err > max(cfg.abs_tol, cfg.rel_tol * abs(value)):
        raise ConvergenceError(
            f"quadrature on [{lo!r}, {hi!r}] stopped at error {err:.3g} "
            f"after {info['last']} subintervals (cap {cfg.max_subdivisions})"
        )
    return value, err, int(info["neval"])


# --------------------------------------------------------------------------
# antiprism


def antiprism_integrand(n: int, a: Arc, t: Arc) -> IntegrandTerms:
    """dV/dc of A_n(a, t), split into its named terms."""
    k = cos_pi_over(n)
    ca, sa = math.cos(a), math.sin(a)
    ct, st = math.cos(t), math.sin(t)
    G = -2.0 * (ct - k) * sa * st
    H = (1.0 - ca) * (1.0 + ca + 2.0 * ct * ct - 4.0 * ct * k)
    R = (1.0 + ca) ** 2 - 4.0 * (ct * ct + st * st * k * k - (1.0 - ca) * ct * k)
    denom = 1.0 + ca - 2.0 * ct * ct
    if R < -CLAMP_TOL:
        raise DomainError(f"radicand R = {R!r} < 0 at t = {t!r}: (a, t) outside the region")
    if denom <= 0.0:
        raise DomainError(f"denominator 1 + cos a - 2cos^2 t = {denom!r} <= 0 at t = {t!r}")
    R = max(R, 0.0)
    num = n * (a * G + t * H)
    if R == 0.0:
        value = math.copysign(math.inf, num) if num != 0.0 else math.nan
    else:
        value = num / (denom * math.sqrt(R))
    return IntegrandTerms(G=G, H_term=H, R_rad=R, denom=denom, t=t, value=value)


class _AntiprismKernel:
    """dV/dt for fixed (n, a) evaluated stably near both ends of the c-range.

    The radicand factors as m1(t) * m2(t), the first two existence margins
    along the segment, which vanish at c0 and c_max respectively.
    """

    def __init__(self, n: int, a: float):
        self.n = n
        self.a = a
        self.k = cos_pi_over(n)
        self.ca = math.cos(a)
        self.sa = math.sin(a)
        self.one_minus_ca = 2.0 * math.sin(0.5 * a) ** 2
        self.c0 = c_lower_bound(n, a)
        self.cmax = c_upper_bound(n, a)

    def __call__(self, t: float, to_c0: float, to_cmax: float) -> float:
        k, a = self.k, self.a
        ct, st = math.cos(t), math.sin(t)
        m1 = 4.0 * (1.0 + k) * math.sin(0.5 * (t + self.c0)) * math.sin(0.5 * to_c0)
        m2 = 4.0 * (1.0 - k) * math.sin(0.5 * (self.cmax + t)) * math.sin(0.5 * to_cmax)
        denom = 2.0 * math.sin(t + 0.5 * a) * math.sin(t - 0.5 * a)
        G = -2.0 * (ct - k) * self.sa * st
        H = self.one_minus_ca * (1.0 + self.ca + 2.0 * ct * ct - 4.0 * ct * k)
        return self.n * (a * G + t * H) / (denom * math.sqrt(m1 * m2))

    def integrate(self, lo: float, hi: float, cfg: QuadratureConfig):
        gap = self.cmax - hi

        def f(t, dlo, dhi):
            return self(t, (lo - self.c0) + dlo, gap + dhi)

        return _integrate_mapped(f, lo, hi, cfg)


def _check_denominator_clear(kernel: _AntiprismKernel) -> None:
    # The lateral triangle degenerates at t = a/2, which sits at or below c0.
    if kernel.c0 < 0.5 * kernel.a - CLAMP_TOL:
        raise DomainError(
            f"c0 = {kernel.c0!r} lies below a/2 = {0.5 * kernel.a!r}; integrand denominator vanishes inside"
        )


def antiprism_volume(spec: AntiprismSpec, cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> VolumeEstimate:
    """Volume of A_n(a, c), integrating dV/dc from the flat antiprism at c0 up to c."""
    margins = require_exists(spec)
    if on_degenerate_boundary(spec, margins):
        return VolumeEstimate(0.0, 0.0, "quadrature", 0)
    kernel = _AntiprismKernel(spec.n, spec.a)
    _check_denominator_clear(kernel)
    if spec.c <= kernel.c0:
        return VolumeEstimate(0.0, 0.0, "quadrature", 0)
    hi = min(spec.c, kernel.cmax)
    value, err, neval = kernel.integrate(kernel.c0, hi, cfg)
    return VolumeEstimate(value, err, "quadrature", neval)


def antiprism_volume_by_path(
    spec: AntiprismSpec,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
    c_turn: float | None = None,
) -> VolumeEstimate:
    """Volume along an L-shaped path: first along a at fixed c = c_turn, then along c.

    The path starts on the a = 0 edge of the existence region, where the volume
    vanishes.  The a-leg integrand n a' dA/da + n c_turn dC/da uses
    complex-step derivatives of the closed-form dihedral cosines, so it shares
    nothing with the c-integrand beyond the angle formulas.
    """
    margins = require_exists(spec)
    if on_degenerate_boundary(spec, margins):
        return VolumeEstimate(0.0, 0.0, "quadrature", 0)
    n, a, c = spec.n, spec.a, spec.c
    kernel = _AntiprismKernel(n, a)
    if c_turn is None:
        c_turn = 0.5 * (kernel.c0 + c)
    if not kernel.c0 < c_turn <= c:
        raise DomainError(f"turning point c = {c_turn!r} must lie in (c0, c] = ({kernel.c0!r}, {c!r}]")

    def leg_a(x, _dlo, _dhi):
        dA, dC = dihedral_derivative_a(n, x, c_turn)
        return n * x * dA + n * c_turn * dC

    v1, e1, n1 = _integrate_mapped(leg_a, 0.0, a, cfg)
    v2, e2, n2 = kernel.integrate(c_turn, min(c, kernel.cmax), cfg)
    return VolumeEstimate(v1 + v2, e1 + e2, "quadrature", n1 + n2)


_COMPLEX_STEP = 1e-30


def dihedral_derivative_a(n: int, a: float, c: float) -> tuple[float, float]:
    """(dA/da, dC/da) at fixed c by complex-step differentiation."""
    cos_A, cos_C = dihedral_cosines(n, a, c)
    dcos_A, dcos_C = dihedral_cosines(n, complex(a, _COMPLEX_STEP), c)
    sin_A = math.sqrt(max(1.0 - float(cos_A) ** 2, 0.0))
    sin_C = math.sqrt(max(1.0 - float(cos_C) ** 2, 0.0))
    return (
        -np.imag(dcos_A) / _COMPLEX_STEP / sin_A,
        -np.imag(dcos_C) / _COMPLEX_STEP / sin_C,
    )


def schlafli_residual(
    spec: AntiprismSpec,
    step: Arc,
    cfg: QuadratureConfig = TIGHT_QUADRATURE,
) -> SchlafliResidual:
    """Residual |dV - n a dA - n c dC| / (2 step) for central differences in c and in a.

    Along c the volume difference is the integral of dV/dc over
    [c - step, c + step]; along a it is the difference of two full volume
    quadratures.
    """
    if not step > 0.0:
        raise DomainError("step must be positive")
    n, a, c = spec.n, spec.a, spec.c
    perturbed = {}
    for key, (da, dc) in {"c+": (0, 1), "c-": (0, -1), "a+": (1, 0), "a-": (-1, 0)}.items():
        try:
            p = AntiprismSpec(n, a + da * step, c + dc * step)
        except DomainError as exc:
            raise DomainError(f"perturbed spec {key} leaves the parameter range: {exc}") from exc
        m = existence_margins(p)
        if m.min() <= BOUNDARY_TOL or p.c <= c_lower_bound(n, p.a):
            raise DomainError(f"perturbed spec {p} is not strictly inside the existence region")
        perturbed[key] = p
    if not existence_margins(spec).min() > BOUNDARY_TOL:
        raise DomainError(f"{spec} is not strictly inside the existence region")

    angles = {key: dihedral_angles(p) for key, p in perturbed.items()}

    kernel = _AntiprismKernel(n, a)
    dV_c, _, _ = kernel.integrate(c - step, c + step, cfg)
    dA = angles["c+"].A - angles["c-"].A
    dC = angles["c+"].C - angles["c-"].C
    along_c = abs(dV_c - n * a * dA - n * c * dC) / (2.0 * step)

    dV_a = antiprism_volume(perturbed["a+"], cfg).value - antiprism_volume(perturbed["a-"], cfg).value
    dA = angles["a+"].A - angles["a-"].A
    dC = angles["a+"].C - angles["a-"].C
    along_a = abs(dV_a - n * a * dA - n * c * dC) / (2.0 * step)
    return SchlafliResidual(along_c=along_c, along_a=along_a, step=step)


# --------------------------------------------------------------------------
# regular tetrahedron and octahedron


def _volume(value_err_neval) -> VolumeEstimate:
    value, err, neval = value_err_neval
    return VolumeEstimate(value, err, "quadrature", neval)


def tetra_volume_by_edge(a: Arc, cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> VolumeEstimate:
    """Regular tetrahedron volume from its edge length, a in [0, arccos(-1/3)]."""
    if not 0.0 <= a <= TETRA_EDGE_MAX + CLAMP_TOL:
        raise DomainError(f"tetrahedron edge {a!r} must lie in [0, arccos(-1/3)]")
    a = min(a, TETRA_EDGE_MAX)
    tail = TETRA_EDGE_MAX - a

    def f(t, _dlo, dhi):
        ct = math.cos(t)
        # 1 + 3cos t, vanishing at the hemisphere edge arccos(-1/3)
        w = 6.0 * math.sin(0.5 * (TETRA_EDGE_MAX + t)) * math.sin(0.5 * (tail + dhi))
        return 3.0 * t * math.sin(t) / ((1.0 + 2.0 * ct) * math.sqrt((1.0 + ct) * w))

    return _volume(_integrate_mapped(f, 0.0, a, cfg))


def octa_volume_by_edge(a: Arc, cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> VolumeEstimate:
    """Regular octahedron volume from its edge length, a in [0, pi/2]."""
    if not 0.0 <= a <= OCTA_EDGE_MAX + CLAMP_TOL:
        raise DomainError(f"octahedron edge {a!r} must lie in [0, pi/2]")
    a = min(a, OCTA_EDGE_MAX)
    tail = OCTA_EDGE_MAX - a

    def f(t, _dlo, dhi):
        ct = math.sin(tail + dhi)
        return 6.0 * t * math.sin(t) / ((1.0 + 2.0 * ct) * math.sqrt(ct * (1.0 + ct)))

    return _volume(_integrate_mapped(f, 0.0, a, cfg))


def tetra_volume_by_angle(A: Angle, cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> VolumeEstimate:
    """Regular tetrahedron volume from its dihedral angle, A in [arccos(1/3), pi]."""
    if not TETRA_ANGLE_MIN - LIMIT_SNAP <= A <= math.pi:
        raise DomainError(f"tetrahedron dihedral angle {A!r} must lie in [arccos(1/3), pi]")
    A = max(A, TETRA_ANGLE_MIN)

    def f(phi, dlo, _dhi):
        # arccos(cos phi / (1 - 2 cos phi)) = 2 asin(sqrt((1 - x)/2))
        one_minus_x = (
            6.0 * math.sin(0.5 * (phi + TETRA_ANGLE_MIN)) * math.sin(0.5 * dlo) / (1.0 - 2.0 * math.cos(phi))
        )
        return 6.0 * math.asin(min(math.sqrt(0.5 * one_minus_x), 1.0))

    return _volume(_integrate_mapped(f, TETRA_ANGLE_MIN, A, cfg))


def octa_volume_by_angle(A: Angle, cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> VolumeEstimate:
    """Regular octahedron volume from its dihedral angle, A in [arccos(-1/3), pi]."""
    if not OCTA_ANGLE_MIN - LIMIT_SNAP <= A <= math.pi:
        raise DomainError(f"octahedron dihedral angle {A!r} must lie in [arccos(-1/3), pi]")
    A = max(A, OCTA_ANGLE_MIN)

    def f(phi, dlo, _dhi):
        # arccos(-(cos phi + 1)/(2 cos phi)) = 2 asin(sqrt((1 - x)/2))
        one_minus_x = -3.0 * math.sin(0.5 * (phi + OCTA_ANGLE_MIN)) * math.sin(0.5 * dlo) / math.cos(phi)
        return 12.0 * math.asin(min(math.sqrt(0.5 * one_minus_x), 1.0))

    return _volume(_integrate_mapped(f, OCTA_ANGLE_MIN, A, cfg))


# --------------------------------------------------------------------------
# existence-region grid


@dataclass(frozen=True)
class RegionSample:
    cos_a: float
    cos_c: float
    inside: bool
    m1: float
    m2: float
    m3: float
    volume: float | None


def region_grid(n: int, grid: int, cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> list[RegionSample]:
    """Sample the existence region on a grid x grid lattice of (cos a, cos c) in [-1, 1]^2.

    Rows run over cos a (outer) and cos c (inner); volume is None outside.
    """
    if grid < 2:
        raise DomainError("grid must be >= 2")
    cos_two = cos_two_pi_over(n)
    axis = np.linspace(-1.0, 1.0, grid)
    rows = []
    for cos_a in axis:
        cos_a = float(cos_a)
        for cos_c in axis:
            cos_c = float(cos_c)
            m = margins_from_cosines(n, cos_a, cos_c)
            volume = None
            if m.admissible:
                # admissible allows m3 down to -BOUNDARY_TOL
                a = math.acos(max(cos_a, cos_two))
                volume = antiprism_volume(AntiprismSpec(n, a, math.acos(cos_c)), cfg).value
            rows.append(RegionSample(cos_a, cos_c, m.admissible, m.m1, m.m2, m.m3, volume))
    return rows
