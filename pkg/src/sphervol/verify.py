"""Cross-checks of the closed-form results against the coordinate embedding."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .antiprism import AntiprismSpec, dihedral_angles
from .embedding import McConfig, build, measured_center_cosine, measured_dihedrals, monte_carlo_volume
from .volume import DEFAULT_QUADRATURE, QuadratureConfig, antiprism_volume, schlafli_residual

ANGLE_TOL = 1e-9
CENTER_TOL = 1e-12
Z_SCORE_MAX = 4.0
SCHLAFLI_TOL = 1e-7


@dataclass(frozen=True)
class Check:
    name: str
    value: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.value <= self.tolerance


@dataclass(frozen=True)
class VerificationReport:
    spec: AntiprismSpec
    quadrature_volume: float
    quadrature_error: float
    mc_volume: float
    mc_sigma: float
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_spec(
    spec: AntiprismSpec,
    samples: int = 1_000_000,
    seed: int = 0,
    workers: int = 1,
    step: float = 1e-4,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> VerificationReport:
    poly = build(spec)
    formula = dihedral_angles(spec)
    measured = measured_dihedrals(poly)
    quad = antiprism_volume(spec, cfg)
    mc = monte_carlo_volume(poly, McConfig(samples, seed), workers)
    z = abs(mc.value - quad.value) / mc.error_bound if mc.error_bound > 0 else math.inf
    residual = schlafli_residual(spec, step)
    checks = (
        Check("dihedral_A_diff", abs(formula.A - measured.A), ANGLE_TOL),
        Check("dihedral_C_diff", abs(formula.C - measured.C), ANGLE_TOL),
        Check("cos_d_diff", abs(poly.frame.cos_d - measured_center_cosine(poly)), CENTER_TOL),
        Check("mc_z_score", z, Z_SCORE_MAX),
        Check("schlafli_residual_c", residual.along_c, SCHLAFLI_TOL),
        Check("schlafli_residual_a", residual.along_a, SCHLAFLI_TOL),
    )
    return VerificationReport(
        spec=spec,
        quadrature_volume=quad.value,
        quadrature_error=quad.error_bound,
        mc_volume=mc.value,
        mc_sigma=mc.error_bound,
        checks=checks,
    )
