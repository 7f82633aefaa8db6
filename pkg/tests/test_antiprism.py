import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grids import a_upper, interior_grid
from sphervol.antiprism import (
    OCTA_ANGLE_MIN,
    OCTA_EDGE_MAX,
    TETRA_ANGLE_MIN,
    TETRA_EDGE_MAX,
    AntiprismSpec,
    c_lower_bound,
    c_upper_bound,
    center_distance,
    circumradius,
    dihedral_angles,
    existence_margins,
    exists,
    face_angles,
    on_degenerate_boundary,
    octa_angle_from_edge,
    octa_edge_from_angle,
    require_exists,
    tetra_angle_from_edge,
    tetra_edge_from_angle,
)
from sphervol.errors import DomainError, RegionError
from sphervol.spherical_trig import TrapezoidShape, regular_ngon_half_angle, trapezoid_angles


def test_spec_validation():
    with pytest.raises(DomainError):
        AntiprismSpec(1, 0.5, 0.5)
    with pytest.raises(DomainError):
        AntiprismSpec(3, -0.1, 0.5)
    with pytest.raises(DomainError):
        AntiprismSpec(3, 0.5, 4.0)
    assert AntiprismSpec(3.0, 1, 1).n == 3


def test_margins_example():
    m = existence_margins(AntiprismSpec(3, 0.1, 0.1))
    assert m.m1 == pytest.approx(0.00999, abs=1e-5)
    assert m.m2 == pytest.approx(1.99, abs=5e-3)
    assert m.m3 == pytest.approx(1.495, abs=1e-3)
    assert m.admissible and m.violated() == []


def test_exists_examples():
    assert not exists(AntiprismSpec(5, 2 * math.pi / 5 + 0.01, 1.0))
    assert "m3" in existence_margins(AntiprismSpec(5, 2 * math.pi / 5 + 0.01, 1.0)).violated()
    assert exists(AntiprismSpec(3, 0.7, c_lower_bound(3, 0.7)))
    m = existence_margins(AntiprismSpec(2, math.pi / 2, math.pi / 2))
    assert (m.m1, m.m2, m.m3) == pytest.approx((1.0, 1.0, 1.0), abs=1e-15)


def test_require_exists_carries_margins():
    with pytest.raises(RegionError) as info:
        require_exists(AntiprismSpec(3, 0.5, 0.05))
    assert info.value.margins.m1 < 0
    assert "m1" in str(info.value)


def test_degenerate_boundary_classification():
    assert on_degenerate_boundary(AntiprismSpec(4, 0.6, c_lower_bound(4, 0.6)))
    assert on_degenerate_boundary(AntiprismSpec(4, 0.0, 0.3))
    assert on_degenerate_boundary(AntiprismSpec(4, math.pi / 2, 1.0))
    # the m2 = 0 edge is a boundary of the region but not a zero-volume one
    assert not on_degenerate_boundary(AntiprismSpec(4, 0.6, c_upper_bound(4, 0.6)))
    assert not on_degenerate_boundary(AntiprismSpec(4, 0.6, 0.9))


def test_circumradius_examples():
    # a = 2pi/n puts the polygon on a great circle; cos R goes like sqrt of float noise there
    assert circumradius(4, math.pi / 2) == pytest.approx(math.pi / 2, abs=1e-7)
    assert circumradius(5, 2 * math.pi / 5) == pytest.approx(math.pi / 2, abs=1e-7)
    # square with side pi/3: cos^2 R = cos a / 1
    assert math.cos(circumradius(4, math.pi / 3)) ** 2 == pytest.approx(0.5, abs=1e-15)
    assert circumradius(3, 1e-8) == pytest.approx(1e-8 / math.sqrt(3), rel=1e-6)
    with pytest.raises(DomainError):
        circumradius(6, 1.5)


def test_c_lower_bound_examples():
    assert c_lower_bound(3, 0.0) == 0.0
    assert c_lower_bound(2, math.pi / 2) == pytest.approx(math.pi / 3, abs=1e-15)
    for n in range(2, 9):
        a = 0.5 * a_upper(n)
        assert existence_margins(AntiprismSpec(n, a, c_lower_bound(n, a))).m1 == pytest.approx(0, abs=1e-14)
        assert existence_margins(AntiprismSpec(n, a, c_upper_bound(n, a))).m2 == pytest.approx(0, abs=1e-14)


def test_center_distance_vanishes_at_c0():
    for n, a in ((2, 1.0), (3, 0.5), (7, 0.6)):
        frame = center_distance(AntiprismSpec(n, a, c_lower_bound(n, a)))
        assert frame.cos_d == pytest.approx(1.0, abs=1e-14)
        assert frame.d == pytest.approx(0.0, abs=1e-7)


def test_center_distance_euclidean_octahedron():
    a = 1e-4
    frame = center_distance(AntiprismSpec(3, a, a))
    assert frame.d / a == pytest.approx(math.sqrt(2 / 3), rel=1e-6)


def test_pole_angle_equals_center_distance():
    for n in range(2, 9):
        for spec in interior_grid(n)[::7]:
            frame = center_distance(spec)
            assert frame.Psi == pytest.approx(frame.d, abs=1e-9)


def test_dihedral_corollaries():
    for a in np.linspace(0.1, 1.4, 8):
        d = dihedral_angles(AntiprismSpec(3, a, a))
        target = -1 / (1 + 2 * math.cos(a))
        assert math.cos(d.A) == pytest.approx(target, abs=1e-13)
        assert math.cos(d.C) == pytest.approx(target, abs=1e-13)
    for a in np.linspace(0.1, 1.8, 8):
        d = dihedral_angles(AntiprismSpec(2, a, a))
        tetra = math.cos(a) / (1 + 2 * math.cos(a))
        assert math.cos(d.C) == pytest.approx(tetra, abs=1e-13)
        assert math.cos(2 * d.A - math.pi) == pytest.approx(tetra, abs=1e-13)


def test_dihedral_outside_region_raises():
    with pytest.raises(RegionError):
        dihedral_angles(AntiprismSpec(3, 0.5, 0.05))
    with pytest.raises(DomainError):
        dihedral_angles(AntiprismSpec(4, math.pi / 2, 1.0))


def test_face_angles_compose_into_vertex_figure():
    # the link of a vertex is the trapezoid with sides x, y, z, y and angles A, C
    for n in (3, 4, 6):
        for spec in interior_grid(n)[::9]:
            f = face_angles(spec)
            A, C = trapezoid_angles(TrapezoidShape(f.x, f.y, f.z))
            d = dihedral_angles(spec)
            assert A == pytest.approx(d.A, abs=1e-9)
            assert C == pytest.approx(d.C, abs=1e-9)


def test_two_gon_half_angle():
    # the 2-gon has interior angle 0 for every admissible a
    for a in (0.2, 1.3, 3.0):
        assert regular_ngon_half_angle(2, a) == pytest.approx((1.0, 0.0), abs=1e-15)


def test_tetra_relations():
    assert tetra_angle_from_edge(math.pi / 2) == pytest.approx(math.pi / 2, abs=1e-15)
    assert tetra_angle_from_edge(1e-9) == pytest.approx(TETRA_ANGLE_MIN, abs=1e-8)
    assert tetra_edge_from_angle(TETRA_ANGLE_MIN) == 0.0
    assert tetra_edge_from_angle(math.pi / 2) == pytest.approx(math.pi / 2, abs=1e-15)
    assert tetra_edge_from_angle(2 * math.pi / 3) == pytest.approx(math.acos(-1 / 4), abs=1e-14)
    with pytest.raises(DomainError):
        tetra_angle_from_edge(TETRA_EDGE_MAX + 1e-6)
    with pytest.raises(DomainError):
        tetra_edge_from_angle(1.0)


def test_octa_relations():
    assert octa_angle_from_edge(1e-9) == pytest.approx(OCTA_ANGLE_MIN, abs=1e-8)
    # pi/2 in floats sits 6e-17 short of the true value, so A lands 1e-8 short of pi
    assert octa_angle_from_edge(OCTA_EDGE_MAX) == pytest.approx(math.pi, abs=1e-7)
    assert octa_edge_from_angle(OCTA_ANGLE_MIN) == 0.0
    assert octa_edge_from_angle(math.pi) == pytest.approx(math.pi / 2, abs=1e-15)
    with pytest.raises(DomainError):
        octa_angle_from_edge(1.6)


def test_limit_snap_accepts_eight_digit_angles():
    assert tetra_edge_from_angle(1.23095941) == 0.0
    with pytest.raises(DomainError):
        tetra_edge_from_angle(TETRA_ANGLE_MIN - 1e-6)


def round_trip_tol(a):
    # dA/da ~ a/8 near a = 0, so one ulp of A costs about 1e-15/a in the edge
    return 1e-13 + 1e-14 / a


@settings(max_examples=200, deadline=None)
@given(a=st.floats(1e-6, TETRA_EDGE_MAX - 1e-6))
def test_tetra_round_trip(a):
    assert tetra_edge_from_angle(tetra_angle_from_edge(a)) == pytest.approx(a, abs=round_trip_tol(a))


@settings(max_examples=200, deadline=None)
@given(a=st.floats(1e-6, OCTA_EDGE_MAX - 1e-6))
def test_octa_round_trip(a):
    assert octa_edge_from_angle(octa_angle_from_edge(a)) == pytest.approx(a, abs=round_trip_tol(a))


@settings(max_examples=200, deadline=None)
@given(n=st.integers(2, 12), a=st.floats(0.0, math.pi))
def test_equal_edges_first_margin_factorises(n, a):
    m = existence_margins(AntiprismSpec(n, a, a))
    k = math.cos(math.pi / n)
    assert m.m1 == pytest.approx((1 - math.cos(a)) * (1 + 2 * k), abs=1e-14)
    assert m.m1 >= -1e-15


def test_equal_edge_octahedron_bound():
    for a in np.linspace(0.05, math.pi - 0.05, 30):
        m = existence_margins(AntiprismSpec(3, a, a))
        assert m.m2 == pytest.approx(2 * math.cos(a), abs=1e-15)
        assert exists(AntiprismSpec(3, a, a)) == (a <= math.pi / 2)
