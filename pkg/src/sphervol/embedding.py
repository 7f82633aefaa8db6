"""Explicit coordinates for A_n(a, c) on the unit 3-sphere in R^4.

The antiprism is realised as the intersection of S^3 with a convex cone cut
out by its face half-spaces.  Edge lengths, dihedral angles and the vertex
figure are then measured directly from coordinates, and the volume is
estimated by uniform sampling of S^3.  Nothing here uses the dihedral-angle
or volume formulas, so the results serve as an independent check on them.

Coordinates: the symmetry axis is the great circle in the (x3, x4) plane.
Top vertices sit at angle theta_k = 2 pi k / n in the (x1, x2) plane and at
+d/2 along the axis; bottom vertices at theta_k + pi/n and -d/2.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .antiprism import (
    BOUNDARY_TOL,
    AntiprismSpec,
    DihedralAngles,
    EmbeddingFrame,
    center_distance,
    existence_margins,
    on_degenerate_boundary,
)
from .errors import DegeneracyError, DomainError, IncidenceError, InconsistencyError
from .volume import S3_VOLUME, VolumeEstimate

CONTAINMENT_TOL = 1e-12
RANK_TOL = 1e-10
SHARD_SIZE = 1 << 20


@dataclass(frozen=True)
class Face:
    vertices: tuple[int, ...]
    kind: str  # "cap" (an n-gon face) or "lateral"
    normal: np.ndarray | None = field(default=None, compare=False)


@dataclass(frozen=True)
class EmbeddedPolytope:
    spec: AntiprismSpec
    frame: EmbeddingFrame
    vertices: np.ndarray  # (2n, 4): top ring then bottom ring
    faces: tuple[Face, ...]

    @property
    def n(self) -> int:
        return self.spec.n

    def top(self, k: int) -> int:
        return k % self.n

    def bottom(self, k: int) -> int:
        return self.n + k % self.n

    @property
    def normals(self) -> np.ndarray:
        if any(f.normal is None for f in self.faces):
            raise IncidenceError("face normals are not populated; call face_halfspaces first")
        return np.array([f.normal for f in self.faces])


@dataclass(frozen=True)
class McConfig:
    samples: int
    seed: int = 0

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class VertexFigure:
    """Link of a vertex: sides x (n-gon angle), y and y_opposite (lateral), z, and its angles."""

    x: float
    y: float
    y_opposite: float
    z: float
    A: float
    C: float


def _angle_between(u: np.ndarray, v: np.ndarray) -> float:
    """Angle between two unit vectors, accurate near 0 and pi."""
    return 2.0 * math.atan2(np.linalg.norm(u - v), np.linalg.norm(u + v))


def embed(spec: AntiprismSpec) -> EmbeddedPolytope:
    """Vertices of A_n(a, c) on S^3, with face combinatorics but no normals yet."""
    margins = existence_margins(spec)
    if margins.min() <= BOUNDARY_TOL or on_degenerate_boundary(spec, margins):
        raise DomainError(f"{spec} is not strictly inside the existence region")
    frame = center_distance(spec)
    n = spec.n
    sR, cR = math.sin(frame.R_circ), math.cos(frame.R_circ)
    half = 0.5 * frame.d
    verts = np.empty((2 * n, 4))
    for k in range(n):
        th = 2.0 * math.pi * k / n
        verts[k] = (sR * math.cos(th), sR * math.sin(th), cR * math.cos(half), cR * math.sin(half))
        th += math.pi / n
        verts[n + k] = (sR * math.cos(th), sR * math.sin(th), cR * math.cos(half), -cR * math.sin(half))

    faces = [Face(tuple(range(n)), "cap"), Face(tuple(range(n, 2 * n)), "cap")]
    for k in range(n):
        faces.append(Face((k, (k + 1) % n, n + k), "lateral"))
        faces.append(Face((n + k, n + (k + 1) % n, (k + 1) % n), "lateral"))
    return EmbeddedPolytope(spec=spec, frame=frame, vertices=verts, faces=tuple(faces))


def _null_vector(points: np.ndarray) -> tuple[np.ndarray, int]:
    """Unit vector orthogonal to the span of ``points`` and the numerical rank of that span."""
    _, s, vt = np.linalg.svd(points, full_matrices=True)
    rank = int(np.sum(s > RANK_TOL * s[0]))
    return vt[-1], rank


def _orient(normal: np.ndarray, vertices: np.ndarray) -> np.ndarray:
    centroid = vertices.sum(axis=0)
    return -normal if normal @ centroid < 0 else normal


def face_halfspaces(poly: EmbeddedPolytope) -> EmbeddedPolytope:
    """Attach inward unit normals to every non-degenerate face.

    Two-vertex faces (the 2-gons of n = 2) span only a plane and are dropped.
    Raises InconsistencyError if any vertex falls outside a half-space.
    """
    faces = []
    for face in poly.faces:
        normal, rank = _null_vector(poly.vertices[list(face.vertices)])
        if len(face.vertices) == 2 and rank == 2:
            continue
        if rank != 3:
            raise DegeneracyError(f"face {face.vertices} spans rank {rank}, expected 3")
        faces.append(replace(face, normal=_orient(normal, poly.vertices)))
    out = replace(poly, faces=tuple(faces))
    slack = (poly.vertices @ out.normals.T).min()
    if slack < -CONTAINMENT_TOL:
        raise InconsistencyError(f"vertex outside a face half-space by {-slack:.3g}: polytope is not convex")
    return out


def build(spec: AntiprismSpec) -> EmbeddedPolytope:
    return face_halfspaces(embed(spec))


def mirror_rotation(n: int) -> np.ndarray:
    """Generator of the S_2n symmetry: rotate by pi/n in (x1, x2), negate x4."""
    c, s = math.cos(math.pi / n), math.sin(math.pi / n)
    return np.array([[c, -s, 0, 0], [s, c, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1.0]])


def face_center(poly: EmbeddedPolytope, ring: str) -> np.ndarray:
    idx = range(poly.n) if ring == "top" else range(poly.n, 2 * poly.n)
    v = poly.vertices[list(idx)].sum(axis=0)
    return v / np.linalg.norm(v)


def _cap_normal(poly: EmbeddedPolytope, ring: str) -> np.ndarray:
    """Inward normal of the great 2-sphere carrying the n-gon face.

    The ring is padded with a quarter-turn image of its first vertex, another
    point of the circumscribed circle.  This keeps the span 3-dimensional when
    n = 2, where the face is a degenerate 2-gon; its plane then supports the
    tetrahedron along the a-edge.
    """
    idx = list(range(poly.n)) if ring == "top" else list(range(poly.n, 2 * poly.n))
    first = poly.vertices[idx[0]]
    quarter = np.array([-first[1], first[0], first[2], first[3]])
    normal, rank = _null_vector(np.vstack([poly.vertices[idx], quarter]))
    if rank != 3:
        raise DegeneracyError(f"{ring} cap spans rank {rank}")
    return _orient(normal, poly.vertices)


def _lateral_normals(poly: EmbeddedPolytope, i: int, j: int) -> list[np.ndarray]:
    return [
        f.normal
        for f in poly.faces
        if f.kind == "lateral" and i in f.vertices and j in f.vertices and f.normal is not None
    ]


def _dihedral(n1: np.ndarray, n2: np.ndarray) -> float:
    return math.pi - _angle_between(n1, n2)


def _a_edge_angle(poly: EmbeddedPolytope, i: int, j: int, ring: str) -> float:
    lateral = _lateral_normals(poly, i, j)
    # n >= 3: one lateral triangle; n = 2: the two triangles sharing the edge
    if not lateral or len(lateral) > 2:
        raise IncidenceError(f"a-edge ({i}, {j}) has {len(lateral)} lateral faces")
    cap = _cap_normal(poly, ring)
    angles = [_dihedral(cap, nl) for nl in lateral]
    if len(angles) == 2 and abs(angles[0] - angles[1]) > 1e-12:
        raise InconsistencyError("the two lateral faces on a 2-gon edge meet its cap at different angles")
    return angles[0]


def _c_edge_angle(poly: EmbeddedPolytope, i: int, j: int) -> float:
    lateral = _lateral_normals(poly, i, j)
    if len(lateral) != 2:
        raise IncidenceError(f"c-edge ({i}, {j}) has {len(lateral)} incident faces, expected 2")
    return _dihedral(*lateral)


def measured_dihedrals(poly: EmbeddedPolytope) -> DihedralAngles:
    """Dihedral angles A and C measured from face normals.

    A is measured between the n-gon face (its supporting plane when n = 2)
    and the lateral triangle on an a-edge.  Every a-edge and every c-edge is
    measured and required to agree within 1e-12.
    """
    n = poly.n
    a_angles = []
    c_angles = []
    top_edges = [(k, (k + 1) % n) for k in range(n)] if n > 2 else [(0, 1)]
    for i, j in top_edges:
        a_angles.append(_a_edge_angle(poly, i, j, "top"))
        a_angles.append(_a_edge_angle(poly, n + i, n + j, "bottom"))
    for k in range(n):
        c_angles.append(_c_edge_angle(poly, poly.top(k), poly.bottom(k)))
        c_angles.append(_c_edge_angle(poly, poly.top(k + 1), poly.bottom(k)))
    for name, vals in (("A", a_angles), ("C", c_angles)):
        if max(vals) - min(vals) > 1e-12:
            raise InconsistencyError(f"measured {name} varies across symmetric edges by {max(vals) - min(vals):.3g}")
    return DihedralAngles(A=a_angles[0], C=c_angles[0])


def measured_center_cosine(poly: EmbeddedPolytope) -> float:
    return float(face_center(poly, "top") @ face_center(poly, "bottom"))


def measured_edges(poly: EmbeddedPolytope) -> tuple[float, float]:
    """(a, c) measured as geodesic distances between adjacent vertices."""
    v = poly.vertices
    a = _angle_between(v[poly.top(0)], v[poly.top(1)])
    c = _angle_between(v[poly.top(0)], v[poly.bottom(0)])
    return a, c


def _tangent(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Unit tangent at p of the geodesic towards q."""
    t = q - (p @ q) * p
    return t / np.linalg.norm(t)


def vertex_figure_trapezoid(poly: EmbeddedPolytope) -> VertexFigure:
    """Measure the link of the top vertex 0.

    The link is a quadrilateral on the unit sphere of directions at the vertex,
    with corners at the directions of the four incident edges (two a-edges,
    two c-edges).  For n = 2 the two a-edges coincide, the base x collapses to
    0, and A is recovered from the link angle D there as (pi + D)/2.
    """
    v = poly.vertices
    n = poly.n
    p = v[poly.top(0)]
    tl = _tangent(p, v[poly.top(n - 1)])
    tr = _tangent(p, v[poly.top(1)])
    br = _tangent(p, v[poly.bottom(0)])
    bl = _tangent(p, v[poly.bottom(n - 1)])

    x = _angle_between(tl, tr)
    y = _angle_between(tr, br)
    z = _angle_between(br, bl)
    y_opp = _angle_between(bl, tl)

    def corner(at, q1, q2):
        # the link lives on the unit sphere in the tangent space at p
        return _angle_between(_tangent(at, q1), _tangent(at, q2))

    if n == 2:
        A = 0.5 * (math.pi + corner(tr, br, bl))
    else:
        A = corner(tr, tl, br)
    C = corner(br, tr, bl)
    return VertexFigure(x=x, y=y, y_opposite=y_opp, z=z, A=A, C=C)


def _shard_hits(normals: np.ndarray, seed: int, shard: int, count: int) -> int:
    rng = np.random.Generator(np.random.Philox(key=(shard << 64) | seed))
    pts = rng.standard_normal((count, 4))
    # membership in a cone is scale invariant, so the normalisation to S^3 is skipped
    inside = np.ones(count, dtype=bool)
    for normal in normals:
        inside &= pts @ normal >= 0.0
    return int(np.count_nonzero(inside))


def monte_carlo_cone_volume(normals: np.ndarray, cfg: McConfig, workers: int = 1) -> VolumeEstimate:
    """Volume of {x in S^3 : normal_f . x >= 0 for all f} by uniform sampling.

    Samples are split into fixed-size shards; shard i draws from a Philox
    stream keyed by (i, seed), so the hit count does not depend on
    ``workers``.
    """
    normals = np.atleast_2d(np.asarray(normals, dtype=float))
    shards = [(i, min(SHARD_SIZE, cfg.samples - i * SHARD_SIZE)) for i in range(-(-cfg.samples // SHARD_SIZE))]
    if workers <= 1:
        hits = sum(_shard_hits(normals, cfg.seed, i, m) for i, m in shards)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = sum(pool.map(lambda s: _shard_hits(normals, cfg.seed, *s), shards))
    p = hits / cfg.samples
    return VolumeEstimate(
        value=S3_VOLUME * p,
        error_bound=S3_VOLUME * math.sqrt(p * (1.0 - p) / cfg.samples),
        method="monte-carlo",
        evaluations=cfg.samples,
    )


def monte_carlo_volume(poly: EmbeddedPolytope, cfg: McConfig, workers: int = 1) -> VolumeEstimate:
    return monte_carlo_cone_volume(poly.normals, cfg, workers)
