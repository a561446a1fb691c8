"""Planar bar-and-joint frameworks and their line arrangements.

A framework is a graph with a rational placement of its vertices.  The
rigidity matrix has a row per edge and two columns per vertex; its kernel is
the space of infinitesimal motions.  Extending the bars to projective lines
gives an arrangement, and rotating the velocity vectors of a motion by 90
degrees gives a parallel redrawing of the framework.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from arrform.arrangement import Arrangement, LinearForm, flats_of_rank, is_essential
from arrform.errors import (
    CoincidentLinesError,
    DimensionMismatchError,
    InputError,
    PreconditionError,
)
from arrform.exactlin import Matrix, SubspaceBasis, Vector, kernel_basis, rat, vector
from arrform.persp import wprep_report

_ZERO = Fraction(0)

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]]):
        norm = []
        for e in edges:
            i, j = int(e[0]), int(e[1])
            if i == j:
                raise InputError("loops are not allowed")
            if not (0 <= i < vertex_count and 0 <= j < vertex_count):
                raise InputError("edge endpoint out of range")
            norm.append((min(i, j), max(i, j)))
        if len(set(norm)) != len(norm):
            raise InputError("duplicate edges are not allowed")
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(norm))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


@dataclass(frozen=True)
class Framework:
    graph: Graph
    placement: tuple[Point, ...]

    def __init__(self, graph: Graph, placement: Iterable[Sequence], allow_degenerate: bool = False):
        pts = tuple((rat(p[0]), rat(p[1])) for p in placement)
        if len(pts) != graph.vertex_count:
            raise DimensionMismatchError("one point per vertex required")
        if not allow_degenerate:
            for i, j in graph.edges:
                if pts[i] == pts[j]:
                    raise InputError(f"edge ({i},{j}) has coincident endpoints")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "placement", pts)

    def degenerate_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, j) for i, j in self.graph.edges if self.placement[i] == self.placement[j]
        )

    def to_json(self) -> dict:
        return {
            "vertices": [[str(x), str(y)] for x, y in self.placement],
            "edges": [list(e) for e in self.graph.edges],
        }

    @classmethod
    def from_json(cls, payload: dict | str) -> "Framework":
        if isinstance(payload, str):
            payload = json.loads(payload)
        try:
            pts = [(rat(v[0]), rat(v[1])) for v in payload["vertices"]]
            edges = [tuple(e) for e in payload["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad framework payload: {exc}") from exc
        return cls(Graph(len(pts), edges), pts)


def rigidity_matrix(framework: Framework) -> Matrix:
    """One row per edge ij: p_i - p_j in the columns of i, the negative in
    the columns of j."""
    pts = framework.placement
    nv = framework.graph.vertex_count
    rows = []
    for i, j in framework.graph.edges:
        dx = pts[i][0] - pts[j][0]
        dy = pts[i][1] - pts[j][1]
        row = [_ZERO] * (2 * nv)
        row[2 * i] = dx
        row[2 * i + 1] = dy
        row[2 * j] = -dx
        row[2 * j + 1] = -dy
        rows.append(row)
    return Matrix(rows, cols=2 * nv)


@dataclass(frozen=True)
class MotionSpace:
    basis: SubspaceBasis
    dim_trivial: int
    dim_nontrivial: int


def trivial_motion_dim(framework: Framework) -> int:
    """3 once two placed points differ (two translations and a rotation),
    else 2: the rotation about a fully collapsed placement is a translation."""
    return 3 if len(set(framework.placement)) >= 2 else 2


def motion_space(framework: Framework) -> MotionSpace:
    kernel = kernel_basis(rigidity_matrix(framework))
    trivial = trivial_motion_dim(framework)
    return MotionSpace(
        basis=kernel,
        dim_trivial=trivial,
        dim_nontrivial=kernel.dim - trivial,
    )


def trivial_motions(framework: Framework) -> list[Vector]:
    """Two translations plus the rotation field v_i = p_i rotated 90 degrees."""
    nv = framework.graph.vertex_count
    tx = [Fraction(1), Fraction(0)] * nv
    ty = [Fraction(0), Fraction(1)] * nv
    rot: list[Fraction] = []
    for x, y in framework.placement:
        rot.extend((-y, x))
    return [tuple(tx), tuple(ty), tuple(rot)]


def edge_line(p: Point, q: Point) -> LinearForm:
    """Projective line through two distinct affine points (a,b) and (c,d):
    (b-d) x + (c-a) y + (ad-bc) z."""
    (a, b), (c, d) = p, q
    return LinearForm((b - d, c - a, a * d - b * c))


def arrangement_of(framework: Framework) -> Arrangement:
    forms = []
    for i, j in framework.graph.edges:
        forms.append(edge_line(framework.placement[i], framework.placement[j]))
    if len(set(forms)) != len(forms):
        raise CoincidentLinesError("two edges span the same line")
    return Arrangement(forms, ambient=3)


def has_generic_matroid(framework: Framework) -> bool:
    """True when the only concurrences among the edge lines are the stars of
    vertices of degree at least 3, and the arrangement is essential."""
    arr = arrangement_of(framework)
    if not is_essential(arr):
        return False
    stars = set()
    for v in range(framework.graph.vertex_count):
        star = frozenset(
            idx for idx, e in enumerate(framework.graph.edges) if v in e
        )
        if len(star) >= 3:
            stars.add(star)
    big_flats = {
        frozenset(f.indices) for f in flats_of_rank(arr, 2) if f.size >= 3
    }
    return big_flats == stars


def engineers_trick(framework: Framework, motion: Sequence) -> Framework:
    """Translate each vertex along its velocity vector rotated 90 degrees
    clockwise; corresponding edges of the result are parallel to the
    original ones.  Edges may collapse; the returned framework flags them."""
    v = vector(motion)
    nv = framework.graph.vertex_count
    if len(v) != 2 * nv:
        raise DimensionMismatchError("motion vector has wrong length")
    residual = rigidity_matrix(framework).mul_vector(v)
    if any(x != 0 for x in residual):
        raise PreconditionError("vector is not an infinitesimal motion")
    moved = []
    for i, (x, y) in enumerate(framework.placement):
        vx, vy = v[2 * i], v[2 * i + 1]
        moved.append((x + vy, y - vx))
    return Framework(framework.graph, moved, allow_degenerate=True)


def edges_parallel(f: Framework, g: Framework) -> bool:
    """Exact cross-product test of edge directions, edge by edge."""
    for i, j in f.graph.edges:
        du = (
            f.placement[i][0] - f.placement[j][0],
            f.placement[i][1] - f.placement[j][1],
        )
        dv = (
            g.placement[i][0] - g.placement[j][0],
            g.placement[i][1] - g.placement[j][1],
        )
        if du[0] * dv[1] - du[1] * dv[0] != 0:
            return False
    return True


@dataclass(frozen=True)
class CorrespondenceReport:
    motion_nontrivial: int
    wprep_nontrivial: int
    agree: bool

    def to_json(self) -> dict:
        return {
            "motion_nontrivial": self.motion_nontrivial,
            "wprep_nontrivial": self.wprep_nontrivial,
            "agree": self.agree,
        }


def correspondence_check(framework: Framework) -> CorrespondenceReport:
    """Compare nontrivial motions with nontrivial rank-3 representations of
    the edge-line arrangement.  Only claimed for generic-matroid frameworks."""
    if not has_generic_matroid(framework):
        raise PreconditionError(
            "framework does not realize the generic matroid of its graph"
        )
    motions = motion_space(framework)
    reps = wprep_report(arrangement_of(framework), 3)
    return CorrespondenceReport(
        motion_nontrivial=motions.dim_nontrivial,
        wprep_nontrivial=reps.dim_nontrivial,
        agree=motions.dim_nontrivial == reps.dim_nontrivial,
    )
