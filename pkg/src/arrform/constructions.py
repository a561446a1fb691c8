"""Deterministic generators for the named arrangements and frameworks used
throughout the test corpus: reflection-style line arrangements, pencils with
general lines added, complete bipartite frameworks on a conic and off it,
the prism, rings of quadrilaterals, and edge-glued bipartite chains.

Generic placements draw fixed pseudo-random rational coordinates from a
seeded generator and are then verified exactly (matroid shape, rigidity,
conic membership); on verification failure the seed is bumped, a bounded
number of times.  Genericity is certified, never assumed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from arrform.arrangement import (
    Arrangement,
    LinearForm,
    flats_of_rank,
    form_combination,
    rank,
)
from arrform.errors import CoincidentLinesError, InputError, PreconditionError
from arrform.exactlin import Matrix, kernel_vectors, rank as matrix_rank, rat
from arrform.persp import wprep_report
from arrform.rigidity import (
    Framework,
    Graph,
    arrangement_of,
    has_generic_matroid,
    motion_space,
)

_MAX_SEED_RETRIES = 24


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    params: dict
    payload: Arrangement | Framework
    expectations: dict = field(default_factory=dict)

    @property
    def arrangement(self) -> Arrangement:
        if isinstance(self.payload, Framework):
            return arrangement_of(self.payload)
        return self.payload

    @property
    def framework(self) -> Framework | None:
        return self.payload if isinstance(self.payload, Framework) else None


# ---------------------------------------------------------------------------
# line arrangements given by explicit forms


def d3_arrangement() -> Arrangement:
    # x-y, x+y, x-z, x+z, y-z, y+z
    return Arrangement(
        [
            [1, -1, 0],
            [1, 1, 0],
            [1, 0, -1],
            [1, 0, 1],
            [0, 1, -1],
            [0, 1, 1],
        ]
    )


def a3_arrangement() -> Arrangement:
    # x, y, z, x-y, x-z, y-z
    return Arrangement(
        [
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, -1, 0],
            [1, 0, -1],
            [0, 1, -1],
        ]
    )


def coordinate_triangle() -> Arrangement:
    return Arrangement([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def pencil(k: int) -> Arrangement:
    """k lines through the point x = y = 0."""
    if k < 2:
        raise InputError("a pencil needs at least two lines")
    forms = [[1, 0, 0], [0, 1, 0]]
    forms += [[1, j, 0] for j in range(1, k - 1)]
    return Arrangement(forms)


def add_general_line(arrangement: Arrangement) -> Arrangement:
    """Append a line through no intersection point of the arrangement."""
    from arrform.arrangement import general_position_form

    h = general_position_form(arrangement, 2)
    return Arrangement([f.coefficients for f in arrangement.forms] + [h.coefficients])


def pencil_plus(k: int, general: int) -> Arrangement:
    arr = pencil(k)
    for _ in range(general):
        arr = add_general_line(arr)
    return arr


def _flat_point(arrangement: Arrangement, indices: Sequence[int]) -> tuple:
    """Projective point where the listed lines meet."""
    vecs = kernel_vectors(
        Matrix([arrangement.forms[i].coefficients for i in indices])
    )
    if len(vecs) != 1:
        raise PreconditionError("flat does not determine a point")
    return vecs[0]


def add_line_through_flat(arrangement: Arrangement, flat_indices: Sequence[int]) -> Arrangement:
    """Append a new line through the given rank-2 flat's point and through no
    other intersection point of the arrangement."""
    points = []
    target = tuple(sorted(flat_indices))
    for f in flats_of_rank(arrangement, 2):
        if f.indices != target:
            points.append(_flat_point(arrangement, f.indices))
    u = arrangement.forms[target[0]]
    v = arrangement.forms[target[1]]
    c = 0
    while True:
        candidate = form_combination(u, c, v)
        c += 1
        if candidate in arrangement.forms:
            continue
        if any(candidate.evaluate(p) == 0 for p in points):
            continue
        return Arrangement(
            [f.coefficients for f in arrangement.forms] + [candidate.coefficients]
        )


# ---------------------------------------------------------------------------
# frameworks


def complete_bipartite(s: int, t: int) -> Graph:
    return Graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def dixon_framework(xs: Sequence = (1, 2, 5), ys: Sequence = (1, 3, 9)) -> Framework:
    """K_{s,t} with one vertex class on the x axis and the other on the y
    axis, so the joints lie on the degenerate conic xy = 0.  All bar slopes
    must come out pairwise distinct."""
    xs = [rat(x) for x in xs]
    ys = [rat(y) for y in ys]
    if 0 in xs or 0 in ys or len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        raise InputError("axis coordinates must be nonzero and distinct")
    slopes = {y / x for x in xs for y in ys}
    if len(slopes) != len(xs) * len(ys):
        raise InputError("axis coordinates produce parallel bars")
    pts = [(x, rat(0)) for x in xs] + [(rat(0), y) for y in ys]
    return Framework(complete_bipartite(len(xs), len(ys)), pts)


def parabola_k33(ts: Sequence, off_conic: int | None = None) -> Framework:
    """K_{3,3} with joints (t, t^2); with ``off_conic`` = vertex index, that
    joint is lifted one unit off the parabola."""
    ts = [rat(t) for t in ts]
    if len(ts) != 6 or len(set(ts)) != 6:
        raise InputError("six distinct parameters required")
    pts = [(t, t * t) for t in ts]
    if off_conic is not None:
        x, y = pts[off_conic]
        pts[off_conic] = (x, y + 1)
    return Framework(complete_bipartite(3, 3), pts)


def on_common_conic(points: Sequence[tuple]) -> bool:
    """Do the affine points all lie on one conic?  Rank test of the 6-column
    Veronese matrix (x^2, xy, y^2, x, y, 1)."""
    rows = []
    for x, y in points:
        x, y = rat(x), rat(y)
        rows.append([x * x, x * y, y * y, x, y, rat(1)])
    return matrix_rank(Matrix(rows, cols=6)) < 6


def prism_graph() -> Graph:
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def prism_framework(concurrent: bool) -> Framework:
    """Triangular prism; in the concurrent variant the three cross bars lie
    on lines through the origin."""
    if concurrent:
        pts = [(1, 1), (3, 0), (0, 2), (2, 2), (6, 0), (0, 5)]
    else:
        pts = [(0, 0), (4, 0), (1, 3), (6, 5), (5, -2), (-2, 6)]
    return Framework(prism_graph(), pts)


def ring_of_quads_graph() -> Graph:
    edges = []
    for i in range(4):
        edges.append((i, (i + 1) % 4))
        edges.append((4 + i, 4 + (i + 1) % 4))
        edges.append((i, 4 + i))
    return Graph(8, edges)


def ring_of_quads_special() -> Framework:
    """Each outer bar parallel to the matching inner bar, so the four meeting
    points sit on the line at infinity."""
    outer = [(0, 0), (6, 0), (6, 3), (3, -3)]
    inner = [(4, 1), (8, 1), (8, Fraction(5, 2)), (Fraction(37, 6), Fraction(-7, 6))]
    return Framework(ring_of_quads_graph(), outer + inner)


def pinched_ring_graph() -> Graph:
    # Two quadrilaterals p-a-b-c and p-a'-b'-c' sharing the vertex p = 0,
    # with rungs a-a', b-b', c-c'.
    return Graph(
        7,
        [
            (0, 1), (1, 2), (2, 3), (3, 0),
            (0, 4), (4, 5), (5, 6), (6, 0),
            (1, 4), (2, 5), (3, 6),
        ],
    )


def pinched_ring_special() -> Framework:
    """The meeting points of the bars ab, a'b' and of bc, b'c' line up with p."""
    pts = [
        (0, 0),
        (-3, 3),
        (13, -9),
        (Fraction(-29, 2), Fraction(27, 2)),
        (-2, -3),
        (4, 3),
        (0, -3),
    ]
    return Framework(pinched_ring_graph(), pts)


def cube_diagonal_graph() -> Graph:
    edges = []
    for i in range(4):
        edges.append((i, (i + 1) % 4))
        edges.append((4 + i, 4 + (i + 1) % 4))
        edges.append((i, 4 + i))
    edges.append((4, 6))
    return Graph(8, edges)


def glued_dixon_pair(perturb: bool = False) -> Framework:
    """Two axis-placed K_{3,3} copies glued along the bar (1,0)-(0,1).

    Vertices 0..5 are the first copy (x axis 1,2,5; y axis 1,3,9); the second
    copy reuses vertices 0 and 3 and adds x axis 3,7 and y axis 4,6.  With
    ``perturb`` the last vertex moves off its axis, which breaks the conic
    condition in the second copy only.
    """
    pts = [
        (1, 0), (2, 0), (5, 0),
        (0, 1), (0, 3), (0, 9),
        (3, 0), (7, 0),
        (0, 4), (0, 6),
    ]
    if perturb:
        pts[9] = (1, 5)
    class_a = [0, 1, 2]
    class_b = [3, 4, 5]
    class_a2 = [0, 6, 7]
    class_b2 = [3, 8, 9]
    edges = [(i, j) for i in class_a for j in class_b]
    edges += [(i, j) for i in class_a2 for j in class_b2 if (i, j) != (0, 3)]
    return Framework(Graph(10, edges), pts)


# ---------------------------------------------------------------------------
# seeded generic placements


def _random_point(rng: random.Random) -> tuple[Fraction, Fraction]:
    # Small integer coordinates keep the defining polynomial's coefficients,
    # and with them the elimination cost, small.
    return (Fraction(rng.randint(-14, 14)), Fraction(rng.randint(-14, 14)))


def generic_framework(
    graph: Graph,
    seed: int,
    checks: Sequence[Callable[[Framework], bool]] = (),
) -> Framework:
    """Seeded placement of the graph, regenerated until every exact check
    passes (bounded retries)."""
    for attempt in range(_MAX_SEED_RETRIES):
        rng = random.Random(seed + attempt)
        pts = [_random_point(rng) for _ in range(graph.vertex_count)]
        if len(set(pts)) != graph.vertex_count:
            continue
        try:
            fw = Framework(graph, pts)
            arrangement_of(fw)
        except (InputError, CoincidentLinesError):
            continue
        if not has_generic_matroid(fw):
            continue
        if all(check(fw) for check in checks):
            return fw
    raise PreconditionError(f"no generic placement found for seed {seed}")


def _rigid(fw: Framework) -> bool:
    return motion_space(fw).dim_nontrivial == 0


def _motion_dim_is(d: int) -> Callable[[Framework], bool]:
    return lambda fw: motion_space(fw).dim_nontrivial == d


def _joints_off_conic(fw: Framework) -> bool:
    return not on_common_conic(fw.placement[:6])


def _quad_meets_not_collinear(fw: Framework) -> bool:
    """The four outer/inner bar meeting points must not be collinear."""
    from arrform.rigidity import edge_line

    rows = []
    for i in range(4):
        outer = edge_line(fw.placement[i], fw.placement[(i + 1) % 4])
        inner = edge_line(fw.placement[4 + i], fw.placement[4 + (i + 1) % 4])
        pt = kernel_vectors(Matrix([outer.coefficients, inner.coefficients]))
        if len(pt) != 1:
            return False
        rows.append(pt[0])
    return matrix_rank(Matrix(rows, cols=3)) == 3


def k33_generic_framework(seed: int = 9) -> Framework:
    return generic_framework(
        complete_bipartite(3, 3), seed, checks=(_rigid, _joints_off_conic)
    )


def prism_generic_framework(seed: int = 11) -> Framework:
    return generic_framework(prism_graph(), seed, checks=(_rigid,))


def ring_of_quads_generic_framework(seed: int = 5) -> Framework:
    return generic_framework(
        ring_of_quads_graph(),
        seed,
        checks=(_motion_dim_is(1), _quad_meets_not_collinear),
    )


def pinched_ring_generic_framework(seed: int = 3) -> Framework:
    return generic_framework(pinched_ring_graph(), seed, checks=(_rigid,))


def cube_diagonal_generic_framework(seed: int = 7) -> Framework:
    return generic_framework(cube_diagonal_graph(), seed, checks=(_rigid,))


# ---------------------------------------------------------------------------
# registry and corpus


def _ziegler_conic(entry_params: dict) -> Framework:
    ts = entry_params.get("ts", (1, 2, 4, -1, -3, -7))
    fw = parabola_k33(ts)
    if not has_generic_matroid(fw):
        raise InputError("parameters break the generic matroid")
    if not on_common_conic(fw.placement):
        raise InputError("joints are expected on the parabola")
    return fw


def _ziegler_generic(entry_params: dict) -> Framework:
    ts = entry_params.get("ts", (1, 2, 4, -1, -3, -7))
    fw = parabola_k33(ts, off_conic=entry_params.get("off_conic", 5))
    if not has_generic_matroid(fw):
        raise InputError("parameters break the generic matroid")
    if on_common_conic(fw.placement):
        raise InputError("perturbed joints still sit on a conic")
    return fw


_GENERATORS: dict[str, Callable[[dict], Arrangement | Framework]] = {
    "d3": lambda p: d3_arrangement(),
    "a3": lambda p: a3_arrangement(),
    "triangle": lambda p: coordinate_triangle(),
    "pencil": lambda p: pencil(int(p.get("k", 3))),
    "pencil_plus": lambda p: pencil_plus(int(p.get("k", 3)), int(p.get("general", 2))),
    "ziegler_conic": _ziegler_conic,
    "ziegler_generic": _ziegler_generic,
    "dixon": lambda p: dixon_framework(p.get("xs", (1, 2, 5)), p.get("ys", (1, 3, 9))),
    "k33_generic": lambda p: k33_generic_framework(int(p.get("seed", 9))),
    "triangle_framework": lambda p: Framework(
        Graph(3, [(0, 1), (1, 2), (0, 2)]), [(0, 0), (4, 1), (1, 5)]
    ),
    "prism": lambda p: (
        prism_framework(True) if p.get("concurrent") else prism_generic_framework(int(p.get("seed", 11)))
    ),
    "ring_of_quads": lambda p: (
        ring_of_quads_special() if p.get("special") else ring_of_quads_generic_framework(int(p.get("seed", 5)))
    ),
    "pinched_ring": lambda p: (
        pinched_ring_special() if p.get("special") else pinched_ring_generic_framework(int(p.get("seed", 3)))
    ),
    "cube_diagonal": lambda p: cube_diagonal_generic_framework(int(p.get("seed", 7))),
    "glued_dixon": lambda p: glued_dixon_pair(bool(p.get("perturb", False))),
}


def generate(name: str, params: dict | None = None) -> CorpusEntry:
    """Build a named payload deterministically; same name and params, same
    structure."""
    params = dict(params or {})
    try:
        builder = _GENERATORS[name]
    except KeyError:
        raise InputError(f"unknown construction {name!r}; known: {sorted(_GENERATORS)}")
    payload = builder(params)
    expectations = _EXPECTATIONS.get((name, _param_key(params)), {})
    return CorpusEntry(name=name, params=params, payload=payload, expectations=expectations)


def _param_key(params: dict) -> tuple:
    return tuple(sorted((k, str(v)) for k, v in params.items()))


def _exp(**kwargs) -> dict:
    return kwargs


# Expected quantities per corpus entry.  Betti data reads b0/b1 as
# degree -> count maps; classification is (kind, data).
_EXPECTATIONS: dict[tuple, dict] = {}


def _register_corpus():
    entries = [
        ("d3", {}, _exp(formal=True, nontrivial=0, b1_top=0, classification=("free", (2, 3)))),
        ("a3", {}, _exp(
            formal=True,
            nontrivial=0,
            b1_top=0,
            betti_b0={2: 1, 3: 1},
            betti_b1={},
            regularity=3,
            classification=("free", (2, 3)),
        )),
        ("triangle", {}, _exp(formal=True, nontrivial=0, b1_top=0, classification=("free", (1, 1)))),
        ("pencil", {"k": 3}, _exp(formal=True, nontrivial=0)),
        ("pencil", {"k": 5}, _exp(formal=True, nontrivial=0)),
        ("pencil_plus", {"k": 3, "general": 1}, _exp(
            formal=True, nontrivial=0, b1_top=0, classification=("free", (1, 2)))),
        ("pencil_plus", {"k": 3, "general": 2}, _exp(
            formal=False, nontrivial=1, b1_top=1,
            betti_b0={2: 1, 3: 2}, betti_b1={4: 1},
            classification=("nearly_free", (2, 3)))),
        ("pencil_plus", {"k": 4, "general": 2}, _exp(
            formal=False, nontrivial=1, b1_top=1,
            classification=("nearly_free", (2, 4)))),
        ("pencil_plus", {"k": 5, "general": 2}, _exp(
            formal=False, nontrivial=1, b1_top=1,
            classification=("nearly_free", (2, 5)))),
        ("ziegler_generic", {}, _exp(
            formal=True, nontrivial=0, b1_top=0,
            betti_b0={6: 6}, betti_b1={7: 4}, regularity=6,
            triple_points=6, double_points=18,
            generic_matroid=True, motion_nontrivial=0)),
        ("ziegler_conic", {}, _exp(
            formal=False, nontrivial=1, b1_top=1, regularity=7,
            triple_points=6, double_points=18,
            generic_matroid=True, motion_nontrivial=1)),
        ("dixon", {}, _exp(
            formal=False, nontrivial=1, b1_top=1,
            generic_matroid=True, motion_nontrivial=1)),
        ("dixon", {"xs": (1, 2, 5), "ys": (1, 3, 9, 7)}, _exp(
            formal=False, nontrivial=1, b1_top=1,
            generic_matroid=True, motion_nontrivial=1)),
        ("k33_generic", {}, _exp(
            formal=True, nontrivial=0, b1_top=0,
            betti_b0={6: 6}, betti_b1={7: 4},
            generic_matroid=True, motion_nontrivial=0)),
        ("triangle_framework", {}, _exp(
            formal=True, nontrivial=0, generic_matroid=True, motion_nontrivial=0)),
        ("prism", {}, _exp(generic_matroid=True, motion_nontrivial=0, formal=True, nontrivial=0)),
        ("prism", {"concurrent": True}, _exp(generic_matroid=False, motion_nontrivial=1)),
        ("ring_of_quads", {}, _exp(
            formal=False, nontrivial=1, b1_top=1,
            betti_b0={9: 8}, betti_b1={10: 5, 11: 1}, regularity=10,
            generic_matroid=True, motion_nontrivial=1)),
        ("ring_of_quads", {"special": True}, _exp(
            formal=False, nontrivial=2, b1_top=2,
            generic_matroid=True, motion_nontrivial=2)),
        ("pinched_ring", {}, _exp(generic_matroid=True, motion_nontrivial=0, formal=True)),
        ("pinched_ring", {"special": True}, _exp(
            formal=False, nontrivial=1, b1_top=1,
            generic_matroid=True, motion_nontrivial=1)),
        ("cube_diagonal", {}, _exp(generic_matroid=True, motion_nontrivial=0, formal=True)),
        ("glued_dixon", {}, _exp(
            formal=False, nontrivial=2, b1_top=2,
            generic_matroid=True, motion_nontrivial=2)),
        ("glued_dixon", {"perturb": True}, _exp(
            formal=False, nontrivial=1, b1_top=1,
            generic_matroid=True, motion_nontrivial=1)),
    ]
    for name, params, exp in entries:
        _EXPECTATIONS[(name, _param_key(params))] = exp
    return [(name, params) for name, params, _ in entries]


_CORPUS_SPECS = _register_corpus()


def corpus() -> list[CorpusEntry]:
    """The full regression corpus, in a fixed order."""
    out = [generate(name, params) for name, params in _CORPUS_SPECS]
    conic = generate("ziegler_conic")
    generic = generate("ziegler_generic")
    for base_name, base in (("ziegler_conic", conic), ("ziegler_generic", generic)):
        arr = base.arrangement
        target = next(f for f in flats_of_rank(arr, 2) if f.size >= 3)
        plus = add_line_through_flat(arr, target.indices)
        out.append(
            CorpusEntry(
                name=f"{base_name}_plus_line",
                params={"flat": list(target.indices)},
                payload=plus,
                expectations={
                    "b1_top": base.expectations.get("b1_top"),
                    "formal": base.expectations.get("formal"),
                    "nontrivial": base.expectations.get("nontrivial"),
                },
            )
        )
    return out
