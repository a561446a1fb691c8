from fractions import Fraction

import pytest

from arrform.arrangement import flats_of_rank, is_essential, rank as arr_rank
from arrform.constructions import (
    dixon_framework,
    generate,
    glued_dixon_pair,
    prism_framework,
)
from arrform.errors import CoincidentLinesError, InputError, PreconditionError
from arrform.exactlin import Matrix, rank as matrix_rank
from arrform.rigidity import (
    CorrespondenceReport,
    Framework,
    Graph,
    arrangement_of,
    correspondence_check,
    edge_line,
    edges_parallel,
    engineers_trick,
    has_generic_matroid,
    motion_space,
    rigidity_matrix,
    trivial_motions,
)


def triangle_framework():
    return generate("triangle_framework").framework


def test_graph_validation():
    with pytest.raises(InputError):
        Graph(3, [(0, 0)])
    with pytest.raises(InputError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        Graph(2, [(0, 2)])


def test_framework_validation():
    g = Graph(2, [(0, 1)])
    with pytest.raises(InputError):
        Framework(g, [(0, 0), (0, 0)])


def test_rigidity_matrix_single_edge():
    fw = Framework(Graph(2, [(0, 1)]), [(0, 0), (1, 0)])
    r = rigidity_matrix(fw)
    assert r.rows == 1 and r.cols == 4
    # Row carries p_0 - p_1 in vertex-0 columns and the negative opposite.
    assert [int(x) for x in r.row(0)] == [-1, 0, 1, 0]
    assert motion_space(fw).basis.dim == 3


def test_triangle_rank_and_motions():
    fw = triangle_framework()
    r = rigidity_matrix(fw)
    assert matrix_rank(r) == 3
    ms = motion_space(fw)
    assert ms.basis.dim == 3 and ms.dim_nontrivial == 0


def test_trivial_motions_always_in_kernel():
    for fw in (
        triangle_framework(),
        dixon_framework(),
        prism_framework(True),
        glued_dixon_pair(),
    ):
        kernel = motion_space(fw).basis
        for tv in trivial_motions(fw):
            assert kernel.contains(tv)


def test_trivial_dim_collapsed_placement():
    fw = Framework(Graph(2, []), [(1, 1), (1, 1)])
    assert motion_space(fw).dim_trivial == 2


def test_generic_k33_is_rigid():
    fw = generate("k33_generic").framework
    assert matrix_rank(rigidity_matrix(fw)) == 9
    assert motion_space(fw).dim_nontrivial == 0


def test_dixon_motion():
    ms = motion_space(dixon_framework())
    assert ms.basis.dim == 4 and ms.dim_nontrivial == 1


def test_prism_motions():
    assert motion_space(generate("prism").framework).dim_nontrivial == 0
    assert motion_space(prism_framework(True)).dim_nontrivial == 1


def test_rank_bound():
    for fw in (triangle_framework(), dixon_framework(), glued_dixon_pair()):
        e = len(fw.graph.edges)
        v = fw.graph.vertex_count
        assert matrix_rank(rigidity_matrix(fw)) <= min(e, 2 * v - 3)


def test_edge_line_horizontal():
    form = edge_line((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)))
    assert [int(c) for c in form.coefficients] == [0, 1, 0]


def test_arrangement_of_triangle():
    arr = arrangement_of(triangle_framework())
    assert arr.n == 3 and is_essential(arr)
    rank2 = flats_of_rank(arr, 2)
    assert len(rank2) == 3 and all(f.size == 2 for f in rank2)


def test_arrangement_of_dixon_lattice():
    arr = arrangement_of(dixon_framework())
    rank2 = flats_of_rank(arr, 2)
    triples = [f for f in rank2 if f.size >= 3]
    doubles = [f for f in rank2 if f.size == 2]
    assert len(triples) == 6 and len(doubles) == 18
    assert all(f.size == 3 for f in triples)


def test_arrangement_of_rejects_collinear_edges():
    g = Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(CoincidentLinesError):
        arrangement_of(Framework(g, [(0, 0), (1, 0), (2, 0)]))


def test_has_generic_matroid():
    assert has_generic_matroid(dixon_framework())
    assert has_generic_matroid(triangle_framework())
    assert not has_generic_matroid(prism_framework(True))


def test_engineers_trick_zero_and_translation():
    fw = dixon_framework()
    nv = fw.graph.vertex_count
    zero = [0] * (2 * nv)
    assert engineers_trick(fw, zero).placement == fw.placement
    shift = [5, -2] * nv
    moved = engineers_trick(fw, shift)
    # A translated copy: every vertex moved by the rotated shift vector.
    dx = moved.placement[0][0] - fw.placement[0][0]
    dy = moved.placement[0][1] - fw.placement[0][1]
    assert all(
        (q[0] - p[0], q[1] - p[1]) == (dx, dy)
        for p, q in zip(fw.placement, moved.placement)
    )
    assert edges_parallel(fw, moved)


def test_engineers_trick_requires_motion():
    fw = dixon_framework()
    bad = [1] + [0] * (2 * fw.graph.vertex_count - 1)
    with pytest.raises(PreconditionError):
        engineers_trick(fw, bad)


def test_engineers_trick_parallel_for_every_kernel_vector():
    for fw in (dixon_framework(), prism_framework(True), glued_dixon_pair()):
        for v in motion_space(fw).basis.vectors:
            redrawn = engineers_trick(fw, v)
            assert edges_parallel(fw, redrawn)


def test_engineers_trick_dixon_noncongruent():
    fw = dixon_framework()
    ms = motion_space(fw)
    nontrivial = None
    trivial = ms.basis
    from arrform.exactlin import SubspaceBasis

    tspan = SubspaceBasis.from_vectors(12, trivial_motions(fw))
    for v in ms.basis.vectors:
        if not tspan.contains(v):
            nontrivial = v
            break
    assert nontrivial is not None
    redrawn = engineers_trick(fw, nontrivial)
    assert edges_parallel(fw, redrawn)
    # Not a rigid motion of the original: some bar changes length.
    def sq_len(f, e):
        (i, j) = e
        dx = f.placement[i][0] - f.placement[j][0]
        dy = f.placement[i][1] - f.placement[j][1]
        return dx * dx + dy * dy

    assert any(
        sq_len(fw, e) != sq_len(redrawn, e) for e in fw.graph.edges
    )


def test_correspondence_reports():
    assert correspondence_check(generate("k33_generic").framework) == CorrespondenceReport(0, 0, True)
    assert correspondence_check(dixon_framework()) == CorrespondenceReport(1, 1, True)
    assert correspondence_check(generate("ring_of_quads").framework) == CorrespondenceReport(1, 1, True)


def test_correspondence_requires_generic_matroid():
    with pytest.raises(PreconditionError):
        correspondence_check(prism_framework(True))


def test_framework_json_round_trip():
    fw = dixon_framework()
    again = Framework.from_json(fw.to_json())
    assert again == fw
