import itertools
from math import comb

import pytest

from arrform.arrangement import (
    Arrangement,
    LinearForm,
    coefficient_matrix,
    flats,
    flats_of_rank,
    general_position_form,
    is_essential,
    is_irreducible_line_arrangement,
    is_separator,
    rank,
    relation_matrix,
    relation_space,
    subset_rank,
)
from arrform.errors import InputError, PreconditionError, UnsupportedOperationError
from arrform.exactlin import Matrix, SubspaceBasis, kernel_basis
from arrform.exactlin import rank as matrix_rank


def d3():
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


def a3():
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


def pencil3():
    return Arrangement([[1, 0, 0], [0, 1, 0], [1, 1, 0]])


def triangle():
    return Arrangement([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


D3_COEFF_ROWS = (
    (1, 1, 1, 1, 0, 0),
    (-1, 1, 0, 0, 1, 1),
    (0, 0, -1, 1, -1, 1),
)

D3_TRIPLES = [(0, 2, 4), (1, 2, 5), (1, 3, 4), (0, 3, 5)]


def test_linear_form_normalization():
    f = LinearForm(["0", "-2", "4"])
    assert [str(c) for c in f.coefficients] == ["0", "1", "-2"]
    with pytest.raises(InputError):
        LinearForm([0, 0, 0])


def test_duplicate_forms_rejected():
    with pytest.raises(InputError):
        Arrangement([[1, -1, 0], [-2, 2, 0]])


def test_d3_coefficient_matrix_matches_display():
    m = coefficient_matrix(d3())
    assert [[int(x) for x in row] for row in m.data] == [list(r) for r in D3_COEFF_ROWS]
    assert matrix_rank(m) == 3


def test_single_form_coefficient_matrix():
    m = coefficient_matrix(Arrangement([[1, 0, 0]]))
    assert m.rows == 3 and m.cols == 1
    assert m.column(0) == (1, 0, 0)


def test_a3_matrix_rank():
    assert matrix_rank(coefficient_matrix(a3())) == 3


def test_d3_flats():
    fl = flats(d3(), 2)
    by_rank = {r: [f for f in fl if f.rank == r] for r in (1, 2)}
    assert len(by_rank[1]) == 6
    triples = [f.indices for f in by_rank[2] if f.size == 3]
    doubles = [f for f in by_rank[2] if f.size == 2]
    assert sorted(triples) == sorted(D3_TRIPLES)
    assert len(doubles) == 3


def test_triangle_flats():
    fl = flats(triangle(), 2)
    assert len([f for f in fl if f.rank == 1]) == 3
    rank2 = [f for f in fl if f.rank == 2]
    assert len(rank2) == 3 and all(f.size == 2 for f in rank2)


def test_pair_count_identity_line_arrangements():
    for arr in (d3(), a3()):
        rank2 = [f for f in flats(arr, 2) if f.rank == 2]
        assert sum(comb(f.size, 2) for f in rank2) == comb(arr.n, 2)


def test_flat_closure_property():
    arr = d3()
    for f in flats(arr, 2):
        assert subset_rank(arr, f.indices) == f.rank
        span = SubspaceBasis.from_vectors(
            3, [arr.forms[i].coefficients for i in f.indices]
        )
        outside = [j for j in range(arr.n) if j not in f.indices]
        for j in outside:
            assert not span.contains(arr.forms[j].coefficients)


def test_relation_space_d3_triple_point():
    arr = d3()
    flat = next(f for f in flats(arr, 2) if f.indices == (0, 2, 4))
    rs = relation_space(arr, flat)
    assert rs.dim == 1
    v = rs.vectors[0]
    assert [int(x) for x in v] == [1, 0, -1, 0, 1, 0]


def test_relation_space_double_point_is_zero():
    arr = d3()
    flat = next(f for f in flats(arr, 2) if f.rank == 2 and f.size == 2)
    assert relation_space(arr, flat).dim == 0


def test_relation_space_pencil_full_flat():
    arr = pencil3()
    flat = next(f for f in flats(arr, 2) if f.rank == 2)
    rs = relation_space(arr, flat)
    assert rs.dim == 1
    assert [int(x) for x in rs.vectors[0]] == [1, 1, -1]


def test_relation_matrix_d3():
    n3 = relation_matrix(d3(), 3)
    assert n3.rows == 4 and n3.cols == 6
    assert matrix_rank(n3) == 3
    # Same row space as the stacked matrix printed for this arrangement.
    printed = Matrix(
        [
            (1, 0, -1, 0, 1, 0),
            (0, 1, -1, 0, 0, -1),
            (0, 1, 0, -1, -1, 0),
            (1, 0, 0, -1, 0, 1),
        ]
    )
    ours = SubspaceBasis.from_vectors(6, n3.data)
    theirs = SubspaceBasis.from_vectors(6, printed.data)
    assert ours == theirs


def test_relation_matrix_generic_lines_is_empty():
    n3 = relation_matrix(triangle(), 3)
    assert n3.rows == 0 and n3.cols == 3
    assert kernel_basis(n3).dim == 3


def test_relation_matrix_kernel_nesting():
    # Kernel at rank bound k+1 sits inside the kernel at rank bound k.
    arr = a3()
    k3 = kernel_basis(relation_matrix(arr, 3))
    # ambient = 3 caps the bound; emulate the next bound with the full flat.
    assert k3.dim >= rank(arr)


def test_positional_predicates_d3():
    arr = d3()
    assert is_essential(arr)
    assert rank(arr) == 3
    assert not any(is_separator(arr, i) for i in range(arr.n))
    assert is_irreducible_line_arrangement(arr)


def test_pencil_not_essential():
    arr = pencil3()
    assert rank(arr) == 2
    assert not is_essential(arr)


def test_near_pencil_reducible():
    near = Arrangement([[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]])
    assert is_essential(near)
    assert not is_irreducible_line_arrangement(near)


def test_triangle_reducible():
    assert not is_irreducible_line_arrangement(triangle())


def test_irreducibility_needs_lines():
    arr = Arrangement([[1, 0, 0, 0], [0, 1, 0, 0]])
    with pytest.raises(UnsupportedOperationError):
        is_irreducible_line_arrangement(arr)


def test_separator_detection():
    # Deleting the only form touching z drops the rank.
    arr = Arrangement([[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]])
    assert is_separator(arr, 3)
    assert not is_separator(arr, 0)


def test_non_separator_deletion_preserves_rank():
    arr = d3()
    for i in range(arr.n):
        rest = Arrangement([f.coefficients for j, f in enumerate(arr.forms) if j != i])
        assert rank(rest) == rank(arr)


def test_general_position_form_d3():
    arr = d3()
    h0 = general_position_form(arr, 2)
    spans = [
        SubspaceBasis.from_vectors(3, [arr.forms[i].coefficients for i in f.indices])
        for f in flats(arr, 2)
    ]
    assert not any(s.contains(h0.coefficients) for s in spans)


def test_general_position_form_single_hyperplane():
    arr = Arrangement([[1, 0]])
    h0 = general_position_form(arr, 1)
    assert h0 != arr.forms[0]
    assert [int(c) for c in h0.coefficients] == [1, 1]


def test_flats_bad_rank_bound():
    with pytest.raises(PreconditionError):
        flats(d3(), 0)
    with pytest.raises(PreconditionError):
        relation_matrix(d3(), 2)


def test_json_round_trip():
    arr = d3()
    again = Arrangement.from_json(arr.to_json())
    assert again == arr
    with pytest.raises(InputError):
        Arrangement.from_json({"ambient": 3})
