import random
from fractions import Fraction

import pytest

from arrform.arrangement import Arrangement, coefficient_matrix, rank, relation_matrix
from arrform.constructions import (
    a3_arrangement,
    add_general_line,
    coordinate_triangle,
    d3_arrangement,
    generate,
    pencil,
)
from arrform.errors import DimensionMismatchError, PreconditionError
from arrform.exactlin import Matrix, kernel_basis, rat
from arrform.persp import trivial_space, wprep_report
from arrform.polyjac import (
    Polynomial,
    coefficient_vector,
    defining_poly,
    divide_by_linear,
    euler_check,
    ideal_slice,
    jacobian_slice,
    ksat_slice,
    lambda_to_poly,
    monomials,
    partials,
    poly_membership,
    polynomial_from_vector,
    products,
    products_ideal_slice,
    products_slice,
    sat_quotient_dim,
    vanishing_order_slice,
)
from arrform.polyjac import _ksat_slice_by_intersection


def ziegler_conic():
    return generate("ziegler_conic").arrangement


def ziegler_generic():
    return generate("ziegler_generic").arrangement


def test_monomial_order_graded_lex():
    assert monomials(3, 2)[:3] == ((2, 0, 0), (1, 1, 0), (1, 0, 1))
    assert len(monomials(3, 5)) == 21


def test_polynomial_arithmetic_round_trip():
    p = Polynomial(3, {(1, 0, 0): rat(2), (0, 1, 0): rat(-3)})
    q = p * p
    assert q.terms[(2, 0, 0)] == 4
    assert q.terms[(1, 1, 0)] == -12
    vec = coefficient_vector(q, 2)
    assert polynomial_from_vector(3, 2, vec) == q


def test_defining_poly_a3():
    q = defining_poly(a3_arrangement())
    assert q.degree() == 6
    # x y z (x-y)(x-z)(y-z) expanded has six monomials.
    assert len(q.terms) == 6
    built = Polynomial.constant(3, 1)
    for f in a3_arrangement().forms:
        built = built * Polynomial.from_linear_form(f)
    assert built == q


def test_defining_poly_single_form():
    arr = Arrangement([[1, 0, 0]])
    assert defining_poly(arr) == Polynomial(3, {(1, 0, 0): rat(1)})
    assert euler_check(arr)


def test_euler_check_corpus():
    for arr in (d3_arrangement(), a3_arrangement(), ziegler_conic(), pencil(4)):
        assert euler_check(arr)


def test_partial_derivative():
    q = defining_poly(a3_arrangement())
    px = q.partial(0)
    assert px.degree() == 5


def test_ideal_slice_principal():
    x = Polynomial(3, {(1, 0, 0): rat(1)})
    s = ideal_slice([x], 2)
    assert s.dim == 3
    assert s.contains(Polynomial(3, {(1, 1, 0): rat(5)}))
    assert not s.contains(Polynomial(3, {(0, 2, 0): rat(1)}))


def test_jacobian_slice_dims():
    assert jacobian_slice(a3_arrangement(), 5).dim == 3
    for arr in (d3_arrangement(), a3_arrangement(), ziegler_generic()):
        assert jacobian_slice(arr, arr.n - 1).dim == rank(arr)
        assert jacobian_slice(arr, arr.n - 1).dim == trivial_space(arr).dim


def test_products_slices():
    assert products_slice(coordinate_triangle()).dim == 3
    assert products_slice(pencil(3)).dim == 3
    assert products_slice(d3_arrangement()).dim == 6


def test_generator_degree_guard():
    x = Polynomial(3, {(1, 0, 0): rat(1)})
    with pytest.raises(PreconditionError):
        ideal_slice([x], 0)


def test_ksat_matches_intersection_route():
    cases = [
        (a3_arrangement(), 5),
        (a3_arrangement(), 6),
        (d3_arrangement(), 5),
        (ziegler_conic(), 8),
        (ziegler_conic(), 9),
        (ziegler_generic(), 8),
    ]
    for arr, d in cases:
        fast = ksat_slice(arr, 2, d)
        slow = _ksat_slice_by_intersection(arr, 2, d)
        assert fast.space == slow.space


def test_ksat_top_out_equals_jacobian():
    p = pencil(3)  # rank 2, so codimension 2 already tops out
    assert ksat_slice(p, 2, 4).space == jacobian_slice(p, 4).space


def test_sat_quotients():
    assert sat_quotient_dim(d3_arrangement(), 2, 5) == 0
    assert sat_quotient_dim(ziegler_conic(), 2, 8) == 1
    assert sat_quotient_dim(ziegler_generic(), 2, 8) == 0


def test_sat_quotient_matches_wprep():
    for arr in (d3_arrangement(), a3_arrangement(), ziegler_conic(), ziegler_generic()):
        assert sat_quotient_dim(arr, 2, arr.n - 1) == wprep_report(arr, 3).dim_nontrivial


def test_slice_chain_and_oracle():
    for arr in (d3_arrangement(), ziegler_conic()):
        n = arr.n
        for d in (n - 1, n):
            jac = jacobian_slice(arr, d)
            sat = ksat_slice(arr, 2, d)
            prod = products_ideal_slice(arr, d)
            oracle = vanishing_order_slice(arr, d)
            assert sat.space.contains_subspace(jac.space)
            assert prod.space.contains_subspace(sat.space)
            assert oracle.space == prod.space


def test_lambda_bridge_both_directions():
    arr = ziegler_conic()
    rng = random.Random(7)
    n_matrix = relation_matrix(arr, 3)
    ker = kernel_basis(n_matrix)
    sat = ksat_slice(arr, 2, arr.n - 1)
    for _ in range(6):
        coeffs = [Fraction(rng.randint(-5, 5)) for _ in range(ker.dim)]
        lam = [
            sum((c * v[i] for c, v in zip(coeffs, ker.vectors)), Fraction(0))
            for i in range(arr.n)
        ]
        assert poly_membership(lambda_to_poly(arr, lam), sat)
    for _ in range(10):
        lam = [Fraction(rng.randint(-4, 4)) for _ in range(arr.n)]
        in_kernel = all(x == 0 for x in n_matrix.mul_vector(lam))
        assert poly_membership(lambda_to_poly(arr, lam), sat) == in_kernel


def test_trivial_lambda_lands_in_jacobian():
    arr = ziegler_conic()
    rng = random.Random(3)
    m = coefficient_matrix(arr)
    jac = jacobian_slice(arr, arr.n - 1)
    for _ in range(4):
        v = [Fraction(rng.randint(-5, 5)) for _ in range(3)]
        lam = m.transpose().mul_vector(v)
        assert poly_membership(lambda_to_poly(arr, lam), jac)


def test_nontrivial_lambda_in_saturation_not_jacobian():
    arr = ziegler_conic()
    lam = wprep_report(arr, 3).basis_nontrivial[0]
    f = lambda_to_poly(arr, lam)
    assert poly_membership(f, ksat_slice(arr, 2, arr.n - 1))
    assert not poly_membership(f, jacobian_slice(arr, arr.n - 1))


def test_dropped_product_of_added_general_line():
    arr = add_general_line(d3_arrangement())
    lam = [0] * 6 + [1]
    f = lambda_to_poly(arr, lam)
    assert poly_membership(f, ksat_slice(arr, 2, 6))
    assert not poly_membership(f, jacobian_slice(arr, 6))


def test_divide_by_linear():
    x = Polynomial(3, {(1, 0, 0): rat(1)})
    form = d3_arrangement().forms[0]  # x - y
    lf = Polynomial.from_linear_form(form)
    product = lf * lf * x
    q = divide_by_linear(product, form)
    assert q == lf * x
    with pytest.raises(PreconditionError):
        divide_by_linear(x * x, form)


def test_poly_membership_degree_guard():
    x = Polynomial(3, {(1, 0, 0): rat(1)})
    s = ideal_slice([x], 2)
    with pytest.raises(DimensionMismatchError):
        poly_membership(x, s)


def test_products_match_defining_poly():
    arr = d3_arrangement()
    q = defining_poly(arr)
    for form, p in zip(arr.forms, products(arr)):
        from arrform.polyjac import _integer_form

        assert _integer_form(form) * p == q


def test_json_round_trip():
    q = defining_poly(a3_arrangement())
    assert Polynomial.from_json(q.to_json()) == q
