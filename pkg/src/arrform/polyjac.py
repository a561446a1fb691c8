"""Multivariate polynomials over the rationals and per-degree linear algebra
on ideals of an arrangement: the defining polynomial, Jacobian slices, the
ideal of (n-1)-fold products, and codimension-k saturation slices via the
flat-by-flat intersection formula.

Everything is degree-by-degree linear algebra on coefficient vectors; there
is no symbolic ideal object and no Groebner machinery.  A graded piece of an
intersection of ideals is the intersection of the graded pieces.

For line arrangements the saturation slice is computed from point conditions:
membership of a form in the Jacobian ideal of the lines through a point is a
finite set of exact linear conditions on the Taylor coefficients of the form
at that point (an inverse-system description of the local Artinian quotient).
A direct span-intersection route is kept alongside as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Iterable, Sequence

from arrform.arrangement import Arrangement, Flat, LinearForm, flats_of_rank, rank
from arrform.errors import (
    DimensionMismatchError,
    PreconditionError,
    TheoremViolationError,
    UnsupportedOperationError,
)
from arrform.exactlin import (
    Matrix,
    SubspaceBasis,
    Vector,
    kernel_vectors,
    rat,
    rref_rank,
    subspace_intersect,
)
from arrform.exactlin import rank as matrix_rank

_ZERO = Fraction(0)
_ONE = Fraction(1)

Exponent = tuple[int, ...]


class Polynomial:
    """Sparse polynomial: exponent tuple -> nonzero Fraction coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[Exponent, Fraction] | None = None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: rat(value)})

    @classmethod
    def from_linear_form(cls, form: LinearForm) -> "Polynomial":
        n = form.nvars
        terms = {}
        for i, c in enumerate(form.coefficients):
            if c != 0:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return cls(n, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Degree of a homogeneous polynomial (-1 for zero)."""
        if not self.terms:
            return -1
        degrees = {sum(e) for e in self.terms}
        if len(degrees) != 1:
            raise PreconditionError("polynomial is not homogeneous")
        return degrees.pop()

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if self.nvars != other.nvars:
            raise DimensionMismatchError("mixed variable counts")
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, _ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.nvars, out)

    def scale(self, value) -> "Polynomial":
        v = rat(value)
        if v == 0:
            return Polynomial.zero(self.nvars)
        return Polynomial(self.nvars, {e: c * v for e, c in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.nvars != other.nvars:
            raise DimensionMismatchError("mixed variable counts")
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, _ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial(self.nvars, out)

    def partial(self, var: int) -> "Polynomial":
        out = {}
        for e, c in self.terms.items():
            k = e[var]
            if k:
                e2 = list(e)
                e2[var] = k - 1
                out[tuple(e2)] = c * k
        return Polynomial(self.nvars, out)

    def evaluate(self, point: Sequence) -> Fraction:
        pt = [rat(p) for p in point]
        total = _ZERO
        for e, c in self.terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v *= x**k
            total += v
        return total

    def monomial_shift(self, shift: Exponent) -> "Polynomial":
        return Polynomial(
            self.nvars,
            {tuple(a + b for a, b in zip(e, shift)): c for e, c in self.terms.items()},
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, tuple(sorted(self.terms.items()))))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = ["x", "y", "z"] if self.nvars <= 3 else [f"x{i}" for i in range(self.nvars)]
        parts = []
        for e in sorted(self.terms, key=lambda t: (sum(t), tuple(-x for x in t))):
            c = self.terms[e]
            mono = "*".join(
                name if k == 1 else f"{name}^{k}"
                for name, k in zip(names, e)
                if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "vars": self.nvars,
            "terms": [
                {"exp": list(e), "coef": str(c)}
                for e, c in sorted(self.terms.items(), reverse=True)
            ],
        }

    @classmethod
    def from_json(cls, payload: dict) -> "Polynomial":
        return cls(
            int(payload["vars"]),
            {tuple(t["exp"]): rat(t["coef"]) for t in payload["terms"]},
        )


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[Exponent, ...]:
    """All degree-d exponent tuples, graded lexicographic (x before y before z)."""
    if degree < 0:
        return ()

    def gen(rest: int, total: int):
        if rest == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for tail in gen(rest - 1, total - first):
                yield (first,) + tail

    return tuple(gen(nvars, degree))


@lru_cache(maxsize=None)
def _monomial_index(nvars: int, degree: int) -> dict[Exponent, int]:
    return {e: i for i, e in enumerate(monomials(nvars, degree))}


def coefficient_vector(poly: Polynomial, degree: int) -> Vector:
    """Coordinates of a homogeneous polynomial in the fixed monomial order."""
    if not poly.is_zero() and poly.degree() != degree:
        raise DimensionMismatchError("polynomial degree does not match the slice degree")
    index = _monomial_index(poly.nvars, degree)
    vec = [_ZERO] * len(index)
    for e, c in poly.terms.items():
        vec[index[e]] = c
    return tuple(vec)


def polynomial_from_vector(nvars: int, degree: int, vec: Sequence) -> Polynomial:
    terms = {}
    for e, c in zip(monomials(nvars, degree), vec):
        c = rat(c)
        if c != 0:
            terms[e] = c
    return Polynomial(nvars, terms)


@dataclass(frozen=True)
class DegreeSlice:
    """Degree-d piece of an ideal as a canonical subspace of coefficient space."""

    nvars: int
    degree: int
    space: SubspaceBasis

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def monomial_basis(self) -> tuple[Exponent, ...]:
        return monomials(self.nvars, self.degree)

    def contains(self, poly: Polynomial) -> bool:
        return self.space.contains(coefficient_vector(poly, self.degree))


# ---------------------------------------------------------------------------
# arrangement polynomials


def _form_scale(form: LinearForm) -> int:
    """Denominator clearing factor turning the normalized form integral."""
    den = 1
    for c in form.coefficients:
        den = den // gcd(den, c.denominator) * c.denominator
    return den


def _integer_form(form: LinearForm) -> Polynomial:
    """The form scaled to integer coefficients (same hyperplane)."""
    return Polynomial.from_linear_form(form).scale(_form_scale(form))


@lru_cache(maxsize=None)
def defining_poly(arrangement: Arrangement) -> Polynomial:
    """Product of the arrangement forms, scaled to integer coefficients."""
    q = Polynomial.constant(arrangement.ambient, 1)
    for f in arrangement.forms:
        q = q * _integer_form(f)
    return q


@lru_cache(maxsize=None)
def partials(arrangement: Arrangement) -> tuple[Polynomial, ...]:
    q = defining_poly(arrangement)
    return tuple(q.partial(i) for i in range(arrangement.ambient))


def euler_check(arrangement: Arrangement) -> bool:
    """x_0 dQ/dx_0 + ... + x_l dQ/dx_l equals n Q, exactly."""
    q = defining_poly(arrangement)
    total = Polynomial.zero(arrangement.ambient)
    for i, p in enumerate(partials(arrangement)):
        shift = [0] * arrangement.ambient
        shift[i] = 1
        total = total + p.monomial_shift(tuple(shift))
    return total == q.scale(arrangement.n)


@lru_cache(maxsize=None)
def products(arrangement: Arrangement) -> tuple[Polynomial, ...]:
    """The n degree-(n-1) polynomials obtained by dropping one form from the
    defining product (computed by prefix and suffix products, no division)."""
    forms = [_integer_form(f) for f in arrangement.forms]
    n = len(forms)
    one = Polynomial.constant(arrangement.ambient, 1)
    prefix = [one]
    for f in forms[:-1]:
        prefix.append(prefix[-1] * f)
    suffix = [one]
    for f in reversed(forms[1:]):
        suffix.append(suffix[-1] * f)
    suffix.reverse()
    return tuple(prefix[i] * suffix[i] for i in range(n))


# ---------------------------------------------------------------------------
# slices


def ideal_slice(generators: Iterable[Polynomial], degree: int) -> DegreeSlice:
    """Span of all monomial multiples of the generators in the given degree."""
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        raise PreconditionError("need at least one nonzero generator")
    nvars = gens[0].nvars
    if any(g.nvars != nvars for g in gens):
        raise DimensionMismatchError("mixed variable counts")
    vectors = _ideal_slice_vectors(gens, degree)
    ambient = comb(degree + nvars - 1, nvars - 1)
    return DegreeSlice(nvars, degree, SubspaceBasis.from_vectors(ambient, vectors))


def _ideal_slice_vectors(gens: Sequence[Polynomial], degree: int) -> list[Vector]:
    nvars = gens[0].nvars
    vectors = []
    for g in gens:
        d = g.degree()
        if d > degree:
            raise PreconditionError("generator degree exceeds the slice degree")
        for m in monomials(nvars, degree - d):
            vectors.append(coefficient_vector(g.monomial_shift(m), degree))
    return vectors


@lru_cache(maxsize=None)
def jacobian_slice(arrangement: Arrangement, degree: int) -> DegreeSlice:
    return ideal_slice(partials(arrangement), degree)


def products_slice(arrangement: Arrangement) -> DegreeSlice:
    """Degree-(n-1) span of the n one-form-dropped products."""
    return ideal_slice(products(arrangement), arrangement.n - 1)


def products_ideal_slice(arrangement: Arrangement, degree: int) -> DegreeSlice:
    return ideal_slice(products(arrangement), degree)


# ---------------------------------------------------------------------------
# point conditions (inverse systems at rank-2 flats)


def _dual_frame(arrangement: Arrangement, flat: Flat):
    """Local data at a rank-2 flat: two independent forms u, v among its
    lines, a completing coordinate form w, and the dual basis vectors; the
    dual vector of w is a representative of the flat's point."""
    forms = [arrangement.forms[i] for i in flat.indices]
    u = forms[0]
    v = next(
        f
        for f in forms[1:]
        if matrix_rank(Matrix([u.coefficients, f.coefficients])) == 2
    )
    amb = arrangement.ambient
    w = None
    for k in range(amb):
        coeffs = [_ZERO] * amb
        coeffs[k] = _ONE
        cand = LinearForm(coeffs)
        m = Matrix([u.coefficients, v.coefficients, cand.coefficients])
        if matrix_rank(m) == 3:
            w = cand
            break
    if w is None:
        raise TheoremViolationError("rank-2 flat admits no completing coordinate")
    basis = Matrix([u.coefficients, v.coefficients, w.coefficients])
    rrefm, r = rref_rank(
        Matrix([list(basis.row(i)) + unit for i, unit in zip(range(3), _eye_rows(3))])
    )
    if r != 3:
        raise TheoremViolationError("dual frame is singular")
    # Augmented reduction yields the inverse; dual vectors are its columns.
    e_u = tuple(rrefm.entry(i, 3 + 0) for i in range(3))
    e_v = tuple(rrefm.entry(i, 3 + 1) for i in range(3))
    e_w = tuple(rrefm.entry(i, 3 + 2) for i in range(3))
    return forms, u, v, e_u, e_v, e_w


def _eye_rows(n: int) -> list[list[Fraction]]:
    rows = []
    for i in range(n):
        r = [_ZERO] * n
        r[i] = _ONE
        rows.append(r)
    return rows


def _jets_of_monomial(e: Exponent, p, eu, ev, order: int) -> dict[tuple[int, int], Fraction]:
    """Coefficients of s^i t^j, i + j <= order, in the monomial evaluated at
    p + s eu + t ev.  These are the local Taylor coordinates of the monomial
    in the frame dual to (u, v, w)."""
    out: dict[tuple[int, int], Fraction] = {(0, 0): _ONE}
    for var, power in enumerate(e):
        if not power:
            continue
        base = (p[var], eu[var], ev[var])
        factor: dict[tuple[int, int], Fraction] = {}
        for i in range(min(power, order) + 1):
            for j in range(min(power - i, order - i) + 1):
                c = comb(power, i) * comb(power - i, j)
                val = (
                    rat(c)
                    * base[0] ** (power - i - j)
                    * base[1] ** i
                    * base[2] ** j
                )
                if val:
                    factor[(i, j)] = val
        new: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in out.items():
            for (i2, j2), c2 in factor.items():
                i, j = i1 + i2, j1 + j2
                if i + j > order:
                    continue
                s = new.get((i, j), _ZERO) + c1 * c2
                if s:
                    new[(i, j)] = s
                else:
                    new.pop((i, j), None)
        out = new
        if not out:
            break
    return out


def _bivariate_power_products(coeff_pairs: Sequence[tuple[Fraction, Fraction]]) -> list[Fraction]:
    """Coefficients of the product of linear forms a U + b V, indexed so that
    entry i is the coefficient of U^(m-i) V^i."""
    coeffs = [_ONE]
    for a, b in coeff_pairs:
        nxt = [_ZERO] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            if c:
                nxt[i] += c * a
                nxt[i + 1] += c * b
        coeffs = nxt
    return coeffs


def _local_annihilators(arrangement: Arrangement, flat: Flat) -> tuple[tuple, list[list[Vector]]]:
    """For a rank-2 flat: the dual frame and, per local degree e up to the
    socle, the functionals on the degree-e Taylor coefficients that cut out
    the local Jacobian slice."""
    forms, u, v, e_u, e_v, e_w = _dual_frame(arrangement, flat)
    m = flat.size
    inv = Matrix([e_u, e_v, e_w]).transpose()
    pairs = []
    for f in forms:
        coords = tuple(
            sum((c * x for c, x in zip(f.coefficients, inv.column(j))), _ZERO)
            for j in range(3)
        )
        if coords[2] != 0:
            raise TheoremViolationError("flat form does not vanish at the flat point")
        pairs.append((coords[0], coords[1]))
    q_local = _bivariate_power_products(pairs)
    deg = m
    # Partials with respect to U and V of the local defining product.
    g_u = [q_local[i] * (deg - i) for i in range(deg)]
    g_v = [q_local[i + 1] * (i + 1) for i in range(deg)]
    socle = 2 * m - 4
    ann_per_degree: list[list[Vector]] = []
    for e in range(socle + 1):
        width = e + 1
        span_rows = []
        shift = e - (m - 1)
        if shift >= 0:
            for g in (g_u, g_v):
                for s in range(shift + 1):
                    row = [_ZERO] * width
                    for i, c in enumerate(g):
                        row[i + s] += c  # multiply by U^(shift-s) V^s
                    span_rows.append(row)
        if span_rows:
            ann = kernel_vectors(Matrix(span_rows, cols=width))
        else:
            ann = [tuple(_ONE if i == j else _ZERO for i in range(width)) for j in range(width)]
        ann_per_degree.append([tuple(a) for a in ann])
    return (e_u, e_v, e_w), ann_per_degree


def _point_condition_rows(
    arrangement: Arrangement, flat: Flat, degree: int
) -> list[Vector]:
    """Linear conditions on degree-d coefficient vectors cutting out the
    degree-d piece of the Jacobian ideal of the flat's lines."""
    (e_u, e_v, e_w), ann_per_degree = _local_annihilators(arrangement, flat)
    socle = len(ann_per_degree) - 1
    order = min(socle, degree)
    monos = monomials(arrangement.ambient, degree)
    jets = [_jets_of_monomial(e, e_w, e_u, e_v, order) for e in monos]
    rows: list[Vector] = []
    for e in range(order + 1):
        for ann in ann_per_degree[e]:
            row = []
            for jet in jets:
                total = _ZERO
                for i, c in enumerate(ann):
                    if c:
                        # ann coordinate i pairs with the U^(e-i) V^i coefficient.
                        val = jet.get((e - i, i))
                        if val:
                            total += c * val
                row.append(total)
            rows.append(tuple(row))
    return rows


def _vanishing_condition_rows(
    arrangement: Arrangement, flat: Flat, degree: int, order: int
) -> list[Vector]:
    """Conditions forcing vanishing to the given order at the flat's point,
    written with iterated coordinate partial derivatives (the independent
    order-of-vanishing oracle)."""
    point = _flat_point(arrangement, flat)
    monos = monomials(arrangement.ambient, degree)
    rows = []
    for total_order in range(order):
        for exps in _derivative_orders(arrangement.ambient, total_order):
            row = []
            for e in monos:
                row.append(_derivative_value(e, exps, point))
            rows.append(tuple(row))
    return rows


def _derivative_orders(nvars: int, total: int):
    if nvars == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for tail in _derivative_orders(nvars - 1, total - first):
            yield (first,) + tail


def _derivative_value(e: Exponent, orders: Exponent, point) -> Fraction:
    """Value at the point of the iterated partial derivative of a monomial."""
    coeff = 1
    value = _ONE
    for power, order, x in zip(e, orders, point):
        if order > power:
            return _ZERO
        for k in range(order):
            coeff *= power - k
        rest = power - order
        if rest:
            value *= x**rest
    return coeff * value


def _flat_point(arrangement: Arrangement, flat: Flat) -> Vector:
    vecs = kernel_vectors(
        Matrix([arrangement.forms[i].coefficients for i in flat.indices[:2]])
    )
    if len(vecs) != 1:
        raise TheoremViolationError("rank-2 flat has no unique point")
    return vecs[0]


def vanishing_order_slice(arrangement: Arrangement, degree: int) -> DegreeSlice:
    """Forms of the given degree vanishing to order (size - 1) at every
    rank-2 flat point: the independent oracle for the product ideal slices."""
    if arrangement.ell != 2:
        raise UnsupportedOperationError("vanishing-order oracle is for line arrangements")
    rows: list[Vector] = []
    for flat in flats_of_rank(arrangement, 2):
        rows.extend(
            _vanishing_condition_rows(arrangement, flat, degree, flat.size - 1)
        )
    ambient = comb(degree + 2, 2)
    space = SubspaceBasis.from_vectors(ambient, _kernel_of_rows(rows, ambient))
    return DegreeSlice(arrangement.ambient, degree, space)


def _kernel_of_rows(rows: list[Vector], ambient: int) -> list[Vector]:
    if not rows:
        return [tuple(_ONE if i == j else _ZERO for i in range(ambient)) for j in range(ambient)]
    return kernel_vectors(Matrix(rows, cols=ambient))


# ---------------------------------------------------------------------------
# saturation slices


def ksat_condition_rows(arrangement: Arrangement, degree: int) -> list[Vector]:
    """Stacked local Jacobian conditions over all rank-2 flats (line
    arrangements with rank 3)."""
    rows: list[Vector] = []
    for flat in flats_of_rank(arrangement, 2):
        rows.extend(_point_condition_rows(arrangement, flat, degree))
    return rows


def ksat_vectors(arrangement: Arrangement, k: int, degree: int) -> list[Vector]:
    """Spanning vectors of the degree-d piece of the codimension-k
    saturation (not necessarily canonical)."""
    if not 2 <= k <= max(arrangement.ell, 2):
        raise PreconditionError("saturation codimension must be between 2 and ell")
    if k >= rank(arrangement):
        return list(jacobian_slice(arrangement, degree).space.vectors)
    if k == 2 and arrangement.ell == 2:
        ambient = comb(degree + 2, 2)
        return _kernel_of_rows(ksat_condition_rows(arrangement, degree), ambient)
    # General route: intersect the per-flat ideal slices.
    return list(_ksat_slice_by_intersection(arrangement, k, degree).space.vectors)


@lru_cache(maxsize=None)
def ksat_slice(arrangement: Arrangement, k: int, degree: int) -> DegreeSlice:
    """Degree-d piece of the intersection over rank-k flats of the Jacobian
    ideals of their localizations."""
    vectors = ksat_vectors(arrangement, k, degree)
    ambient = comb(degree + arrangement.ell, arrangement.ell)
    return DegreeSlice(
        arrangement.ambient, degree, SubspaceBasis.from_vectors(ambient, vectors)
    )


def _ksat_slice_by_intersection(
    arrangement: Arrangement, k: int, degree: int
) -> DegreeSlice:
    """Reference route: explicit subspace intersection of the localized
    Jacobian slices (slow, used for cross-checks and higher ambient)."""
    ambient = comb(degree + arrangement.ell, arrangement.ell)
    space = None
    for flat in flats_of_rank(arrangement, k):
        local = Arrangement(
            [arrangement.forms[i].coefficients for i in flat.indices],
            ambient=arrangement.ambient,
        )
        piece = ideal_slice(partials(local), degree).space
        space = piece if space is None else subspace_intersect(space, piece)
    if space is None:
        raise PreconditionError("no flats at this rank")
    return DegreeSlice(arrangement.ambient, degree, space)


def sat_quotient_dim(arrangement: Arrangement, k: int, degree: int) -> int:
    """Dimension of (saturation / Jacobian) in the given degree, with the
    containment verified."""
    jac = jacobian_slice(arrangement, degree)
    sat = ksat_slice(arrangement, k, degree)
    if not sat.space.contains_subspace(jac.space):
        raise TheoremViolationError("Jacobian slice escapes its saturation slice")
    return sat.dim - jac.dim


# ---------------------------------------------------------------------------
# coefficient-vector bridge


def lambda_to_poly(arrangement: Arrangement, lam: Sequence) -> Polynomial:
    """The degree-(n-1) combination sum_i lam_i * Q/alpha_i (up to one global
    scalar).  The stored products carry the integer-clearing factor of the
    dropped form, so each one is rescaled by it to keep the combination
    proportional to the normalized-form version."""
    lam = [rat(x) for x in lam]
    if len(lam) != arrangement.n:
        raise DimensionMismatchError("coefficient vector length must match the arrangement")
    out = Polynomial.zero(arrangement.ambient)
    for c, form, p in zip(lam, arrangement.forms, products(arrangement)):
        if c:
            out = out + p.scale(c * _form_scale(form))
    return out


def poly_membership(poly: Polynomial, slice_: DegreeSlice) -> bool:
    if poly.is_zero():
        return True
    if poly.degree() != slice_.degree:
        raise DimensionMismatchError("degree does not match the slice")
    return slice_.contains(poly)


def divide_by_linear(poly: Polynomial, form: LinearForm) -> Polynomial:
    """Exact quotient poly / form; the form must divide evenly."""
    if poly.is_zero():
        return poly
    var = next(i for i, c in enumerate(form.coefficients) if c != 0)
    lead = form.coefficients[var]
    rest = [(i, c) for i, c in enumerate(form.coefficients) if c != 0 and i != var]
    remainder = dict(poly.terms)
    quotient: dict[Exponent, Fraction] = {}
    while remainder:
        e = max(remainder, key=lambda t: t[var])
        if e[var] == 0:
            raise PreconditionError("linear form does not divide the polynomial")
        c = remainder.pop(e)
        qe = list(e)
        qe[var] -= 1
        qe_t = tuple(qe)
        qc = c / lead
        quotient[qe_t] = quotient.get(qe_t, _ZERO) + qc
        for i, fc in rest:
            re = list(qe_t)
            re[i] += 1
            re_t = tuple(re)
            s = remainder.get(re_t, _ZERO) - qc * fc
            if s:
                remainder[re_t] = s
            else:
                remainder.pop(re_t, None)
    return Polynomial(poly.nvars, quotient)
