"""Weak perspective representations of an arrangement up to a rank bound.

The verdicts (formal, k-generated, nontrivial dimension) come from pure
linear algebra: the kernel of the stacked local-relation matrix modulo the
row space of the coefficient matrix.  No auxiliary hyperplane enters those
computations; one is only needed to realize an explicit perspective
arrangement from a coefficient vector.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from arrform.arrangement import (
    Arrangement,
    LinearForm,
    coefficient_matrix,
    flats,
    form_combination,
    general_position_form,
    rank,
    relation_matrix,
    subset_rank,
)
from arrform.errors import (
    DegenerateRealizationError,
    DimensionMismatchError,
    PreconditionError,
    TheoremViolationError,
)
from arrform.exactlin import (
    Matrix,
    SubspaceBasis,
    Vector,
    kernel_basis,
    vector,
)


def trivial_space(arrangement: Arrangement) -> SubspaceBasis:
    """Coefficient vectors of trivial representations: the row space of the
    coefficient matrix, of dimension rank(arrangement)."""
    return SubspaceBasis.from_vectors(
        arrangement.n, coefficient_matrix(arrangement).data
    )


@dataclass(frozen=True)
class WPRepReport:
    k: int
    dim_trivial: int
    dim_total: int
    dim_nontrivial: int
    basis_nontrivial: tuple[Vector, ...]

    def to_json(self) -> dict:
        return {
            "rank_bound": self.k,
            "dim_trivial": self.dim_trivial,
            "dim_total": self.dim_total,
            "dim_nontrivial": self.dim_nontrivial,
            "basis_nontrivial": [[str(x) for x in v] for v in self.basis_nontrivial],
        }


@lru_cache(maxsize=None)
def wprep_report(arrangement: Arrangement, k: int) -> WPRepReport:
    """Dimensions of the representation space at rank bound k.

    dim_total is the kernel dimension of the stacked relation matrix,
    dim_trivial the rank of the arrangement, and the nontrivial basis
    completes the trivial space to the kernel, reduced modulo it.
    """
    if k < 3:
        raise PreconditionError("rank bound below 3 carries no matroid information")
    total = kernel_basis(relation_matrix(arrangement, k))
    trivial = trivial_space(arrangement)
    if not total.contains_subspace(trivial):
        raise TheoremViolationError(
            "trivial representations escaped the relation kernel"
        )
    trivial_pivots = set(trivial.pivots)
    extra = []
    for v, p in zip(total.vectors, total.pivots):
        if p not in trivial_pivots:
            extra.append(trivial.reduce(v))
    if len(extra) != total.dim - trivial.dim:
        raise TheoremViolationError("complement extraction lost vectors")
    return WPRepReport(
        k=k,
        dim_trivial=trivial.dim,
        dim_total=total.dim,
        dim_nontrivial=total.dim - trivial.dim,
        basis_nontrivial=tuple(extra),
    )


def is_k_generated(arrangement: Arrangement, k: int) -> bool:
    return wprep_report(arrangement, k).dim_nontrivial == 0


def is_formal(arrangement: Arrangement) -> bool:
    return is_k_generated(arrangement, 3)


@dataclass(frozen=True)
class PerspectiveDatum:
    """A realization recipe: base arrangement, admissible hyperplane, and a
    coefficient vector from the rank-bounded representation space."""

    base: Arrangement
    h0: LinearForm
    lam: Vector
    rank_bound: int

    def __init__(self, base: Arrangement, h0: LinearForm, lam: Sequence, rank_bound: int):
        lam = vector(lam)
        if len(lam) != base.n:
            raise DimensionMismatchError("coefficient vector length must match the arrangement")
        if rank_bound < 3:
            raise PreconditionError("rank bound below 3 carries no matroid information")
        if h0.nvars != base.ambient:
            raise DimensionMismatchError("hyperplane lives in the wrong ambient space")
        if not _in_general_position(base, h0, rank_bound):
            raise PreconditionError("hyperplane is not in general position at this rank bound")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "h0", h0)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "rank_bound", rank_bound)


def _in_general_position(arrangement: Arrangement, h0: LinearForm, k: int) -> bool:
    cap = min(k, arrangement.ell)
    for flat in flats(arrangement, max(cap, 1)):
        if flat.rank > cap:
            continue
        span = SubspaceBasis.from_vectors(
            arrangement.ambient,
            [arrangement.forms[i].coefficients for i in flat.indices],
        )
        if span.contains(h0.coefficients):
            return False
    return True


def default_perspective_hyperplane(arrangement: Arrangement, k: int) -> LinearForm:
    return general_position_form(arrangement, min(k, arrangement.ambient))


def realize(datum: PerspectiveDatum) -> Arrangement:
    """The perspective arrangement with forms base_j + lam_j * h0."""
    base = datum.base
    n_matrix = relation_matrix(base, datum.rank_bound)
    if any(x != 0 for x in n_matrix.mul_vector(datum.lam)):
        raise PreconditionError(
            "coefficient vector violates a local relation at this rank bound"
        )
    new_forms = [
        form_combination(f, lam_j, datum.h0)
        for f, lam_j in zip(base.forms, datum.lam)
    ]
    if len(set(new_forms)) != len(new_forms):
        raise DegenerateRealizationError("two realized hyperplanes coincide")
    realized = Arrangement(new_forms, ambient=base.ambient)
    for old, new in zip(base.forms, realized.forms):
        before = SubspaceBasis.from_vectors(
            base.ambient, [old.coefficients, datum.h0.coefficients]
        )
        after = SubspaceBasis.from_vectors(
            base.ambient, [new.coefficients, datum.h0.coefficients]
        )
        if before != after:
            raise TheoremViolationError("realized hyperplane lost perspectivity")
    return realized


def verify_weak_rep(a: Arrangement, b: Arrangement, k: int) -> bool:
    """True when every dependency of size at most k among the forms of a
    also holds among the corresponding forms of b."""
    if a.n != b.n or a.ambient != b.ambient:
        raise DimensionMismatchError("arrangements must share size and ambient dimension")
    for size in range(3, min(k, a.n) + 1):
        for combo in itertools.combinations(range(a.n), size):
            if subset_rank(a, combo) < size and subset_rank(b, combo) >= size:
                return False
    return True
