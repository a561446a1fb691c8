"""Central arrangements of hyperplanes in projective space.

An arrangement is an ordered list of distinct normalized linear forms in
ell + 1 variables.  This module enumerates flats of the underlying linear
matroid, builds the coefficient matrix and the stacked local-relation
matrices, and decides positional predicates (essential, separator,
irreducible, general position).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from arrform.errors import (
    DimensionMismatchError,
    InputError,
    PreconditionError,
    UnsupportedOperationError,
)
from arrform.exactlin import (
    Matrix,
    SubspaceBasis,
    Vector,
    kernel_basis,
    rank as matrix_rank,
    rat,
    vector,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class LinearForm:
    """Nonzero linear form, normalized so its first nonzero coefficient is 1."""

    coefficients: Vector

    def __init__(self, coefficients: Iterable):
        coeffs = vector(coefficients)
        lead = next((c for c in coeffs if c != 0), None)
        if lead is None:
            raise InputError("linear form must be nonzero")
        if lead != 1:
            coeffs = tuple(c / lead for c in coeffs)
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def nvars(self) -> int:
        return len(self.coefficients)

    def evaluate(self, point: Sequence) -> Fraction:
        return sum((c * rat(p) for c, p in zip(self.coefficients, point)), _ZERO)

    def __str__(self) -> str:
        names = _variable_names(self.nvars)
        parts = []
        for c, name in zip(self.coefficients, names):
            if c == 0:
                continue
            if c == 1:
                parts.append(f"+ {name}")
            elif c == -1:
                parts.append(f"- {name}")
            elif c > 0:
                parts.append(f"+ {c}*{name}")
            else:
                parts.append(f"- {-c}*{name}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text


def _variable_names(nvars: int) -> list[str]:
    if nvars <= 3:
        return ["x", "y", "z"][:nvars]
    return [f"x{i}" for i in range(nvars)]


def form_combination(a: LinearForm, scale, b: LinearForm) -> LinearForm:
    """The normalized form a + scale * b."""
    s = rat(scale)
    return LinearForm(tuple(x + s * y for x, y in zip(a.coefficients, b.coefficients)))


@dataclass(frozen=True)
class Flat:
    """Closed set of hyperplane indices together with its matroid rank."""

    indices: tuple[int, ...]
    rank: int

    @property
    def size(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class Arrangement:
    """Ordered arrangement of n distinct hyperplanes in P^ell."""

    ambient: int
    forms: tuple[LinearForm, ...]

    def __init__(self, forms: Iterable, ambient: int | None = None):
        forms = tuple(
            f if isinstance(f, LinearForm) else LinearForm(f) for f in forms
        )
        if not forms:
            raise InputError("an arrangement needs at least one hyperplane")
        width = forms[0].nvars
        if ambient is None:
            ambient = width
        if any(f.nvars != ambient for f in forms):
            raise DimensionMismatchError("all forms must have the same number of variables")
        if len(set(forms)) != len(forms):
            raise InputError("arrangement hyperplanes must be pairwise distinct")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "forms", forms)

    @property
    def n(self) -> int:
        return len(self.forms)

    @property
    def ell(self) -> int:
        return self.ambient - 1

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient,
            "forms": [[str(c) for c in f.coefficients] for f in self.forms],
        }

    @classmethod
    def from_json(cls, payload: dict | str) -> "Arrangement":
        if isinstance(payload, str):
            payload = json.loads(payload)
        try:
            ambient = int(payload["ambient"])
            forms = [[rat(c) for c in row] for row in payload["forms"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad arrangement payload: {exc}") from exc
        return cls(forms, ambient=ambient)


def coefficient_matrix(arrangement: Arrangement) -> Matrix:
    """(ell+1) x n matrix whose i-th column holds the coefficients of form i."""
    return Matrix.from_columns([f.coefficients for f in arrangement.forms])


def _span_of_forms(arrangement: Arrangement, indices: Sequence[int]) -> SubspaceBasis:
    return SubspaceBasis.from_vectors(
        arrangement.ambient, [arrangement.forms[i].coefficients for i in indices]
    )


@lru_cache(maxsize=None)
def rank(arrangement: Arrangement) -> int:
    return matrix_rank(coefficient_matrix(arrangement))


def subset_rank(arrangement: Arrangement, indices: Sequence[int]) -> int:
    return matrix_rank(
        Matrix([arrangement.forms[i].coefficients for i in indices])
    )


@lru_cache(maxsize=None)
def flats(arrangement: Arrangement, k: int) -> tuple[Flat, ...]:
    """All flats of rank at most k, closed and duplicate free, in (rank, indices) order.

    Flats of every rank r <= min(k, rank) are produced by closing the
    independent r-subsets; for k past the arrangement rank the list simply
    tops out at the full ground set (the non-essential convention).
    """
    if not 1 <= k <= arrangement.ambient:
        raise PreconditionError(f"flat rank bound must be between 1 and {arrangement.ambient}")
    n = arrangement.n
    top = min(k, rank(arrangement))
    found: dict[tuple[int, ...], Flat] = {}
    for i in range(n):
        found[(i,)] = Flat((i,), 1)
    for r in range(2, top + 1):
        for combo in itertools.combinations(range(n), r):
            if subset_rank(arrangement, combo) != r:
                continue
            span = _span_of_forms(arrangement, combo)
            closure = tuple(
                j
                for j in range(n)
                if j in combo or span.contains(arrangement.forms[j].coefficients)
            )
            if closure not in found:
                found[closure] = Flat(closure, r)
    return tuple(sorted(found.values(), key=lambda f: (f.rank, f.indices)))


def flats_of_rank(arrangement: Arrangement, r: int) -> tuple[Flat, ...]:
    """Flats of rank exactly min(r, rank), per the non-essential convention."""
    r_eff = min(r, rank(arrangement))
    return tuple(f for f in flats(arrangement, r_eff) if f.rank == r_eff)


def relation_space(arrangement: Arrangement, flat: Flat) -> SubspaceBasis:
    """Linear relations among the forms of the flat, embedded in K^n."""
    cols = [arrangement.forms[i].coefficients for i in flat.indices]
    local = kernel_basis(Matrix.from_columns(cols))
    n = arrangement.n
    embedded = []
    for v in local.vectors:
        w = [_ZERO] * n
        for pos, value in zip(flat.indices, v):
            w[pos] = value
        embedded.append(w)
    return SubspaceBasis.from_vectors(n, embedded)


def relation_matrix(arrangement: Arrangement, k: int) -> Matrix:
    """Local relations of the rank-(k-1) flats, stacked in flat order.

    Row count is the sum of size - rank over those flats; the kernel of this
    matrix is the space of coefficient vectors satisfying every local
    relation.
    """
    if not 3 <= k <= arrangement.ambient:
        raise PreconditionError(f"rank bound must be between 3 and {arrangement.ambient}")
    rows: list[Vector] = []
    for flat in flats_of_rank(arrangement, k - 1):
        if flat.size > flat.rank:
            rows.extend(relation_space(arrangement, flat).vectors)
    return Matrix(rows, cols=arrangement.n)


def is_essential(arrangement: Arrangement) -> bool:
    return rank(arrangement) == arrangement.ambient


def is_separator(arrangement: Arrangement, index: int) -> bool:
    """True when deleting hyperplane ``index`` drops the rank."""
    if arrangement.n == 1:
        return True
    remaining = [f.coefficients for j, f in enumerate(arrangement.forms) if j != index]
    return matrix_rank(Matrix(remaining)) < rank(arrangement)


def is_irreducible_line_arrangement(arrangement: Arrangement) -> bool:
    """No product decomposition; for lines this means essential and not a near-pencil."""
    if arrangement.ell != 2:
        raise UnsupportedOperationError("irreducibility is implemented for line arrangements only")
    if not is_essential(arrangement):
        return False
    n = arrangement.n
    return all(f.size < n - 1 for f in flats_of_rank(arrangement, 2))


def general_position_form(arrangement: Arrangement, k: int) -> LinearForm:
    """A hyperplane containing no flat of rank at most k.

    Deterministic search over the moment-curve forms x0 + c x1 + ... + c^ell
    with c = 1, 2, 3, ...; each proper flat rules out finitely many c, so the
    search terminates.  Only proper flats (rank <= ell) can be contained in a
    hyperplane, so the test caps the rank there.
    """
    if not 1 <= k <= arrangement.ambient:
        raise PreconditionError(f"rank bound must be between 1 and {arrangement.ambient}")
    cap = min(k, arrangement.ell)
    spans = [
        _span_of_forms(arrangement, f.indices)
        for f in flats(arrangement, max(cap, 1))
        if f.rank <= cap
    ]
    c = 1
    while True:
        candidate = LinearForm([rat(c) ** i for i in range(arrangement.ambient)])
        if not any(span.contains(candidate.coefficients) for span in spans):
            return candidate
        c += 1
