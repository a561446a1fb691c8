"""Exact rational linear algebra: matrices, ranks, kernels, subspace lattice.

Scalars are ``fractions.Fraction`` (arbitrary precision, reduced, positive
denominator), so every rank decision is exact; there is no floating point
anywhere in the package.  Subspaces are kept in a canonical reduced echelon
form, which turns subspace equality into structural equality.

All values are immutable after construction and all operations are pure
functions, so they can be shared freely between concurrent tasks.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from arrform._kernel import eliminate
from arrform.errors import DimensionMismatchError, PreconditionError

Rational = Fraction
Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rat(value) -> Fraction:
    """Coerce ints, Fractions, or strings like '3/4' to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) or isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def vector(values: Iterable) -> Vector:
    return tuple(rat(v) for v in values)


def _int_rows(rows: Iterable[Sequence[Fraction]]) -> list[list[int]]:
    """Clear denominators row by row; row scaling preserves row space and kernel."""
    out = []
    for row in rows:
        den = 1
        for x in row:
            d = x.denominator
            if d != 1:
                den = den // gcd(den, d) * d
        if den == 1:
            out.append([x.numerator for x in row])
        else:
            out.append([x.numerator * (den // x.denominator) for x in row])
    return out


class Matrix:
    """Immutable dense matrix of Fractions, stored row major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(vector(r) for r in data)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise DimensionMismatchError("ragged rows")
            if cols is not None and cols != width:
                raise DimensionMismatchError("cols does not match row width")
            cols = width
        elif cols is None:
            raise DimensionMismatchError("empty matrix needs an explicit column count")
        self.rows = len(rows)
        self.cols = cols
        self.data = rows

    @classmethod
    def from_columns(cls, columns: Iterable[Iterable], rows: int | None = None) -> "Matrix":
        cols = [vector(c) for c in columns]
        if not cols:
            if rows is None:
                raise DimensionMismatchError("empty matrix needs an explicit row count")
            return cls([() for _ in range(rows)], cols=0)
        return cls(zip(*cols))

    def entry(self, i: int, j: int) -> Fraction:
        return self.data[i][j]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def transpose(self) -> "Matrix":
        if self.rows == 0:
            return Matrix([[] for _ in range(self.cols)] if self.cols else [], cols=0)
        return Matrix(zip(*self.data), cols=self.rows)

    def mul_vector(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatchError("vector length does not match column count")
        return tuple(sum((a * b for a, b in zip(row, v)), _ZERO) for row in self.data)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.cols, self.data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Matrix({self.rows}x{self.cols}: {body})"


def rank(m: Matrix) -> int:
    _, pivots = eliminate(_int_rows(m.data), m.cols, full=False)
    return len(pivots)


def rref_rank(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form of m (same shape) and its rank."""
    rows, pivots = eliminate(_int_rows(m.data), m.cols, full=True)
    out = [
        tuple(Fraction(x, row[c]) for x in row) for row, c in zip(rows, pivots)
    ]
    zero = (_ZERO,) * m.cols
    out.extend([zero] * (m.rows - len(out)))
    return Matrix(out, cols=m.cols), len(pivots)


def _rref_kernel_vectors(rows: list[list[int]], pivots: list[int], ncols: int) -> list[Vector]:
    """Kernel vectors read off a fully reduced integer matrix: one vector per
    free column f, with a unit at f and -R[k][f]/R[k][pivot] at each pivot."""
    pivot_set = set(pivots)
    vectors = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        vec = [_ZERO] * ncols
        vec[f] = _ONE
        for k, c in enumerate(pivots):
            if c > f:
                break
            x = rows[k][f]
            if x:
                vec[c] = Fraction(-x, rows[k][c])
        vectors.append(tuple(vec))
    return vectors


def kernel_vectors(m: Matrix) -> list[Vector]:
    """A (not necessarily canonical) basis of the right kernel of m."""
    rows, pivots = eliminate(_int_rows(m.data), m.cols, full=True)
    return _rref_kernel_vectors(rows, pivots, m.cols)


def kernel_vectors_int(int_rows: list[list[int]], ncols: int) -> list[Vector]:
    """Kernel basis for integer rows, skipping the Matrix layer.

    Consumes ``int_rows`` like the elimination kernel does."""
    rows, pivots = eliminate(int_rows, ncols, full=True)
    return _rref_kernel_vectors(rows, pivots, ncols)


def rank_int(int_rows: list[list[int]], ncols: int) -> int:
    """Rank of integer rows (consumes the list)."""
    _, pivots = eliminate(int_rows, ncols, full=False)
    return len(pivots)


def kernel_basis(m: Matrix) -> "SubspaceBasis":
    """Canonical basis of { v : m v = 0 }."""
    return SubspaceBasis.from_vectors(m.cols, kernel_vectors(m))


def kernel_dim(m: Matrix) -> int:
    return m.cols - rank(m)


class SubspaceBasis:
    """Canonical basis of a subspace of a coordinate space.

    Internally the basis vectors are the RREF rows of any spanning set; the
    public basis matrix carries them as columns (reduced column echelon form
    with unit pivots), so two equal subspaces yield identical objects.
    """

    __slots__ = ("ambient_dim", "vectors", "pivots")

    def __init__(self, ambient_dim: int, vectors: tuple[Vector, ...], pivots: tuple[int, ...]):
        self.ambient_dim = ambient_dim
        self.vectors = vectors
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "SubspaceBasis":
        vecs = [vector(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionMismatchError("vector length does not match ambient dimension")
        rows, pivots = eliminate(_int_rows(vecs), ambient_dim, full=True)
        canon = tuple(
            tuple(Fraction(x, row[c]) for x in row) for row, c in zip(rows, pivots)
        )
        return cls(ambient_dim, canon, tuple(pivots))

    @classmethod
    def zero(cls, ambient_dim: int) -> "SubspaceBasis":
        return cls(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "SubspaceBasis":
        eye = []
        for i in range(ambient_dim):
            row = [_ZERO] * ambient_dim
            row[i] = _ONE
            eye.append(tuple(row))
        return cls(ambient_dim, tuple(eye), tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def basis(self) -> Matrix:
        """Basis matrix: one column per basis vector, reduced column echelon."""
        if not self.vectors:
            return Matrix([[] for _ in range(self.ambient_dim)], cols=0)
        return Matrix(zip(*self.vectors), cols=self.dim)

    def is_zero(self) -> bool:
        return not self.vectors

    def reduce(self, v: Sequence) -> Vector:
        """Residue of v after subtracting its projection onto the subspace."""
        w = list(vector(v))
        if len(w) != self.ambient_dim:
            raise DimensionMismatchError("vector length does not match ambient dimension")
        for row, c in zip(self.vectors, self.pivots):
            coeff = w[c]
            if coeff:
                for j, x in enumerate(row):
                    if x:
                        w[j] -= coeff * x
        return tuple(w)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def contains_subspace(self, other: "SubspaceBasis") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatchError("ambient dimensions differ")
        return all(self.contains(v) for v in other.vectors)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubspaceBasis)
            and self.ambient_dim == other.ambient_dim
            and self.vectors == other.vectors
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.vectors))

    def __repr__(self) -> str:
        return f"SubspaceBasis(dim {self.dim} in K^{self.ambient_dim})"


def subspace_sum(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError("ambient dimensions differ")
    return SubspaceBasis.from_vectors(a.ambient_dim, list(a.vectors) + list(b.vectors))


def subspace_intersect(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError("ambient dimensions differ")
    if a.is_zero() or b.is_zero():
        return SubspaceBasis.zero(a.ambient_dim)
    # v lies in both spans iff v = A x = -B y for some kernel vector (x, y) of [A | B].
    stacked = Matrix(
        [list(av) + list(bv) for av, bv in zip(zip(*a.vectors), zip(*b.vectors))],
        cols=a.dim + b.dim,
    )
    meet = []
    for k in kernel_vectors(stacked):
        x = k[: a.dim]
        v = [_ZERO] * a.ambient_dim
        for coeff, row in zip(x, a.vectors):
            if coeff:
                for j, e in enumerate(row):
                    if e:
                        v[j] += coeff * e
        meet.append(v)
    return SubspaceBasis.from_vectors(a.ambient_dim, meet)


def quotient_dim(big: SubspaceBasis, small: SubspaceBasis) -> int:
    if big.ambient_dim != small.ambient_dim:
        raise DimensionMismatchError("ambient dimensions differ")
    if not big.contains_subspace(small):
        raise PreconditionError("quotient_dim: small is not contained in big")
    return big.dim - small.dim
