"""Graded structure of the derivations annihilating the defining polynomial
of a line arrangement: degree slices, minimal generators and relations
(graded Betti numbers), Castelnuovo-Mumford regularity, freeness shape
classification, and the duality cross-check against the saturation quotient.

Everything is per-degree linear algebra.  The generator and relation windows
are capped at n-2 and n-1; the Hilbert-function consistency check in the
test-suite certifies that the resulting table resolves the module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Sequence

from arrform.arrangement import Arrangement, is_essential, is_irreducible_line_arrangement
from arrform.errors import (
    PreconditionError,
    TheoremViolationError,
    UnsupportedOperationError,
)
from arrform._kernel import dots
from arrform.exactlin import (
    Matrix,
    SubspaceBasis,
    Vector,
    _int_rows,
    kernel_vectors,
    kernel_vectors_int,
    rank_int,
)
from arrform.persp import is_formal
from arrform.polyjac import (
    jacobian_slice,
    ksat_vectors,
    monomials,
    partials,
    _monomial_index,
)

_ZERO = Fraction(0)


def _require_lines(arrangement: Arrangement) -> None:
    if arrangement.ell != 2:
        raise UnsupportedOperationError("derivation tables are implemented for line arrangements")


@dataclass(frozen=True)
class DerivationSlice:
    """Degree-e derivations (a, b, c) with a Qx + b Qy + c Qz = 0, as a
    canonical subspace of three stacked coefficient blocks."""

    degree: int
    basis: SubspaceBasis

    @property
    def dim(self) -> int:
        return self.basis.dim


def _slice_kernel_direct(arrangement: Arrangement, degree: int) -> list[Vector]:
    """Reference route: kernel of the multiplication map into degree
    degree + n - 1 by the three partials (dense, so only for cross-checks)."""
    n = arrangement.n
    cod_deg = degree + n - 1
    cod_index = _monomial_index(3, cod_deg)
    dom = monomials(3, degree)
    width = 3 * len(dom)
    rows = [[0] * width for _ in range(len(cod_index))]
    col = 0
    for part in partials(arrangement):
        terms = [(e, int(c)) for e, c in part.terms.items()]
        for m in dom:
            for e, c in terms:
                r = cod_index[e[0] + m[0], e[1] + m[1], e[2] + m[2]]
                rows[r][col] = c
            col += 1
    return kernel_vectors_int(rows, width)


def _integer_triple(form) -> tuple[int, int, int]:
    den = 1
    for c in form.coefficients:
        den = den // gcd(den, c.denominator) * c.denominator
    return tuple(int(c * den) for c in form.coefficients)


def _span_points(coeffs: tuple[int, int, int]) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    a, b, c = coeffs
    candidates = [(b, -a, 0), (c, 0, -a), (0, c, -b)]
    points = []
    for p in candidates:
        if any(p):
            g = 0
            for x in p:
                g = gcd(g, x)
            points.append(tuple(x // g for x in p))
    u = points[0]
    for v in points[1:]:
        cross = (
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        )
        if any(cross):
            return u, v
    raise TheoremViolationError("degenerate line form")


def _binomial_power(u: int, v: int, k: int) -> list[int]:
    """Coefficients of (u s + v t)^k, indexed by the power of t."""
    out = []
    for j in range(k + 1):
        out.append(comb(k, j) * u ** (k - j) * v**j)
    return out


def _convolve(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _restriction_table(degree: int, u, v) -> list[list[int]]:
    """Per degree-d monomial, the coefficient list of its restriction to the
    parameterized line s u + t v."""
    pows = [
        [_binomial_power(u[var], v[var], k) for k in range(degree + 1)]
        for var in range(3)
    ]
    yz_cache: dict[tuple[int, int], list[int]] = {}
    table = []
    for (p, q, r) in monomials(3, degree):
        tail = yz_cache.get((q, r))
        if tail is None:
            tail = _convolve(pows[1][q], pows[2][r])
            yz_cache[(q, r)] = tail
        table.append(_convolve(pows[0][p], tail))
    return table


def _tangency_kernel(arrangement: Arrangement, degree: int) -> list[Vector]:
    """Degree-d vector fields tangent to every line (the full logarithmic
    module in this degree, radial part included)."""
    return kernel_vectors_int(
        _tangency_rows(arrangement, degree), 3 * comb(degree + 2, 2)
    )


def _tangency_rows(arrangement: Arrangement, degree: int) -> list[list[int]]:
    """For each line, the conditions that the pushforward combination of a
    degree-d coefficient triple vanishes on it."""
    dom_size = comb(degree + 2, 2)
    width = 3 * dom_size
    rows: list[list[int]] = []
    for form in arrangement.forms:
        coeffs = _integer_triple(form)
        u, v = _span_points(coeffs)
        table = _restriction_table(degree, u, v)
        for k in range(degree + 1):
            row = [0] * width
            for var in range(3):
                c = coeffs[var]
                if c:
                    base = var * dom_size
                    for j in range(dom_size):
                        t = table[j][k]
                        if t:
                            row[base + j] = c * t
            rows.append(row)
    return rows


def _int_eval(poly, point: tuple[int, int, int]) -> int:
    """Integer polynomial value at an integer point (third coordinate 1)."""
    a, b, _ = point
    max_a = max((e[0] for e in poly.terms), default=0)
    max_b = max((e[1] for e in poly.terms), default=0)
    pow_a = [1] * (max_a + 1)
    for i in range(1, max_a + 1):
        pow_a[i] = pow_a[i - 1] * a
    pow_b = [1] * (max_b + 1)
    for i in range(1, max_b + 1):
        pow_b[i] = pow_b[i - 1] * b
    total = 0
    for e, c in poly.terms.items():
        total += int(c) * pow_a[e[0]] * pow_b[e[1]]
    return total


def _residue_points(arrangement: Arrangement, degree: int) -> list[tuple[int, int, int]]:
    """Integer points off the arrangement imposing independent conditions on
    forms of the given degree; independence is certified by a rank check of
    their evaluation matrix."""
    if degree < 0:
        return []
    needed = comb(degree + 2, 2)
    forms = arrangement.forms
    points: list[tuple[int, int, int]] = []
    s = 0
    while True:
        for a in range(s + 1):
            point = (a, s - a, 1)
            if any(f.evaluate(point) == 0 for f in forms):
                continue
            points.append(point)
        if len(points) >= needed:
            rows = []
            for p in points:
                rows.append([_monomial_int_value(m, p) for m in monomials(3, degree)])
            if rank_int(rows, needed) == needed:
                return points
        s += 1
        if s > 6 * (degree + arrangement.n + 2):
            raise TheoremViolationError("failed to certify residue evaluation points")


def _monomial_int_value(mono, point: tuple[int, int, int]) -> int:
    return point[0] ** mono[0] * point[1] ** mono[1] * point[2] ** mono[2]


def _residue_weights(arrangement: Arrangement, degree: int) -> list[list[int]]:
    """Per certified point, the weight vector whose dot with a coefficient
    triple evaluates the derivative of the defining product at that point."""
    dom = monomials(3, degree)
    dom_size = len(dom)
    parts = partials(arrangement)
    weights = []
    for p in _residue_points(arrangement, degree - 1):
        part_values = [_int_eval(q, p) for q in parts]
        mono_values = [_monomial_int_value(m, p) for m in dom]
        row = [0] * (3 * dom_size)
        for var in range(3):
            pv = part_values[var]
            if pv:
                base = var * dom_size
                for j, mv in enumerate(mono_values):
                    row[base + j] = pv * mv
        weights.append(row)
    return weights


def _clear_denominators(vec: Vector) -> list[int]:
    den = 1
    for x in vec:
        den = den // gcd(den, x.denominator) * x.denominator
    out = [int(x * den) for x in vec]
    g = 0
    for x in out:
        if x:
            g = gcd(g, x)
            if g == 1:
                return out
    if g > 1:
        out = [x // g for x in out]
    return out


def _slice_kernel(arrangement: Arrangement, degree: int) -> list[Vector]:
    """Derivations annihilating the defining product.

    Stage one solves the small-coefficient tangency system; stage two kills
    the logarithmic residue by evaluating the derivative of the defining
    product at certified points, expressed in stage-one coordinates."""
    width = 3 * comb(degree + 2, 2)
    tangent = kernel_vectors_int(_tangency_rows(arrangement, degree), width)
    if not tangent or degree == 0:
        return tangent
    basis = [_clear_denominators(v) for v in tangent]
    weights = _residue_weights(arrangement, degree)
    conditions = dots(weights, basis)
    combos = kernel_vectors_int(conditions, len(basis))
    kernel: list[Vector] = []
    for combo in combos:
        w = [_ZERO] * width
        for c, theta in zip(combo, basis):
            if c:
                for j, x in enumerate(theta):
                    if x:
                        w[j] += c * x
        kernel.append(tuple(w))
    if len(kernel) != len(tangent) - comb(degree + 1, 2):
        raise TheoremViolationError("tangent fields do not split off the radial part")
    return kernel


_SLICE_CACHE: dict[tuple[Arrangement, int], DerivationSlice] = {}
_DIM_CACHE: dict[tuple[Arrangement, int], int] = {}


def _job_count() -> int:
    import os

    env = os.environ.get("ARRFORM_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def d0_slice(arrangement: Arrangement, degree: int) -> DerivationSlice:
    _require_lines(arrangement)
    if degree < 0:
        raise PreconditionError("degree must be nonnegative")
    key = (arrangement, degree)
    cached = _SLICE_CACHE.get(key)
    if cached is None:
        vectors = _slice_kernel(arrangement, degree)
        width = 3 * comb(degree + 2, 2)
        cached = DerivationSlice(degree, SubspaceBasis.from_vectors(width, vectors))
        _SLICE_CACHE[key] = cached
        _DIM_CACHE[key] = cached.dim
    return cached


def d0_dim(arrangement: Arrangement, degree: int) -> int:
    """Slice dimension via the radial splitting: tangent fields minus the
    radial multiples.  Needs only a rank, not a kernel basis."""
    _require_lines(arrangement)
    if degree < 0:
        return 0
    key = (arrangement, degree)
    cached = _DIM_CACHE.get(key)
    if cached is None:
        width = 3 * comb(degree + 2, 2)
        tangent_dim = width - rank_int(_tangency_rows(arrangement, degree), width)
        cached = tangent_dim - comb(degree + 1, 2)
        _DIM_CACHE[key] = cached
    return cached


def _seed_slices(arrangement: Arrangement, degrees: Sequence[int]) -> None:
    """Fill the slice cache, fanning heavy degrees out over processes."""
    missing = [e for e in degrees if (arrangement, e) not in _SLICE_CACHE]
    jobs = min(_job_count(), len(missing))
    if jobs <= 1 or arrangement.n < 12:
        for e in missing:
            d0_slice(arrangement, e)
        return
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [(e, pool.submit(_slice_kernel, arrangement, e)) for e in missing]
        for e, fut in futures:
            width = 3 * comb(e + 2, 2)
            piece = DerivationSlice(e, SubspaceBasis.from_vectors(width, fut.result()))
            _SLICE_CACHE[(arrangement, e)] = piece
            _DIM_CACHE[(arrangement, e)] = piece.dim


def _shift_blocks(vector: Vector, block_monos, target_index, nblocks: int, var: int) -> Vector:
    """Multiply a block vector by the given variable: shift each block's
    monomial coordinates one degree up."""
    per_block = len(block_monos)
    out = [_ZERO] * (nblocks * len(target_index))
    for b in range(nblocks):
        base = b * per_block
        tbase = b * len(target_index)
        for i, m in enumerate(block_monos):
            c = vector[base + i]
            if c:
                e = list(m)
                e[var] += 1
                out[tbase + target_index[tuple(e)]] = c
    return tuple(out)


def _variable_shifts(vectors: Sequence[Vector], degree: int, nblocks: int) -> list[Vector]:
    """All x, y, z multiples of block vectors of the given degree."""
    block_monos = monomials(3, degree)
    target_index = _monomial_index(3, degree + 1)
    out = []
    for v in vectors:
        for var in range(3):
            out.append(_shift_blocks(v, block_monos, target_index, nblocks, var))
    return out


@dataclass(frozen=True, eq=False)
class BettiTable:
    """Graded Betti numbers of the annihilating-derivation module: b0 counts
    minimal generators per degree, b1 minimal relations per degree."""

    n: int
    b0: dict
    b1: dict
    regularity: int

    def to_json(self) -> dict:
        return {
            "lines": self.n,
            "generators": {str(k): v for k, v in sorted(self.b0.items())},
            "relations": {str(k): v for k, v in sorted(self.b1.items())},
            "regularity": self.regularity,
        }

    def rows(self) -> list[tuple[int, int, int]]:
        """(row index j, b0 in degree j, b1 in degree j+1), trimmed."""
        degrees = set(self.b0) | {d - 1 for d in self.b1}
        out = []
        for j in sorted(degrees):
            out.append((j, self.b0.get(j, 0), self.b1.get(j + 1, 0)))
        return out

    def render(self) -> str:
        lines = ["    |   0   1", "----+--------"]
        for j, g, s in self.rows():
            lines.append(f"{j:3d} | {g:3d} {s:3d}")
        return "\n".join(lines)


@dataclass(frozen=True)
class GeneratorData:
    degrees: tuple[int, ...]
    vectors: tuple[Vector, ...]
    slice_dims: dict


def _canonical_complement(total: SubspaceBasis, sub: SubspaceBasis) -> list[Vector]:
    """Rows of the canonical total basis whose pivots are new, reduced mod sub."""
    sub_pivots = set(sub.pivots)
    out = []
    for v, p in zip(total.vectors, total.pivots):
        if p not in sub_pivots:
            out.append(sub.reduce(v))
    return out


def _greedy_complement(total: SubspaceBasis, sub: SubspaceBasis) -> list[Vector]:
    """Alternative generator choice: grow the subspace greedily through the
    reversed canonical basis (used to confirm representative independence)."""
    chosen: list[Vector] = []
    current = sub
    for v in reversed(total.vectors):
        if not current.contains(v):
            chosen.append(v)
            current = SubspaceBasis.from_vectors(
                total.ambient_dim, list(current.vectors) + [v]
            )
    return chosen


def generator_data(arrangement: Arrangement, reverse: bool = False) -> GeneratorData:
    """Minimal generators of the derivation module: per degree, a complement
    of the variable multiples of the previous slice.  Below the first
    nonzero slice only dimensions are computed."""
    _require_lines(arrangement)
    if not is_essential(arrangement):
        raise PreconditionError("derivation tables need an essential arrangement")
    n = arrangement.n
    degrees: list[int] = []
    vectors: list[Vector] = []
    slice_dims: dict[int, int] = {}
    if d0_dim(arrangement, 0):
        raise TheoremViolationError("essential arrangement has constant derivations")
    slice_dims[0] = 0
    # Once the module is nonzero it stays nonzero, so scan dimensions only
    # until the first generator degree, then switch to full slices.
    first = None
    for e in range(1, n - 1):
        if d0_dim(arrangement, e):
            first = e
            break
        slice_dims[e] = 0
    if first is None:
        raise TheoremViolationError("derivation module empty through its generator window")
    _seed_slices(arrangement, range(first, n - 1))
    prev: SubspaceBasis | None = None
    for e in range(first, n - 1):
        cur = d0_slice(arrangement, e)
        slice_dims[e] = cur.dim
        if cur.dim == 0:
            raise TheoremViolationError("derivation module vanished after starting")
        if prev is None:
            sub = SubspaceBasis.zero(cur.basis.ambient_dim)
        else:
            shifted = _variable_shifts(prev.vectors, e - 1, 3)
            sub = SubspaceBasis.from_vectors(3 * comb(e + 2, 2), shifted)
            if not cur.basis.contains_subspace(sub):
                raise TheoremViolationError("variable multiples escaped the next slice")
        picker = _greedy_complement if reverse else _canonical_complement
        for v in picker(cur.basis, sub):
            degrees.append(e)
            vectors.append(v)
        prev = cur.basis
    return GeneratorData(tuple(degrees), tuple(vectors), slice_dims)


def _syzygy_space(
    arrangement: Arrangement, gens: GeneratorData, degree: int
) -> list[Vector]:
    """Kernel of the evaluation map from shifted generator coordinates into
    the degree-d derivation slice.  Columns are ordered by generator, then by
    the multiplying monomial."""
    columns: list[Vector] = []
    target_index = _monomial_index(3, degree)
    for gdeg, gvec in zip(gens.degrees, gens.vectors):
        if gdeg > degree:
            continue
        block_monos = monomials(3, gdeg)
        per_block = len(block_monos)
        for m in monomials(3, degree - gdeg):
            col = [_ZERO] * (3 * len(target_index))
            for b in range(3):
                base = b * per_block
                tbase = b * len(target_index)
                for i, mono in enumerate(block_monos):
                    c = gvec[base + i]
                    if c:
                        e = (mono[0] + m[0], mono[1] + m[1], mono[2] + m[2])
                        col[tbase + target_index[e]] += c
            columns.append(tuple(col))
    if not columns:
        return []
    rows = Matrix(zip(*columns), cols=len(columns))
    return kernel_vectors(rows)


def _syzygy_shift(
    gens: GeneratorData, vectors: Sequence[Vector], degree: int
) -> list[Vector]:
    """Variable multiples of degree-(d-1) syzygies inside the degree-d layout."""
    src_layout: list[tuple[int, slice]] = []
    out_vectors = []
    src_offsets = []
    offset = 0
    for gdeg in gens.degrees:
        size = comb(degree - 1 - gdeg + 2, 2) if gdeg <= degree - 1 else 0
        src_offsets.append((offset, size, gdeg))
        offset += size
    dst_offsets = []
    offset = 0
    for gdeg in gens.degrees:
        size = comb(degree - gdeg + 2, 2) if gdeg <= degree else 0
        dst_offsets.append((offset, size))
        offset += size
    total = offset
    for v in vectors:
        for var in range(3):
            out = [_ZERO] * total
            for (soff, ssize, gdeg), (doff, _) in zip(src_offsets, dst_offsets):
                if not ssize:
                    continue
                src_monos = monomials(3, degree - 1 - gdeg)
                target_index = _monomial_index(3, degree - gdeg)
                for i, m in enumerate(src_monos):
                    c = v[soff + i]
                    if c:
                        e = list(m)
                        e[var] += 1
                        out[doff + target_index[tuple(e)]] = c
            out_vectors.append(tuple(out))
    return out_vectors


def _betti(arrangement: Arrangement, reverse: bool = False) -> BettiTable:
    gens = generator_data(arrangement, reverse=reverse)
    n = arrangement.n
    b0: dict[int, int] = {}
    for d in gens.degrees:
        b0[d] = b0.get(d, 0) + 1
    b1: dict[int, int] = {}
    prev_syz: list[Vector] = []
    min_gen = min(gens.degrees) if gens.degrees else 0
    for f in range(min_gen + 1, n):
        syz = _syzygy_space(arrangement, gens, f)
        shifted = _syzygy_shift(gens, prev_syz, f) if prev_syz else []
        if shifted:
            width = len(shifted[0])
            old_dim = rank_int(_int_rows(shifted), width)
        else:
            old_dim = 0
        fresh = len(syz) - old_dim
        if fresh < 0:
            raise TheoremViolationError("syzygy shift produced excess dimension")
        if fresh:
            b1[f] = fresh
        prev_syz = syz
    if sum(b0.values()) - sum(b1.values()) != 2:
        raise TheoremViolationError("generator/relation counts do not leave rank 2")
    reg_candidates = [d for d in b0] + [d - 1 for d in b1]
    return BettiTable(n=n, b0=b0, b1=b1, regularity=max(reg_candidates))


@lru_cache(maxsize=None)
def betti_table(arrangement: Arrangement) -> BettiTable:
    """Minimal generator and relation counts per degree, with regularity."""
    _require_lines(arrangement)
    if not is_essential(arrangement):
        raise PreconditionError("derivation tables need an essential arrangement")
    return _betti(arrangement)


def expected_slice_dim(table: BettiTable, degree: int) -> int:
    """Slice dimension predicted by the table (projective dimension 1)."""
    total = 0
    for j, count in table.b0.items():
        if degree - j >= 0:
            total += count * comb(degree - j + 2, 2)
    for j, count in table.b1.items():
        if degree - j >= 0:
            total -= count * comb(degree - j + 2, 2)
    return total


def max_degree_syzygy_dim(arrangement: Arrangement) -> int:
    """Count of minimal relations in the top possible degree n-1."""
    table = betti_table(arrangement)
    return table.b1.get(arrangement.n - 1, 0)


def regularity(arrangement: Arrangement) -> int:
    return betti_table(arrangement).regularity


@dataclass(frozen=True)
class Classification:
    kind: str  # free | nearly_free | plus_one | other
    exponents: tuple[int, ...] | None
    level: int | None
    table: BettiTable

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "exponents": list(self.exponents) if self.exponents else None,
            "level": self.level,
            "table": self.table.to_json(),
        }


def classify(arrangement: Arrangement) -> Classification:
    """Shape of the minimal resolution: free, nearly free, plus-one
    generated, or other."""
    table = betti_table(arrangement)
    gen_degrees: list[int] = []
    for d in sorted(table.b0):
        gen_degrees.extend([d] * table.b0[d])
    if not table.b1:
        return Classification("free", tuple(gen_degrees), None, table)
    if len(gen_degrees) == 3:
        a, b, d = gen_degrees
        if table.b1 == {d + 1: 1}:
            if b == d:
                return Classification("nearly_free", (a, b), None, table)
            return Classification("plus_one", (a, b), d, table)
    return Classification("other", None, None, table)


@dataclass(frozen=True, eq=False)
class DualityReport:
    derivation_b1: dict
    quotient_b0: dict
    agree: bool

    def to_json(self) -> dict:
        return {
            "derivation_relations": {str(k): v for k, v in sorted(self.derivation_b1.items())},
            "saturation_quotient_generators": {
                str(k): v for k, v in sorted(self.quotient_b0.items())
            },
            "agree": self.agree,
        }


def duality_check(arrangement: Arrangement) -> DualityReport:
    """Generators of (saturation / Jacobian) per degree, computed from the
    saturation pipeline, against relations of the derivation module mirrored
    at degree 2n - 2.  A mismatch is an internal error, not bad input."""
    _require_lines(arrangement)
    table = betti_table(arrangement)
    n = arrangement.n
    quotient_b0: dict[int, int] = {}
    prev_kernel: list[Vector] = []
    lo, hi = n - 1, max(2 * n - 4, n - 1)
    for d in range(lo, hi + 1):
        kernel = ksat_vectors(arrangement, 2, d)
        jac = jacobian_slice(arrangement, d)
        m_dim = len(kernel) - jac.dim
        if m_dim < 0:
            raise TheoremViolationError("Jacobian slice exceeds saturation slice")
        if m_dim:
            span = list(jac.space.vectors) + _variable_shifts_flat(prev_kernel, d - 1)
            reach = rank_int(_int_rows(span), comb(d + 2, 2))
            fresh = len(kernel) - reach
            if fresh:
                quotient_b0[d] = fresh
        prev_kernel = kernel
    # The quotient module must vanish above the window.
    for d in (hi + 1, hi + 2):
        if len(ksat_vectors(arrangement, 2, d)) != jacobian_slice(arrangement, d).dim:
            raise TheoremViolationError("saturation quotient persists above its window")
    mirrored = {2 * n - 2 - j: count for j, count in table.b1.items()}
    agree = mirrored == quotient_b0
    return DualityReport(dict(table.b1), quotient_b0, agree)


def _variable_shifts_flat(vectors: Sequence[Vector], degree: int) -> list[Vector]:
    """x, y, z multiples of plain degree-d coefficient vectors."""
    if not vectors:
        return []
    monos = monomials(3, degree)
    target_index = _monomial_index(3, degree + 1)
    out = []
    for v in vectors:
        for var in range(3):
            w = [_ZERO] * len(target_index)
            for i, m in enumerate(monos):
                c = v[i]
                if c:
                    e = list(m)
                    e[var] += 1
                    w[target_index[tuple(e)]] = c
            out.append(tuple(w))
    return out


def formality_via_regularity(arrangement: Arrangement) -> bool:
    """Formality read off the regularity: strictly below n-2 means formal.
    Only valid for irreducible line arrangements; cross-checked against the
    representation-space verdict."""
    _require_lines(arrangement)
    if not is_irreducible_line_arrangement(arrangement):
        raise PreconditionError("regularity criterion needs an irreducible line arrangement")
    verdict = regularity(arrangement) < arrangement.n - 2
    if verdict != is_formal(arrangement):
        raise TheoremViolationError("regularity and representation verdicts disagree")
    return verdict
