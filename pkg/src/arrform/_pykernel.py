"""Integer row reduction, the arithmetic core of the package.

Every exact computation here (ranks, kernels, canonical subspace forms,
graded ideal slices) funnels into Gaussian elimination of integer matrices.
Rows are lists of Python ints, so entries have arbitrary precision; each
combined row is divided by the gcd of its entries to keep growth in check.
Pivoting is deterministic (first nonzero row in column order, columns left
to right), which makes every downstream basis bit-reproducible.

A compiled twin of this module (arrform._ckernel, Cython) implements the
same contract for speed; arrform._kernel selects between them at import.
"""

from __future__ import annotations

from math import gcd

__all__ = ["eliminate", "dots"]


def _strip_content(row: list[int]) -> list[int]:
    """Divide a row by the gcd of its entries (no-op on zero rows)."""
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        for j, x in enumerate(row):
            if x:
                row[j] = x // g
    return row


def eliminate(rows: list[list[int]], ncols: int, full: bool = True):
    """Row reduce integer rows in place.

    ``rows`` is consumed: rows are reordered, rescaled, combined, and zero
    rows dropped.  Returns ``(rows, pivots)`` with ``pivots[k]`` the pivot
    column of ``rows[k]``.  Every surviving row is primitive with a positive
    pivot entry; with ``full=True`` the result is the unique such integer
    lift of the reduced row echelon form over the rationals (divide row k by
    its pivot entry to recover it).  With ``full=False`` only the forward
    pass runs, which is enough for ranks and back substitution.
    """
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        piv = _strip_content(rows[r])
        rows[r] = piv
        p = piv[c]
        piv_tail = piv[c:]
        for i in range(r + 1, nrows):
            ri = rows[i]
            a = ri[c]
            if a:
                g = gcd(p, a)
                pf = p // g
                af = a // g
                head = ri[:c]
                head.extend(pf * x - af * y for x, y in zip(ri[c:], piv_tail))
                rows[i] = _strip_content(head)
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    del rows[r:]

    if full:
        for k in range(len(pivots) - 1, 0, -1):
            c = pivots[k]
            piv = rows[k]
            p = piv[c]
            for i in range(k):
                ri = rows[i]
                a = ri[c]
                if a:
                    g = gcd(p, a)
                    pf = p // g
                    af = a // g
                    rows[i] = _strip_content(
                        [pf * x - af * y for x, y in zip(ri, piv)]
                    )

    for k, c in enumerate(pivots):
        if rows[k][c] < 0:
            rows[k] = [-x for x in rows[k]]
    return rows, pivots


def dots(left: list[list[int]], right: list[list[int]]) -> list[list[int]]:
    """Pairwise dot products: out[i][j] = left[i] . right[j]."""
    out = []
    for a in left:
        row = []
        for b in right:
            s = 0
            for x, y in zip(a, b):
                if x and y:
                    s += x * y
            row.append(s)
        out.append(row)
    return out
