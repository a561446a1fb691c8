# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of arrform._pykernel.

Same contract as the pure-Python ``eliminate``: deterministic integer
Gauss-Jordan with per-row content reduction.  Entries stay Python ints
(arbitrary precision); Cython removes the interpreter overhead of the
inner loops, which dominates on the large graded-slice matrices.
"""

from math import gcd


cdef list _strip_content(list row):
    cdef Py_ssize_t j, n = len(row)
    cdef object g = 0
    cdef object x
    for j in range(n):
        x = row[j]
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        for j in range(n):
            x = row[j]
            if x:
                row[j] = x // g
    return row


cdef list _combine(list ri, list piv, object pf, object af, Py_ssize_t start):
    """pf * ri - af * piv on columns >= start, entries before kept as is."""
    cdef Py_ssize_t j, n = len(ri)
    cdef list out = ri[:start]
    cdef object x, y
    for j in range(start, n):
        x = ri[j]
        y = piv[j]
        if y:
            if x:
                out.append(pf * x - af * y)
            else:
                out.append(-af * y)
        else:
            if x:
                out.append(pf * x)
            else:
                out.append(0)
    return out


def eliminate(list rows, Py_ssize_t ncols, bint full=True):
    """See arrform._pykernel.eliminate for the contract."""
    cdef Py_ssize_t nrows = len(rows)
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, k, pr, m
    cdef list piv, ri
    cdef object p, a, g, pf, af

    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            ri = rows[i]
            if ri[c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        piv = _strip_content(rows[r])
        rows[r] = piv
        p = piv[c]
        for i in range(r + 1, nrows):
            ri = rows[i]
            a = ri[c]
            if a:
                g = gcd(p, a)
                pf = p // g
                af = a // g
                rows[i] = _strip_content(_combine(ri, piv, pf, af, c))
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
                    rows[i] = _strip_content(_combine(ri, piv, pf, af, 0))

    for k in range(len(pivots)):
        c = pivots[k]
        ri = rows[k]
        if ri[c] < 0:
            rows[k] = [-x for x in ri]
    return rows, pivots


def dots(list left, list right):
    """Pairwise dot products: out[i][j] = left[i] . right[j]."""
    cdef list out = [], row, a, b
    cdef Py_ssize_t i, j, k, n
    cdef object s, x, y
    for i in range(len(left)):
        a = left[i]
        n = len(a)
        row = []
        for j in range(len(right)):
            b = right[j]
            s = 0
            for k in range(n):
                x = a[k]
                if x:
                    y = b[k]
                    if y:
                        s = s + x * y
            row.append(s)
        out.append(row)
    return out
