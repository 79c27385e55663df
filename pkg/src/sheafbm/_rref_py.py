"""Pure-Python row-reduction kernels (reference implementation).

The compiled extension `_rref_cy` provides the same three functions; callers
go through `sheafbm.linalg`, which picks the kernel at import time.  Pivoting
is deterministic: leftmost unfinished column, topmost nonzero row, pivot
scaled to 1, full reduction above and below.
"""

from __future__ import annotations

from fractions import Fraction


def rref_qq(rows):
    """Reduced row echelon form over the rationals.

    rows: list of equal-length lists of Fractions (consumed as read-only).
    Returns (new rows, pivot column list).
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    pr = 0
    for pc in range(ncols):
        pivot_row = -1
        for r in range(pr, nrows):
            if m[r][pc] != 0:
                pivot_row = r
                break
        if pivot_row < 0:
            continue
        if pivot_row != pr:
            m[pr], m[pivot_row] = m[pivot_row], m[pr]
        inv = 1 / m[pr][pc]
        if inv != 1:
            row = m[pr]
            for c in range(pc, ncols):
                if row[c]:
                    row[c] *= inv
        prow = m[pr]
        for r in range(nrows):
            if r == pr:
                continue
            f = m[r][pc]
            if f == 0:
                continue
            row = m[r]
            for c in range(pc, ncols):
                if prow[c]:
                    row[c] -= f * prow[c]
        pivots.append(pc)
        pr += 1
        if pr == nrows:
            break
    return m, pivots


def rref_fp(rows, p):
    """Reduced row echelon form over F_p; entries are ints in [0, p)."""
    m = [[x % p for x in r] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    pr = 0
    for pc in range(ncols):
        pivot_row = -1
        for r in range(pr, nrows):
            if m[r][pc]:
                pivot_row = r
                break
        if pivot_row < 0:
            continue
        if pivot_row != pr:
            m[pr], m[pivot_row] = m[pivot_row], m[pr]
        inv = pow(m[pr][pc], p - 2, p)
        if inv != 1:
            row = m[pr]
            for c in range(pc, ncols):
                if row[c]:
                    row[c] = row[c] * inv % p
        prow = m[pr]
        for r in range(nrows):
            if r == pr:
                continue
            f = m[r][pc]
            if not f:
                continue
            row = m[r]
            for c in range(pc, ncols):
                if prow[c]:
                    row[c] = (row[c] - f * prow[c]) % p
        pivots.append(pc)
        pr += 1
        if pr == nrows:
            break
    return m, pivots


def matmul_qq(a, b):
    """Product of two rational matrices given as lists of row lists."""
    if not a:
        return []
    inner = len(a[0])
    ncols = len(b[0]) if b else 0
    zero = Fraction(0)
    out = []
    for arow in a:
        orow = [zero] * ncols
        for k in range(inner):
            f = arow[k]
            if f == 0:
                continue
            brow = b[k]
            for c in range(ncols):
                if brow[c]:
                    orow[c] += f * brow[c]
        out.append(orow)
    return out


def matmul_fp(a, b, p):
    if not a:
        return []
    inner = len(a[0])
    ncols = len(b[0]) if b else 0
    out = []
    for arow in a:
        orow = [0] * ncols
        for k in range(inner):
            f = arow[k] % p
            if not f:
                continue
            brow = b[k]
            for c in range(ncols):
                if brow[c]:
                    orow[c] = (orow[c] + f * brow[c]) % p
        out.append(orow)
    return out
