"""Exact linear algebra over Q on lists of Fractions."""
from __future__ import annotations

from fractions import Fraction


def rref(rows):
    """Reduced row echelon form; returns ``(matrix, pivot_columns)``."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows):
    return len(rref(rows)[1])


def nullspace(rows, ncols=None):
    """Basis of ``{v : rows @ v = 0}``."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    ncols = len(rows[0])
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -m[i][f]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One solution of ``rows @ v = rhs`` or ``None`` if inconsistent."""
    if not rows:
        return [] if not any(rhs) else None
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = rref(aug)
    if ncols in pivots:
        return None
    v = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        v[p] = m[i][ncols]
    return v


def transpose(rows):
    return [list(col) for col in zip(*rows)]


def span_basis(vectors):
    """Row-reduced basis of the span of ``vectors``."""
    if not vectors:
        return []
    m, pivots = rref(vectors)
    return m[:len(pivots)]


def krylov_minpoly(apply, start):
    """Minimal polynomial of ``start`` under the linear map ``apply``.

    Returns monic coefficients ``[c0, c1, ..., 1]`` (lowest degree first).
    """
    vecs = [list(map(Fraction, start))]
    if not any(vecs[0]):
        return [Fraction(1)]
    while True:
        nxt = apply(vecs[-1])
        # express nxt in terms of the previous vectors, if possible
        cols = transpose(vecs)
        sol = solve(cols, nxt)
        if sol is not None:
            return [-c for c in sol] + [Fraction(1)]
        vecs.append(nxt)
