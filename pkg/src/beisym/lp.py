"""Exact simplex (Fractions, Bland's rule) for the Waldschmidt LP.

min sum(a) over SP is solved through its dual packing problem

    max sum(y)  s.t.  sum_{M containing i} y_M <= 1 for each coordinate i,  y >= 0,

whose slack basis is feasible from the start.  The optimal primal point is
read off the slack reduced costs, so each solve returns a certificate pair.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .polyhedron import HPolyhedron, QVector


class UnboundedLP(ArithmeticError):
    pass


def maximize(c: Sequence, A: Sequence[Sequence], b: Sequence) -> tuple[Fraction, list[Fraction], list[Fraction]]:
    """max c.x s.t. A x <= b, x >= 0, with b >= 0.

    Returns (optimum, x, duals) where duals are the optimal multipliers of the
    rows of A.
    """
    m, n = len(A), len(c)
    if any(Fraction(v) < 0 for v in b):
        raise ValueError("slack basis needs b >= 0")
    # tableau rows: [A | I | b]; objective row holds reduced costs z_j - c_j
    T = [[Fraction(x) for x in A[i]] + [Fraction(int(k == i)) for k in range(m)] + [Fraction(b[i])] for i in range(m)]
    obj = [-Fraction(x) for x in c] + [Fraction(0)] * m + [Fraction(0)]
    basis = list(range(n, n + m))
    width = n + m
    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise UnboundedLP("objective is unbounded")
        r = best[1]
        pv = T[r][enter]
        T[r] = [x / pv for x in T[r]]
        for i in range(m):
            if i != r and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], T[r])]
        f = obj[enter]
        obj = [x - f * y for x, y in zip(obj, T[r])]
        basis[r] = enter
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = T[i][-1]
    duals = obj[n:n + m]
    return obj[-1], x, duals


def min_coord_sum_lp(p: HPolyhedron) -> tuple[Fraction, QVector]:
    """(min sum a over p, an optimal point a)."""
    active = sorted({i for f in p.one_facets for i in f})
    rows = [[Fraction(int(i in f)) for f in p.one_facets] for i in active]
    value, _, duals = maximize([1] * len(p.one_facets), rows, [1] * len(active))
    a = [Fraction(0)] * p.dim
    for i, d in zip(active, duals):
        a[i - 1] = d
    return value, tuple(a)
