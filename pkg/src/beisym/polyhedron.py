"""Symbolic polyhedra of squarefree monomial ideals, in facet form, exactly.

SP(I) = {a >= 0 : sum_{i in M} a_i >= 1 for every minimal prime support M}.
Vertices come from a double-description pass over the homogenised cone
{(a, t) >= 0 : sum_M a_i - t >= 0}; its extreme rays with t > 0 are the
vertices.  Everything is integer/Fraction arithmetic, there are no tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence

from .ideals import IdealError, PrimeSupport

QVector = tuple[Fraction, ...]


class PolyhedronError(ValueError):
    pass


@dataclass(frozen=True)
class HPolyhedron:
    dim: int
    one_facets: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        masks = []
        for f in self.one_facets:
            if not f:
                raise PolyhedronError("empty one-facet support")
            if min(f) < 1 or max(f) > self.dim:
                raise PolyhedronError(f"one-facet {f} outside 1..{self.dim}")
            masks.append(sum(1 << (i - 1) for i in set(f)))
        for a, b in combinations(masks, 2):
            if a & b in (a, b):
                raise PolyhedronError("one-facet supports must be pairwise incomparable")

    def to_json(self) -> dict:
        return {"dim": self.dim, "one_facets": [list(f) for f in self.one_facets]}


def build_sp(primes: Iterable[PrimeSupport | object], dim: int | None = None) -> HPolyhedron:
    supports = []
    for p in primes:
        sup = getattr(p, "support", p)
        if not isinstance(sup, PrimeSupport):
            raise PolyhedronError(f"not a prime support: {p!r}")
        supports.append(sup)
    if not supports:
        raise PolyhedronError("need at least one prime")
    d = supports[0].dim if dim is None else dim
    if any(s.dim != d for s in supports):
        raise PolyhedronError("prime supports do not match the ambient dimension")
    return HPolyhedron(d, tuple(s.members for s in supports))


def as_qvector(coords: Iterable) -> QVector:
    return tuple(Fraction(c) for c in coords)


def contains(p: HPolyhedron, a: Sequence) -> bool:
    if len(a) != p.dim:
        raise PolyhedronError(f"point has dimension {len(a)}, polyhedron {p.dim}")
    if any(x < 0 for x in a):
        return False
    return all(sum(a[i - 1] for i in f) >= 1 for f in p.one_facets)


# ---------------------------------------------------------------------------
# vertex enumeration


def _normalize(v: list[int]) -> tuple[int, ...]:
    g = reduce(gcd, v)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def _extreme_rays(dim: int, facets: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Extreme rays of {(a, t) in R^{dim+1} : a, t >= 0, sum_{i in F} a_i >= t}.

    Coordinates of ``facets`` are 0-based here; ``t`` is the last coordinate.
    Constraint k < dim + 1 is coordinate k >= 0, constraint dim + 1 + j is facet j.
    """
    width = dim + 1
    rays = []
    all_orthant = (1 << width) - 1
    for i in range(width):
        rays.append((tuple(1 if k == i else 0 for k in range(width)), all_orthant & ~(1 << i)))
    # adjacent extreme rays of a pointed cone of dimension dim + 1 share dim - 1 tight constraints
    need = dim - 1
    for j, facet in enumerate(facets):
        bit = 1 << (width + j)
        pos, neg, new = [], [], []
        for vec, z in rays:
            h = sum(vec[i] for i in facet) - vec[dim]
            if h > 0:
                pos.append((vec, z, h))
                new.append((vec, z))
            elif h < 0:
                neg.append((vec, z, h))
            else:
                new.append((vec, z | bit))
        if not neg:
            rays = new
            continue
        zsets = [z for _, z in rays]
        for rv, rz, rh in pos:
            for sv, sz, sh in neg:
                common = rz & sz
                if common.bit_count() < need:
                    continue
                hits = 0
                for z in zsets:
                    if z & common == common:
                        hits += 1
                        if hits > 2:
                            break
                if hits > 2:
                    continue
                vec = _normalize([rh * s - sh * r for r, s in zip(rv, sv)])
                new.append((vec, common | bit))
        rays = new
    return [vec for vec, _ in rays]


def enumerate_vertices(p: HPolyhedron) -> list[QVector]:
    """All vertices of ``p``, sorted lexicographically.

    Coordinates that appear in no one-facet are zero at every vertex, so the
    cone is built only over the coordinates that do appear.
    """
    active = sorted({i for f in p.one_facets for i in f})
    pos = {v: k for k, v in enumerate(active)}
    facets = [[pos[i] for i in f] for f in p.one_facets]
    d = len(active)
    out = set()
    for ray in _extreme_rays(d, facets):
        t = ray[d]
        if t == 0:
            continue
        full = [Fraction(0)] * p.dim
        for k, i in enumerate(active):
            full[i - 1] = Fraction(ray[k], t)
        out.add(tuple(full))
    return sorted(out)


def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve a square system exactly; None when singular."""
    n = len(rows)
    m = [r[:] + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def rank(rows: Sequence[Sequence]) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rk = 0
    for col in range(ncols):
        piv = next((r for r in range(rk, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for r in range(rk + 1, len(m)):
            if m[r][col] != 0:
                f = m[r][col] / m[rk][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rk])]
        rk += 1
    return rk


def _constraint_rows(p: HPolyhedron) -> list[tuple[list[Fraction], Fraction]]:
    rows = []
    for i in range(p.dim):
        rows.append(([Fraction(int(k == i)) for k in range(p.dim)], Fraction(0)))
    for f in p.one_facets:
        fs = set(f)
        rows.append(([Fraction(int(k + 1 in fs)) for k in range(p.dim)], Fraction(1)))
    return rows


def vertices_by_tight_sets(p: HPolyhedron) -> list[QVector]:
    """Vertices by trying every dim-subset of constraints as equalities.

    Combinatorial in the constraint count; an independent check for small cases.
    """
    rows = _constraint_rows(p)
    out = set()
    for combo in combinations(rows, p.dim):
        x = _solve([r for r, _ in combo], [b for _, b in combo])
        if x is not None and contains(p, x):
            out.add(tuple(x))
    return sorted(out)


def tight_constraint_count(p: HPolyhedron, a: Sequence) -> tuple[int, int]:
    """(number of facets tight at a, rank of their normals); zero- and one-facets both count."""
    if not contains(p, a):
        raise PolyhedronError("point is not in the polyhedron")
    tight = [r for r, b in _constraint_rows(p) if sum(x * y for x, y in zip(r, a)) == b]
    return len(tight), rank(tight)


def is_vertex(p: HPolyhedron, a: Sequence) -> bool:
    return contains(p, a) and tight_constraint_count(p, a)[1] == p.dim


def full_vertices(p: HPolyhedron, n: int, vertices: Sequence[QVector] | None = None) -> list[QVector]:
    """Vertices with a_j + a_{n+j} != 0 for every graph vertex j."""
    if p.dim != 2 * n:
        raise PolyhedronError(f"full vertices need dimension 2n = {2 * n}, got {p.dim}")
    vs = enumerate_vertices(p) if vertices is None else vertices
    return [a for a in vs if all(a[j] + a[n + j] != 0 for j in range(n))]


def min_coord_sum(p: HPolyhedron, vertices: Sequence[QVector] | None = None) -> Fraction:
    vs = enumerate_vertices(p) if vertices is None else vertices
    return min(sum(a) for a in vs)


def max_vertex_coord_sum(p: HPolyhedron, vertices: Sequence[QVector] | None = None) -> Fraction:
    # SP is unbounded (recession cone = orthant), so this is a max over vertices only
    vs = enumerate_vertices(p) if vertices is None else vertices
    return max(sum(a) for a in vs)


def lp_min_sum(p: HPolyhedron) -> Fraction:
    """min sum(a) over p by exact simplex (see :mod:`beisym.lp`)."""
    from .lp import min_coord_sum_lp

    return min_coord_sum_lp(p)[0]


def denominator_scaling(a: Sequence[Fraction]) -> tuple[int, tuple[int, ...]]:
    """(q, z) with a = z / q and q the least common denominator."""
    q = lcm(*(Fraction(x).denominator for x in a)) if a else 1
    return q, tuple(int(Fraction(x) * q) for x in a)


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_qvector(a: Sequence[Fraction]) -> str:
    q, z = denominator_scaling(a)
    body = "(" + ",".join(str(v) for v in z) + ")"
    return body if q == 1 else f"1/{q}*{body}"


def qvector_json(a: Sequence[Fraction]) -> list[str]:
    return [format_fraction(x) for x in a]


def parse_qvector(items: Sequence[str]) -> QVector:
    try:
        return tuple(Fraction(s) for s in items)
    except (ValueError, ZeroDivisionError) as exc:
        raise IdealError(f"bad rational coordinate: {exc}") from None
