"""Monomials, squarefree monomial ideals and their symbolic powers.

Exponent vectors are tuples of Python ints.  For ideals coming from a graph on
n vertices the ambient ring has 2n variables: index i (1-based) is x_i and
index n + i is y_i.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .graphs import (
    Graph,
    enumerate_admissible_paths,
    enumerate_induced_paths,
    simple_path_vertex_sets,
)

Exps = tuple[int, ...]


class IdealError(ValueError):
    """Bad ideal data (mixed dimensions, zero ideal, etc.)."""


class EdgelessGraphError(IdealError):
    """The graph has no edges, so its ideal is zero."""


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: Exps

    def __post_init__(self) -> None:
        if any(e < 0 for e in self.exponents):
            raise IdealError(f"negative exponent in {self.exponents}")

    @property
    def dim(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents, 1) if e)

    def format(self, graph_n: int | None = None) -> str:
        return format_monomial(self.exponents, graph_n)


def monomial(dim: int, *indices: int) -> Monomial:
    """Product of the variables at the given 1-based indices (repeats allowed)."""
    e = [0] * dim
    for i in indices:
        e[i - 1] += 1
    return Monomial(tuple(e))


def _var_name(i: int, graph_n: int | None) -> str:
    if graph_n is None:
        return f"x{i}"
    return f"x{i}" if i <= graph_n else f"y{i - graph_n}"


def format_monomial(exps: Sequence[int], graph_n: int | None = None) -> str:
    factors = []
    for i, e in enumerate(exps, 1):
        if e == 1:
            factors.append(_var_name(i, graph_n))
        elif e > 1:
            factors.append(f"{_var_name(i, graph_n)}^{e}")
    return "*".join(factors) if factors else "1"


_FACTOR = re.compile(r"^([xy])(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, dim: int, graph_n: int | None = None) -> Monomial:
    """Inverse of :func:`format_monomial`; ``y`` variables need ``graph_n``."""
    e = [0] * dim
    text = text.strip()
    if text == "1":
        return Monomial(tuple(e))
    for factor in text.replace(" ", "").split("*"):
        m = _FACTOR.match(factor)
        if not m:
            raise IdealError(f"cannot parse monomial factor {factor!r}")
        var, idx, power = m.group(1), int(m.group(2)), int(m.group(3) or 1)
        if var == "y":
            if graph_n is None:
                raise IdealError("y variables need a graph vertex count")
            idx += graph_n
        if not 1 <= idx <= dim:
            raise IdealError(f"variable {factor!r} outside ambient dimension {dim}")
        e[idx - 1] += power
    return Monomial(tuple(e))


@dataclass(frozen=True)
class PrimeSupport:
    """The monomial prime generated by the variables at ``members`` (1-based)."""

    dim: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise IdealError("prime support must be nonempty")
        if list(self.members) != sorted(set(self.members)):
            object.__setattr__(self, "members", tuple(sorted(set(self.members))))
        if self.members[0] < 1 or self.members[-1] > self.dim:
            raise IdealError(f"prime support {self.members} outside 1..{self.dim}")

    @property
    def mask(self) -> int:
        m = 0
        for i in self.members:
            m |= 1 << (i - 1)
        return m


@dataclass(frozen=True)
class MonomialIdeal:
    dim: int
    gens: tuple[Monomial, ...]
    minimal: bool = False
    graph_n: int | None = None

    def __post_init__(self) -> None:
        if any(g.dim != self.dim for g in self.gens):
            raise IdealError("generators do not share the ambient dimension")
        if self.graph_n is not None and self.dim != 2 * self.graph_n:
            raise IdealError("graph ideals live in 2n variables")

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    @property
    def exponent_set(self) -> set[Exps]:
        return {g.exponents for g in self.gens}

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def format(self) -> str:
        return "(" + ", ".join(g.format(self.graph_n) for g in self.gens) + ")"

    def to_json(self) -> dict:
        out: dict = {"dim": self.dim, "gens": [list(g.exponents) for g in self.gens]}
        if self.graph_n is not None:
            out["graph_n"] = self.graph_n
            out["text"] = [g.format(self.graph_n) for g in self.gens]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        try:
            dim = int(data["dim"])
            gens = [Monomial(tuple(int(e) for e in row)) for row in data["gens"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise IdealError(f"malformed ideal JSON: {exc}") from None
        for g in gens:
            if g.dim != dim:
                raise IdealError(f"generator {list(g.exponents)} does not have length {dim}")
        return minimalize(gens, graph_n=data.get("graph_n"))


def _gen_key(e: Exps) -> tuple:
    # degree, then lex with x1 > x2 > ... (larger leading exponents first)
    return (sum(e), tuple(-x for x in e))


def _minimal_exps(exps: Iterable[Exps]) -> list[Exps]:
    uniq = sorted(set(exps), key=_gen_key)
    kept: list[Exps] = []
    for e in uniq:
        if not any(all(a <= b for a, b in zip(k, e)) for k in kept):
            kept.append(e)
    return kept


def minimalize(gens: Iterable[Monomial], graph_n: int | None = None) -> MonomialIdeal:
    """Minimal generating set, sorted by degree and then lex (x1 > x2 > ...)."""
    gens = list(gens)
    if not gens:
        raise IdealError("cannot build an ideal from an empty generator list")
    dim = gens[0].dim
    if any(g.dim != dim for g in gens):
        raise IdealError("generators have mixed ambient dimensions")
    kept = _minimal_exps(g.exponents for g in gens)
    return MonomialIdeal(dim, tuple(Monomial(e) for e in kept), True, graph_n)


# ---------------------------------------------------------------------------
# graph ideals


def _require_edges(g: Graph) -> None:
    if not g.edges:
        raise EdgelessGraphError("the graph has no edges; its ideal is zero")


def edge_ideal(g: Graph) -> MonomialIdeal:
    """I_G = (x_a x_b : ab an edge), embedded in 2n variables."""
    _require_edges(g)
    d = 2 * g.n
    return minimalize((monomial(d, a, b) for a, b in g.edges), graph_n=g.n)


def gin_ideal(g: Graph) -> MonomialIdeal:
    """Multigraded generic initial ideal: y_{v1}..y_{vs} x_i x_j per induced path."""
    _require_edges(g)
    n, d = g.n, 2 * g.n
    gens = [
        monomial(d, p.start, p.end, *(n + v for v in p.interior))
        for p in enumerate_induced_paths(g)
    ]
    return minimalize(gens, graph_n=n)


def gin_ideal_from_all_paths(g: Graph) -> MonomialIdeal:
    """The same ideal generated from every simple path (exponential; small graphs)."""
    _require_edges(g)
    n, d = g.n, 2 * g.n
    gens = [
        monomial(d, i, j, *(n + v for v in interior))
        for i, j, interior in simple_path_vertex_sets(g)
    ]
    return minimalize(gens, graph_n=n)


def inid_ideal(g: Graph) -> MonomialIdeal:
    """Lex initial ideal (x_1 > ... > x_n > y_1 > ... > y_n).

    Each admissible path i..j contributes u x_i y_j, where u multiplies y_v
    for interior v < i and x_v for interior v > j.  (This is the assignment a
    lex Groebner basis computation produces; see the tests.)
    """
    _require_edges(g)
    n, d = g.n, 2 * g.n
    gens = []
    for p in enumerate_admissible_paths(g):
        i, j = p.start, p.end
        idx = [i, n + j]
        idx += [n + v for v in p.interior if v < i]
        idx += [v for v in p.interior if v > j]
        gens.append(monomial(d, *idx))
    return minimalize(gens, graph_n=n)


# ---------------------------------------------------------------------------
# degrees


def alpha(ideal: MonomialIdeal) -> int:
    """Initial degree: smallest generator degree."""
    if not ideal.gens:
        raise IdealError("the zero ideal has no initial degree")
    return min(g.degree for g in ideal.gens)


def max_gen_degree(ideal: MonomialIdeal) -> int:
    """d(I): largest degree of a minimal generator."""
    if not ideal.gens:
        raise IdealError("the zero ideal has no generators")
    if not ideal.minimal:
        raise IdealError("max_gen_degree needs a minimalized ideal")
    return max(g.degree for g in ideal.gens)


# ---------------------------------------------------------------------------
# symbolic powers


def _check_primes(primes: Sequence[PrimeSupport]) -> int:
    if not primes:
        raise IdealError("empty prime list")
    dim = primes[0].dim
    if any(p.dim != dim for p in primes):
        raise IdealError("prime supports have mixed ambient dimensions")
    return dim


def symbolic_membership(primes: Sequence[PrimeSupport], m: int, z: Monomial) -> bool:
    """Is z in the intersection of the P_M^m?  (Monomial primes: P^(m) = P^m.)"""
    if m < 1:
        raise IdealError("symbolic power order must be positive")
    dim = _check_primes(primes)
    if z.dim != dim:
        raise IdealError("monomial and primes have different ambient dimensions")
    e = z.exponents
    return all(sum(e[i - 1] for i in p.members) >= m for p in primes)


def _prime_power_exps(p: PrimeSupport, m: int) -> list[Exps]:
    out = []
    for combo in combinations_with_replacement(p.members, m):
        e = [0] * p.dim
        for i in combo:
            e[i - 1] += 1
        out.append(tuple(e))
    return out


def _intersect(a: list[Exps], b: list[Exps]) -> list[Exps]:
    return _minimal_exps(tuple(map(max, x, y)) for x in a for y in b)


def symbolic_power(
    primes: Sequence[PrimeSupport], m: int, graph_n: int | None = None
) -> MonomialIdeal:
    """Minimal generators of the intersection of the m-th powers of the primes."""
    if m < 1:
        raise IdealError("symbolic power order must be positive")
    dim = _check_primes(primes)
    ordered = sorted(primes, key=lambda p: len(p.members))
    acc = _minimal_exps(_prime_power_exps(ordered[0], m))
    for p in ordered[1:]:
        # generators already in P^m pass through unchanged
        inside = [e for e in acc if sum(e[i - 1] for i in p.members) >= m]
        outside = [e for e in acc if sum(e[i - 1] for i in p.members) < m]
        if outside:
            acc = _minimal_exps(inside + _intersect(outside, _prime_power_exps(p, m)))
    return MonomialIdeal(dim, tuple(Monomial(e) for e in acc), True, graph_n)


def ordinary_power(ideal: MonomialIdeal, m: int) -> MonomialIdeal:
    if m < 1:
        raise IdealError("power must be positive")
    base = [g.exponents for g in ideal.gens]
    acc = _minimal_exps(base)
    for _ in range(m - 1):
        acc = _minimal_exps(tuple(a + b for a, b in zip(x, y)) for x in acc for y in base)
    return MonomialIdeal(ideal.dim, tuple(Monomial(e) for e in acc), True, ideal.graph_n)


def is_minimal_generator(primes: Sequence[PrimeSupport], q: int, z: Monomial) -> bool:
    """z lies in I^(q) but no single-variable decrement of z does."""
    if q < 1:
        raise IdealError("symbolic power order must be positive")
    if not symbolic_membership(primes, q, z):
        return False
    e = list(z.exponents)
    for i, v in enumerate(e):
        if v:
            e[i] -= 1
            if symbolic_membership(primes, q, Monomial(tuple(e))):
                return False
            e[i] += 1
    return True
