"""Minimal primes of the three graph ideals, in closed form, plus generic routes.

All supports live in 1..2n with x_i at i and y_i at n + i.  The closed forms
run over irredundant disconnecting sets T and one representative per
component of G minus T.  Disconnected graphs go through the same formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

from .graphs import Graph, _components_mask, _members, _to_mask, enumerate_ids, minimal_vertex_covers
from .ideals import EdgelessGraphError, IdealError, MonomialIdeal, PrimeSupport


@dataclass(frozen=True)
class CoverWitness:
    cover: tuple[int, ...]

    def to_json(self) -> dict:
        return {"cover": list(self.cover)}


@dataclass(frozen=True)
class IDSWitness:
    T: tuple[int, ...]
    U: tuple[int, ...]

    def to_json(self) -> dict:
        return {"T": list(self.T), "U": list(self.U)}


@dataclass(frozen=True)
class LabeledPrime:
    support: PrimeSupport
    witnesses: tuple[CoverWitness | IDSWitness, ...]

    @property
    def members(self) -> tuple[int, ...]:
        return self.support.members

    def to_json(self) -> dict:
        out = {"support": list(self.members), "provenance": self.witnesses[0].to_json()}
        if len(self.witnesses) > 1:
            out["all_provenances"] = [w.to_json() for w in self.witnesses]
        return out


def _collect(dim: int, items: Iterable[tuple[Iterable[int], CoverWitness | IDSWitness]]) -> list[LabeledPrime]:
    # first occurrence fixes the position; later witnesses for the same support are appended
    order: list[tuple[int, ...]] = []
    seen: dict[tuple[int, ...], list] = {}
    for members, witness in items:
        key = tuple(sorted(members))
        if key not in seen:
            seen[key] = []
            order.append(key)
        seen[key].append(witness)
    return [LabeledPrime(PrimeSupport(dim, k), tuple(seen[k])) for k in order]


def assert_irredundant(supports: Sequence[PrimeSupport]) -> None:
    masks = [p.mask for p in supports]
    for a, b in combinations(range(len(masks)), 2):
        ma, mb = masks[a], masks[b]
        if ma & mb in (ma, mb):
            raise AssertionError(
                f"comparable prime supports {supports[a].members} and {supports[b].members}"
            )


def _require_edges(g: Graph) -> None:
    if not g.edges:
        raise EdgelessGraphError("the graph has no edges; its ideal is zero")


def edge_ideal_primes(g: Graph) -> list[LabeledPrime]:
    """One prime (x_i : i in C) per minimal vertex cover C."""
    _require_edges(g)
    return _collect(2 * g.n, ((c, CoverWitness(c)) for c in minimal_vertex_covers(g)))


def _ids_component_choices(g: Graph):
    full = g.full_mask
    for t in enumerate_ids(g):
        comps = [_members(c) for c in _components_mask(g, full & ~_to_mask(t.members))]
        for u in product(*comps):
            yield t.members, comps, u


def gin_primes(g: Graph) -> list[LabeledPrime]:
    """P_{T,U} = (x_i, y_i : i in T) + (x_i : i in G_k, i != u_k)."""
    _require_edges(g)
    n = g.n

    def items():
        for T, comps, U in _ids_component_choices(g):
            members = [i for i in T] + [n + i for i in T]
            for comp, u in zip(comps, U):
                members += [i for i in comp if i != u]
            yield members, IDSWitness(T, U)

    out = _collect(2 * n, items())
    assert_irredundant([p.support for p in out])
    return out


def inid_primes(g: Graph) -> list[LabeledPrime]:
    """Q_{T,U} = (x_i, y_i : i in T) + (x_i : i in G_k, i < u_k) + (y_i : i in G_k, i > u_k)."""
    _require_edges(g)
    n = g.n

    def items():
        for T, comps, U in _ids_component_choices(g):
            members = [i for i in T] + [n + i for i in T]
            for comp, u in zip(comps, U):
                members += [i for i in comp if i < u]
                members += [n + i for i in comp if i > u]
            yield members, IDSWitness(T, U)

    out = _collect(2 * n, items())
    assert_irredundant([p.support for p in out])
    return out


def _support_masks(ideal: MonomialIdeal) -> list[int]:
    if not ideal.gens:
        raise IdealError("the zero ideal has no minimal primes")
    if not ideal.is_squarefree():
        raise IdealError("minimal primes via transversals need a squarefree ideal")
    masks = []
    for g in ideal.gens:
        m = 0
        for i in g.support:
            m |= 1 << (i - 1)
        if m == 0:
            raise IdealError("the unit ideal has no minimal primes")
        masks.append(m)
    return masks


def _to_support(dim: int, mask: int) -> PrimeSupport:
    return PrimeSupport(dim, _members(mask))


def _canonical(dim: int, masks: Iterable[int]) -> list[PrimeSupport]:
    return sorted((_to_support(dim, m) for m in masks), key=lambda p: (len(p.members), p.members))


def brute_force_primes(ideal: MonomialIdeal) -> list[PrimeSupport]:
    """Minimal transversals of the generator supports, by scanning every subset.

    Exponential in the ambient dimension; this is the reference oracle.
    """
    gens = _support_masks(ideal)
    found: list[int] = []
    for size in range(1, ideal.dim + 1):
        for combo in combinations(range(ideal.dim), size):
            m = 0
            for i in combo:
                m |= 1 << i
            if any(f & m == f for f in found):
                continue
            if all(g & m for g in gens):
                found.append(m)
    return _canonical(ideal.dim, found)


def minimal_primes(ideal: MonomialIdeal) -> list[PrimeSupport]:
    """Minimal transversals by incremental (Berge) extension, one generator at a time."""
    gens = sorted(_support_masks(ideal), key=lambda m: m.bit_count())
    trans = [0]
    for g in gens:
        nxt = set()
        for t in trans:
            if t & g:
                nxt.add(t)
            else:
                b = g
                while b:
                    low = b & -b
                    b ^= low
                    nxt.add(t | low)
        ordered = sorted(nxt, key=lambda m: m.bit_count())
        trans = []
        for t in ordered:
            if not any(k & t == k for k in trans):
                trans.append(t)
    return _canonical(ideal.dim, trans)


def support_sets(primes: Iterable[LabeledPrime | PrimeSupport]) -> set[tuple[int, ...]]:
    return {p.members for p in primes}
