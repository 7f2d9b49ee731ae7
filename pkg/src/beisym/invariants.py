"""Waldschmidt constants, asymptotic regularity and theorem-level checks.

Every quantity here is computed for a *monomial* ideal (edge ideal, gin or
lex initial ideal of the binomial edge ideal); reports label them that way.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable

from .graphs import (
    Graph,
    _components_mask,
    _members,
    chromatic_number,
    clique_number,
    connected_components,
    induced_subgraph,
    is_closed_labeling,
    is_connected,
    longest_admissible_path_order,
    longest_induced_path_order,
    multipartite_parts,
    optimal_coloring,
    to_graph6,
)
from .ideals import (
    EdgelessGraphError,
    MonomialIdeal,
    Monomial,
    alpha,
    edge_ideal,
    gin_ideal,
    inid_ideal,
    is_minimal_generator,
    max_gen_degree,
    ordinary_power,
    symbolic_power,
)
from .lp import min_coord_sum_lp
from .polyhedron import (
    HPolyhedron,
    QVector,
    build_sp,
    contains,
    denominator_scaling,
    enumerate_vertices,
    format_fraction,
    format_qvector,
    full_vertices,
)
from .primes import LabeledPrime, edge_ideal_primes, gin_primes, inid_primes

KINDS = ("edge", "gin", "inid")
IDEAL_LABEL = {"edge": "I_G", "gin": "gin(J_G)", "inid": "in(J_G)"}

_IDEALS: dict[str, Callable[[Graph], MonomialIdeal]] = {
    "edge": edge_ideal,
    "gin": gin_ideal,
    "inid": inid_ideal,
}
_PRIMES: dict[str, Callable[[Graph], list[LabeledPrime]]] = {
    "edge": edge_ideal_primes,
    "gin": gin_primes,
    "inid": inid_primes,
}


def _kind(kind: str) -> str:
    if kind not in KINDS:
        raise ValueError(f"unknown ideal kind {kind!r}; expected one of {KINDS}")
    return kind


def ideal_of(g: Graph, kind: str) -> MonomialIdeal:
    return _IDEALS[_kind(kind)](g)


def primes_of(g: Graph, kind: str) -> list[LabeledPrime]:
    return _PRIMES[_kind(kind)](g)


def sp_of(g: Graph, kind: str) -> HPolyhedron:
    return build_sp(primes_of(g, kind), 2 * g.n)


def vertices_of(g: Graph, kind: str) -> list[QVector]:
    return enumerate_vertices(sp_of(g, kind))


def waldschmidt(g: Graph, kind: str, *, cross_check: bool = True) -> Fraction:
    """Minimum coordinate sum over the vertices of SP; checked against the LP."""
    p = sp_of(g, kind)
    value = min(sum(a) for a in enumerate_vertices(p))
    if cross_check:
        lp_value, _ = min_coord_sum_lp(p)
        if lp_value != value:
            raise AssertionError(
                f"vertex minimum {value} and LP optimum {lp_value} disagree for {to_graph6(g)}"
            )
    return value


def areg(g: Graph, kind: str) -> Fraction:
    """Maximum coordinate sum over the vertices of SP."""
    return max(sum(a) for a in vertices_of(g, kind))


@dataclass
class InvariantReport:
    graph: str
    kind: str
    waldschmidt: Fraction
    areg: Fraction
    alpha: int
    max_gen_degree: int
    vertex_count: int
    full_vertex_count: int
    ell: int
    ell_lex: int

    def __post_init__(self) -> None:
        assert self.waldschmidt <= self.areg
        assert self.waldschmidt <= self.alpha

    def to_json(self) -> dict:
        label = IDEAL_LABEL[self.kind]
        return {
            "graph": self.graph,
            "kind": self.kind,
            "ideal": label,
            "waldschmidt": format_fraction(self.waldschmidt),
            "areg": format_fraction(self.areg),
            "alpha": self.alpha,
            "max_gen_degree": self.max_gen_degree,
            "vertex_count": self.vertex_count,
            "full_vertex_count": self.full_vertex_count,
            "ell": self.ell,
            "ell_lex": self.ell_lex,
        }


def invariant_report(g: Graph, kind: str) -> InvariantReport:
    ideal = ideal_of(g, kind)
    p = sp_of(g, kind)
    vs = enumerate_vertices(p)
    w = min(sum(a) for a in vs)
    lp_value, _ = min_coord_sum_lp(p)
    if lp_value != w:
        raise AssertionError(f"vertex minimum {w} and LP optimum {lp_value} disagree")
    return InvariantReport(
        graph=to_graph6(g),
        kind=kind,
        waldschmidt=w,
        areg=max(sum(a) for a in vs),
        alpha=alpha(ideal),
        max_gen_degree=max_gen_degree(ideal),
        vertex_count=len(vs),
        full_vertex_count=len(full_vertices(p, g.n, vs)),
        ell=longest_induced_path_order(g),
        ell_lex=longest_admissible_path_order(g),
    )


# ---------------------------------------------------------------------------
# structure of the vertex set


def embed(a: QVector, relabel: dict[int, int], n: int) -> QVector:
    """Zero-pad a point of R^{2|H|} into R^{2n}; relabel maps G-labels to H-labels."""
    h = len(relabel)
    out = [Fraction(0)] * (2 * n)
    for old, new in relabel.items():
        out[old - 1] = a[new - 1]
        out[n + old - 1] = a[h + new - 1]
    return tuple(out)


def connected_induced_subsets(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected induced subgraphs with at least one edge."""
    out = []
    for size in range(2, g.n + 1):
        for w in combinations(g.vertices, size):
            mask = sum(1 << (v - 1) for v in w)
            if len(_components_mask(g, mask)) == 1:
                out.append(w)
    return out


@dataclass
class DecompositionReport:
    graph: str
    kind: str
    pieces: dict[tuple[int, ...], list[QVector]]
    reconstructed: list[QVector]
    direct: list[QVector]

    @property
    def match(self) -> bool:
        return set(self.reconstructed) == set(self.direct)

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "kind": self.kind,
            "match": self.match,
            "vertex_count": len(self.direct),
            "pieces": [
                {"subgraph": list(w), "full_vertices": [format_qvector(a) for a in vs]}
                for w, vs in self.pieces.items()
            ],
        }


def subgraph_decomposition(g: Graph, kind: str) -> DecompositionReport:
    """Rebuild V(SP(I_G)) from full vertices of connected induced subgraphs."""
    if kind not in ("gin", "inid"):
        raise ValueError("subgraph decomposition is stated for gin and inid only")
    if not g.edges:
        raise EdgelessGraphError("the graph has no edges")
    if not is_connected(g):
        raise ValueError("subgraph decomposition needs a connected graph")
    pieces: dict[tuple[int, ...], list[QVector]] = {}
    recon: set[QVector] = set()
    for w in connected_induced_subsets(g):
        h, relabel = induced_subgraph(g, w)
        p = sp_of(h, kind)
        emb = [embed(a, relabel, g.n) for a in full_vertices(p, h.n)]
        pieces[w] = emb
        recon.update(emb)
    return DecompositionReport(to_graph6(g), kind, pieces, sorted(recon), vertices_of(g, kind))


@dataclass
class PartitionReport:
    graph: str
    kind: str
    components: list[tuple[int, ...]]
    per_component: list[list[QVector]]
    direct: list[QVector]

    @property
    def disjoint(self) -> bool:
        seen = [set(vs) for vs in self.per_component]
        return sum(len(s) for s in seen) == len(set().union(*seen)) if seen else True

    @property
    def match(self) -> bool:
        union = set().union(*map(set, self.per_component)) if self.per_component else set()
        return self.disjoint and union == set(self.direct)

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "kind": self.kind,
            "components": [list(c) for c in self.components],
            "per_component_counts": [len(vs) for vs in self.per_component],
            "vertex_count": len(self.direct),
            "disjoint": self.disjoint,
            "match": self.match,
        }


def disconnected_partition(g: Graph, kind: str) -> PartitionReport:
    """Compare V(SP(I_G)) with the union of the embedded component vertex sets.

    Components without edges have zero ideal and contribute no vertices.
    """
    if not g.edges:
        raise EdgelessGraphError("the graph has no edges")
    comps = connected_components(g)
    per = []
    for comp in comps:
        h, relabel = induced_subgraph(g, comp)
        if not h.edges:
            per.append([])
            continue
        per.append(sorted(embed(a, relabel, g.n) for a in vertices_of(h, kind)))
    return PartitionReport(to_graph6(g), kind, comps, per, vertices_of(g, kind))


# ---------------------------------------------------------------------------
# theorem checks


@dataclass
class CheckResult:
    theorem: str
    graph: str
    status: str  # "pass", "fail" or "skip"
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "graph": self.graph, "status": self.status, "detail": self.detail}


def _fr(x: Fraction) -> str:
    return format_fraction(x)


def _ratio(k: int) -> Fraction:
    return Fraction(k, k - 1)


def _check_wald_equality(g: Graph, kind: str) -> tuple[bool, dict]:
    wg, we = waldschmidt(g, "gin"), waldschmidt(g, "edge")
    return wg == we, {"wald_gin": _fr(wg), "wald_edge": _fr(we)}


def _check_chi_omega(g: Graph, kind: str) -> tuple[bool, dict]:
    chi, om = chromatic_number(g), clique_number(g)
    w = waldschmidt(g, "edge")
    lo, hi = _ratio(chi), _ratio(om)
    return lo <= w <= hi, {"chi": chi, "omega": om, "lower": _fr(lo), "wald_edge": _fr(w), "upper": _fr(hi)}


def _check_kpartite(g: Graph, kind: str) -> tuple[bool, dict] | None:
    parts = multipartite_parts(g)
    if parts is None or len(parts) < 2:
        return None
    k = len(parts)
    w = waldschmidt(g, "gin")
    return w == _ratio(k), {"parts": [len(p) for p in parts], "k": k, "wald_gin": _fr(w)}


def _check_partite_containment(g: Graph, kind: str) -> tuple[bool, dict] | None:
    if not is_connected(g):
        return None
    coloring = optimal_coloring(g)
    classes: dict[int, list[int]] = {}
    for v, c in sorted(coloring.items()):
        classes.setdefault(c, []).append(v)
    parts = list(classes.values())
    if len(parts) < 2:
        return None
    part_of = {v: k for k, p in enumerate(parts) for v in p}
    big = Graph.from_edges(
        g.n, [(i, j) for i, j in combinations(g.vertices, 2) if part_of[i] != part_of[j]]
    )
    outer = sp_of(big, "gin")
    bad = [a for a in vertices_of(g, "gin") if not contains(outer, a)]
    return not bad, {
        "parts": parts,
        "supergraph": to_graph6(big),
        "violations": [format_qvector(a) for a in bad[:5]],
    }


def _check_bipartite(g: Graph, kind: str) -> tuple[bool, dict] | None:
    if chromatic_number(g) != 2:
        return None
    w = waldschmidt(g, "gin")
    return w == 2, {"wald_gin": _fr(w)}


def _check_weakly_perfect(g: Graph, kind: str) -> tuple[bool, dict] | None:
    chi, om = chromatic_number(g), clique_number(g)
    if chi != om:
        return None
    w = waldschmidt(g, "gin")
    return w == _ratio(chi), {"chi": chi, "wald_gin": _fr(w)}


def _check_wald_inid_two(g: Graph, kind: str) -> tuple[bool, dict]:
    w = waldschmidt(g, "inid")
    return w == 2, {"wald_inid": _fr(w)}


def _check_closed_areg_two(g: Graph, kind: str) -> tuple[bool, dict] | None:
    if not is_closed_labeling(g):
        return None
    ideal = inid_ideal(g)
    r = areg(g, "inid")
    d = max_gen_degree(ideal)
    primes = [p.support for p in inid_primes(g)]
    equal_powers = all(
        symbolic_power(primes, m, g.n).exponent_set == ordinary_power(ideal, m).exponent_set
        for m in (2, 3)
    )
    ok = r == 2 and d == 2 and equal_powers
    return ok, {"areg_inid": _fr(r), "max_gen_degree": d, "symbolic_equals_ordinary_m2_m3": equal_powers}


def _check_vertex_containment(g: Graph, kind: str) -> tuple[bool, dict]:
    vs = set(vertices_of(g, kind))
    bad = []
    checked = 0
    for size in range(2, g.n + 1):
        for w in combinations(g.vertices, size):
            h, relabel = induced_subgraph(g, w)
            if not h.edges:
                continue
            checked += 1
            for a in vertices_of(h, kind):
                e = embed(a, relabel, g.n)
                if e not in vs:
                    bad.append({"subgraph": list(w), "vertex": format_qvector(e)})
    return not bad, {"kind": kind, "subgraphs": checked, "violations": bad[:5]}


def _check_zero_one(g: Graph, kind: str) -> tuple[bool, dict]:
    ideal = ideal_of(g, kind)
    vs = vertices_of(g, kind)
    zero_one = {tuple(int(x) for x in a) for a in vs if all(x in (0, 1) for x in a)}
    gens = ideal.exponent_set
    return zero_one == gens, {
        "kind": kind,
        "zero_one_vertices": len(zero_one),
        "generators": len(gens),
        "vertices_not_generators": [list(v) for v in sorted(zero_one - gens)][:5],
        "generators_not_vertices": [list(v) for v in sorted(gens - zero_one)][:5],
    }


def _check_vertex_to_generator(g: Graph, kind: str) -> tuple[bool, dict]:
    primes = [p.support for p in primes_of(g, kind)]
    bad = []
    vs = vertices_of(g, kind)
    for a in vs:
        q, z = denominator_scaling(a)
        if not is_minimal_generator(primes, q, Monomial(z)):
            bad.append(format_qvector(a))
    return not bad, {"kind": kind, "vertices": len(vs), "violations": bad[:5]}


def _check_subgraph_decomposition(g: Graph, kind: str) -> tuple[bool, dict] | None:
    if not is_connected(g):
        return None
    rep = subgraph_decomposition(g, kind)
    return rep.match, {"kind": kind, "vertex_count": len(rep.direct), "reconstructed": len(rep.reconstructed)}


def _check_disconnected_partition(g: Graph, kind: str) -> tuple[bool, dict] | None:
    if is_connected(g):
        return None
    rep = disconnected_partition(g, kind)
    return rep.match, rep.to_json()


def _check_induced_path_bound(g: Graph, kind: str) -> tuple[bool, dict]:
    r, ell = areg(g, "gin"), longest_induced_path_order(g)
    return r >= ell, {"areg_gin": _fr(r), "ell": ell}


THEOREMS: dict[str, Callable[[Graph, str], tuple[bool, dict] | None]] = {
    "wald_equality": _check_wald_equality,
    "chi_omega": _check_chi_omega,
    "kpartite": _check_kpartite,
    "partite_containment": _check_partite_containment,
    "bipartite": _check_bipartite,
    "weakly_perfect": _check_weakly_perfect,
    "wald_inid_two": _check_wald_inid_two,
    "closed_areg_two": _check_closed_areg_two,
    "vertex_containment": _check_vertex_containment,
    "zero_one_vertices": _check_zero_one,
    "vertex_to_generator": _check_vertex_to_generator,
    "subgraph_decomposition": _check_subgraph_decomposition,
    "disconnected_partition": _check_disconnected_partition,
    "induced_path_bound": _check_induced_path_bound,
}

# theorems whose statement is about one chosen ideal kind
KIND_THEOREMS = {
    "vertex_containment": "gin",
    "zero_one_vertices": "gin",
    "vertex_to_generator": "gin",
    "subgraph_decomposition": "gin",
    "disconnected_partition": "gin",
}


def verify_theorem(theorem: str, g: Graph, kind: str | None = None) -> CheckResult:
    if theorem not in THEOREMS:
        raise KeyError(f"unknown theorem id {theorem!r}")
    if kind is None:
        kind = KIND_THEOREMS.get(theorem, "gin")
    _kind(kind)
    gid = to_graph6(g)
    if not g.edges:
        return CheckResult(theorem, gid, "skip", {"reason": "edgeless graph"})
    if theorem in ("subgraph_decomposition", "vertex_containment") and kind == "edge":
        return CheckResult(theorem, gid, "skip", {"reason": "stated for gin and inid"})
    out = THEOREMS[theorem](g, kind)
    if out is None:
        return CheckResult(theorem, gid, "skip", {"reason": "hypothesis not met"})
    ok, detail = out
    return CheckResult(theorem, gid, "pass" if ok else "fail", detail)


@dataclass
class TheoremReport:
    theorem: str
    corpus: str
    results: list[CheckResult]

    @property
    def checked(self) -> int:
        return sum(r.status != "skip" for r in self.results)

    @property
    def passed(self) -> int:
        return sum(r.status == "pass" for r in self.results)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "corpus": self.corpus,
            "checked": self.checked,
            "passed": self.passed,
            "skipped": sum(r.status == "skip" for r in self.results),
            "failures": [{"graph": r.graph, "detail": r.detail} for r in self.results if r.status == "fail"],
        }


# ---------------------------------------------------------------------------
# open questions: reported, never asserted


@dataclass
class ConjectureRow:
    graph: str
    kind: str
    areg: Fraction
    path_order: int  # vertex count of the longest relevant path

    @property
    def path_edges(self) -> int:
        return max(self.path_order - 1, 0)

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "ideal": IDEAL_LABEL[self.kind],
            "areg": format_fraction(self.areg),
            "path": "induced" if self.kind == "gin" else "admissible",
            "path_vertices": self.path_order,
            "path_edges": self.path_edges,
            "areg_equals_path_vertices": self.areg == self.path_order,
        }


def conjecture_report(g: Graph) -> list[ConjectureRow]:
    """areg(gin) against the longest induced path, areg(in) against the longest admissible one."""
    if not g.edges:
        raise EdgelessGraphError("the graph has no edges")
    gid = to_graph6(g)
    return [
        ConjectureRow(gid, "gin", areg(g, "gin"), longest_induced_path_order(g)),
        ConjectureRow(gid, "inid", areg(g, "inid"), longest_admissible_path_order(g)),
    ]
