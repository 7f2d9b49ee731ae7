from itertools import combinations

import pytest
from hypothesis import given, settings

from beisym.corpus import connected_graphs, labeled_connected_graphs, two_component_graphs
from beisym.graphs import (
    Graph,
    component_count_after_removal,
    enumerate_ids,
    induced_subgraph,
    make_family,
    to_graph6,
)
from beisym.ideals import (
    EdgelessGraphError,
    IdealError,
    Monomial,
    edge_ideal,
    gin_ideal,
    inid_ideal,
    minimalize,
    parse_monomial,
)
from beisym.primes import (
    IDSWitness,
    assert_irredundant,
    brute_force_primes,
    edge_ideal_primes,
    gin_primes,
    inid_primes,
    minimal_primes,
    support_sets,
)

from strategies import graphs_with_edges, squarefree_ideals

K2 = make_family("complete", 2)
K3 = make_family("complete", 3)
P3 = make_family("path", 3)
NET = make_family("net")


def members(primes):
    return [p.members for p in primes]


def test_edge_ideal_prime_examples():
    assert members(edge_ideal_primes(K3)) == [(1, 2), (1, 3), (2, 3)]
    assert members(edge_ideal_primes(K2)) == [(1,), (2,)]
    assert set(members(edge_ideal_primes(P3))) == {(2,), (1, 3)}


def test_gin_prime_examples():
    got = gin_primes(P3)
    assert members(got) == [(2, 3), (1, 3), (1, 2), (2, 5)]
    assert got[3].witnesses == (IDSWitness((2,), (1, 3)),)
    for n in range(2, 7):
        full = set(range(1, n + 1))
        expected = {tuple(sorted(full - {u})) for u in full}
        assert support_sets(gin_primes(make_family("complete", n))) == expected
    assert members(gin_primes(K2)) == [(2,), (1,)]


def test_inid_prime_examples():
    assert support_sets(inid_primes(K3)) == {(5, 6), (1, 6), (1, 2)}
    assert support_sets(inid_primes(K2)) == {(1,), (4,)}


NET_T_SUPPORT = (1, 2, 3, 7, 8, 9)


def test_net_triangle_set_is_not_irredundant():
    # removing {1, 2} already leaves three components, so {1, 2, 3} is not an IDS
    assert component_count_after_removal(NET, [1, 2, 3]) == 3
    assert component_count_after_removal(NET, [1, 2]) == 3
    assert (1, 2, 3) not in [d.members for d in enumerate_ids(NET)]


def test_net_six_variable_prime_is_not_minimal():
    ideal = inid_ideal(NET)
    oracle = support_sets(brute_force_primes(ideal))
    assert NET_T_SUPPORT not in oracle
    assert all(set(NET_T_SUPPORT) & set(g.support) for g in ideal.gens)
    assert any(set(m) < set(NET_T_SUPPORT) for m in oracle)


def test_net_prime_contains_every_triangle_prime():
    h, relabel = induced_subgraph(NET, [1, 2, 3])
    inv = {v: k for k, v in relabel.items()}
    for p in inid_primes(h):
        lifted = {inv[i] if i <= h.n else NET.n + inv[i - h.n] for i in p.members}
        assert lifted <= set(NET_T_SUPPORT)


def test_brute_force_examples():
    i1234 = minimalize([parse_monomial(t, 4) for t in ("x1*x2*x3", "x1*x2*x4", "x3*x4")])
    assert members(brute_force_primes(i1234)) == [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert members(brute_force_primes(minimalize([parse_monomial("x1*x2", 2)]))) == [(1,), (2,)]
    assert support_sets(brute_force_primes(inid_ideal(K3))) == {(5, 6), (1, 6), (1, 2)}


def test_generic_routes_reject_bad_input():
    with pytest.raises(IdealError):
        brute_force_primes(minimalize([parse_monomial("x1^2", 2)]))
    for fn in (edge_ideal_primes, gin_primes, inid_primes):
        with pytest.raises(EdgelessGraphError):
            fn(Graph(3))


@settings(max_examples=60, deadline=None)
@given(squarefree_ideals(max_dim=8))
def test_berge_matches_brute_force(ideal):
    assert minimal_primes(ideal) == brute_force_primes(ideal)


def check_closed_forms(g):
    for closed, build in ((edge_ideal_primes, edge_ideal), (gin_primes, gin_ideal), (inid_primes, inid_ideal)):
        primes = closed(g)
        oracle = support_sets(brute_force_primes(build(g)))
        assert support_sets(primes) == oracle, (g, closed.__name__)
        assert len(primes) == len(oracle)
        assert_irredundant([p.support for p in primes])


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_closed_forms_on_connected_atlas(n):
    for g in connected_graphs(n, min_n=n):
        check_closed_forms(g)


def test_closed_forms_on_labeled_graphs():
    # in(J_G) depends on the labeling, so every labeling counts
    for g in labeled_connected_graphs(4):
        check_closed_forms(g)


def test_closed_forms_on_disconnected_graphs():
    for g in two_component_graphs(5):
        check_closed_forms(g)
    check_closed_forms(Graph.from_edges(4, [(1, 2)]))


@settings(max_examples=40, deadline=None)
@given(graphs_with_edges(max_n=6))
def test_closed_forms_on_random_labelings(g):
    check_closed_forms(g)


@settings(max_examples=30, deadline=None)
@given(graphs_with_edges(max_n=6))
def test_subgraph_primes_sit_inside_some_prime(g):
    # each prime of an induced subgraph lifts inside some prime of G
    for closed in (edge_ideal_primes, gin_primes, inid_primes):
        big = [set(p.members) for p in closed(g)]
        for size in range(2, g.n):
            for w in combinations(g.vertices, size):
                h, relabel = induced_subgraph(g, w)
                if not h.edges:
                    continue
                inv = {v: k for k, v in relabel.items()}
                for p in closed(h):
                    lifted = {inv[i] if i <= h.n else g.n + inv[i - h.n] for i in p.members}
                    assert any(lifted <= b for b in big), (g, w, closed.__name__)


def test_prime_json():
    p = gin_primes(P3)[3]
    assert p.to_json() == {"support": [2, 5], "provenance": {"T": [2], "U": [1, 3]}}


def inid_by_groebner(g):
    """Leading monomials of a lex Groebner basis of J_G, computed by sympy."""
    import sympy

    xs = sympy.symbols(f"x1:{g.n + 1}")
    ys = sympy.symbols(f"y1:{g.n + 1}")
    gens = [*xs, *ys]
    binomials = [xs[i - 1] * ys[j - 1] - xs[j - 1] * ys[i - 1] for i, j in g.sorted_edges]
    basis = sympy.groebner(binomials, *gens, order="lex")
    lead = [sympy.Poly(f, *gens).monoms(order="lex")[0] for f in basis.exprs]
    return minimalize([Monomial(tuple(m)) for m in lead]).exponent_set


def test_inid_matches_groebner_basis_on_every_labeling():
    pytest.importorskip("sympy")
    for g in labeled_connected_graphs(5):
        assert inid_ideal(g).exponent_set == inid_by_groebner(g), to_graph6(g)


def test_inid_interior_variable_assignment():
    # 2-1-3 on the star centred at 1: interior 1 < 2 contributes y1
    star = Graph.from_edges(3, [(1, 2), (1, 3)])
    assert "x2*y1*y3" in [m.format(3) for m in inid_ideal(star).gens]
    # 1-3-2 with 1, 2 not adjacent: interior 3 > 2 contributes x3
    bent = Graph.from_edges(3, [(1, 3), (2, 3)])
    assert "x1*x3*y2" in [m.format(3) for m in inid_ideal(bent).gens]
