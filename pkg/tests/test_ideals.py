from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from beisym.graphs import Graph, make_family
from beisym.ideals import (
    EdgelessGraphError,
    IdealError,
    Monomial,
    MonomialIdeal,
    PrimeSupport,
    alpha,
    edge_ideal,
    format_monomial,
    gin_ideal,
    gin_ideal_from_all_paths,
    inid_ideal,
    is_minimal_generator,
    max_gen_degree,
    minimalize,
    monomial,
    ordinary_power,
    parse_monomial,
    symbolic_membership,
    symbolic_power,
)
from beisym.primes import brute_force_primes

from strategies import graphs, squarefree_ideals

P3 = make_family("path", 3)
K3 = make_family("complete", 3)
K2 = make_family("complete", 2)


def texts(ideal):
    return [g.format(ideal.graph_n) for g in ideal.gens]


def ideal_from_text(dim, *gens, graph_n=None):
    return minimalize([parse_monomial(t, dim, graph_n) for t in gens], graph_n)


I1234 = ideal_from_text(4, "x1*x2*x3", "x1*x2*x4", "x3*x4")
I1234_PRIMES = brute_force_primes(I1234)


def box_oracle(primes, m):
    """Scan the exponent box {0..m}^dim and keep the minimal members.

    Membership is upward closed, so minimal means no single decrement is a member.
    """
    dim = primes[0].dim

    def member(e):
        return all(sum(e[i - 1] for i in p.members) >= m for p in primes)

    out = set()
    for e in product(range(m + 1), repeat=dim):
        if member(e) and not any(
            e[k] and member(e[:k] + (e[k] - 1,) + e[k + 1:]) for k in range(dim)
        ):
            out.add(e)
    return out


def test_minimalize_examples():
    assert texts(ideal_from_text(3, "x1*x2", "x1*x2*x3")) == ["x1*x2"]
    assert texts(ideal_from_text(2, "x1", "x2", "x1")) == ["x1", "x2"]
    got = ideal_from_text(4, "x1*x2*x3", "x1*x2*x4", "x3*x4", "x1*x2*x3*x4")
    assert set(texts(got)) == {"x1*x2*x3", "x1*x2*x4", "x3*x4"}


@given(squarefree_ideals())
def test_minimalize_is_an_antichain_and_idempotent(ideal):
    for a, b in combinations(ideal.gens, 2):
        assert not a.divides(b) and not b.divides(a)
    assert minimalize(ideal.gens) == ideal


def test_edge_ideal_examples():
    assert texts(edge_ideal(K2)) == ["x1*x2"] and edge_ideal(K2).dim == 4
    assert set(texts(edge_ideal(K3))) == {"x1*x2", "x1*x3", "x2*x3"}
    assert edge_ideal(K3).dim == 6
    assert set(texts(edge_ideal(P3))) == {"x1*x2", "x2*x3"}


def test_gin_examples():
    assert texts(gin_ideal(K2)) == ["x1*x2"]
    assert set(texts(gin_ideal(P3))) == {"x1*x2", "x2*x3", "x1*x3*y2"}
    assert set(texts(gin_ideal(K3))) == {"x1*x2", "x1*x3", "x2*x3"}


def test_inid_examples():
    assert texts(inid_ideal(K2)) == ["x1*y2"]
    assert set(texts(inid_ideal(K3))) == {"x1*y2", "x1*y3", "x2*y3"}
    assert set(texts(inid_ideal(P3))) == {"x1*y2", "x2*y3"}


def test_edgeless_graph_is_rejected():
    for build in (edge_ideal, gin_ideal, inid_ideal):
        with pytest.raises(EdgelessGraphError):
            build(Graph(3))


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=6))
def test_gin_from_induced_paths_equals_all_paths(g):
    if not g.edges:
        return
    assert gin_ideal(g) == gin_ideal_from_all_paths(g)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=6))
def test_graph_ideals_are_squarefree_and_contain_edges(g):
    if not g.edges:
        return
    e, gi, ii = edge_ideal(g), gin_ideal(g), inid_ideal(g)
    assert e.is_squarefree() and gi.is_squarefree() and ii.is_squarefree()
    for gen in e.gens:
        assert gen in gi
    for a, b in g.edges:
        assert monomial(2 * g.n, a, g.n + b) in ii


def test_degrees():
    assert alpha(gin_ideal(K3)) == 2
    assert alpha(ideal_from_text(6, "x1*x3*y2", graph_n=3)) == 3
    assert alpha(symbolic_power(brute_force_primes(edge_ideal(K3)), 2)) == 3
    assert max_gen_degree(gin_ideal(P3)) == 3
    for n in range(2, 6):
        assert max_gen_degree(edge_ideal(make_family("path", n))) == 2
        assert max_gen_degree(inid_ideal(make_family("complete", n))) == 2
    with pytest.raises(IdealError):
        max_gen_degree(MonomialIdeal(2, (Monomial((1, 0)), Monomial((1, 1)))))


def test_symbolic_membership_examples():
    assert symbolic_membership(I1234_PRIMES, 2, parse_monomial("x1*x2*x3*x4", 4))
    assert not symbolic_membership(I1234_PRIMES, 2, parse_monomial("x3*x4", 4))
    for gen in I1234.gens:
        assert symbolic_membership(I1234_PRIMES, 1, gen)


def test_symbolic_power_examples():
    got = symbolic_power(I1234_PRIMES, 2)
    assert set(texts(got)) == {"x1^2*x2^2*x3^2", "x1^2*x2^2*x4^2", "x1*x2*x3*x4", "x3^2*x4^2"}
    assert symbolic_power(I1234_PRIMES, 1).exponent_set == I1234.exponent_set
    k3 = symbolic_power(brute_force_primes(edge_ideal(K3)), 2, graph_n=3)
    assert set(texts(k3)) == {"x1^2*x2^2", "x1^2*x3^2", "x2^2*x3^2", "x1*x2*x3"}


@settings(max_examples=40, deadline=None)
@given(squarefree_ideals(max_dim=8), st.integers(1, 3))
def test_symbolic_power_against_box_oracle(ideal, m):
    primes = brute_force_primes(ideal)
    assert symbolic_power(primes, m).exponent_set == box_oracle(primes, m)


def test_symbolic_power_box_oracle_at_full_size():
    # one dim-8, m = 3 case, run once
    ideal = edge_ideal(make_family("path", 4))
    primes = brute_force_primes(ideal)
    assert symbolic_power(primes, 3).exponent_set == box_oracle(primes, 3)


@settings(max_examples=40, deadline=None)
@given(squarefree_ideals(), st.integers(1, 3))
def test_ordinary_power_inside_symbolic_power(ideal, m):
    primes = brute_force_primes(ideal)
    for gen in ordinary_power(ideal, m).gens:
        assert symbolic_membership(primes, m, gen)


def test_ordinary_power_examples():
    x1x2 = ideal_from_text(2, "x1*x2")
    assert texts(ordinary_power(x1x2, 2)) == ["x1^2*x2^2"]
    sq = ordinary_power(edge_ideal(K3), 2)
    assert len(sq) == 6 and sq.exponent_set == {
        tuple(a + b for a, b in zip(x.exponents, y.exponents))
        for x in edge_ideal(K3).gens
        for y in edge_ideal(K3).gens
    }
    assert ordinary_power(I1234, 1) == I1234


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_complete_graph_edge_ideal_symbolic_equals_ordinary_only_for_k2(n):
    ideal = edge_ideal(make_family("complete", n))
    primes = brute_force_primes(ideal)
    same = symbolic_power(primes, 2).exponent_set == ordinary_power(ideal, 2).exponent_set
    # the product of a triangle's vertices is symbolic but not ordinary
    assert same == (n == 2)


def test_is_minimal_generator_examples():
    assert is_minimal_generator(I1234_PRIMES, 2, parse_monomial("x1*x2*x3*x4", 4))
    assert not is_minimal_generator(I1234_PRIMES, 2, parse_monomial("x1^2*x2^2*x3^2*x4", 4))
    for gen in I1234.gens:
        assert is_minimal_generator(I1234_PRIMES, 1, gen)


@settings(max_examples=30, deadline=None)
@given(squarefree_ideals(), st.integers(1, 3))
def test_generators_of_symbolic_power_are_minimal(ideal, m):
    primes = brute_force_primes(ideal)
    for gen in symbolic_power(primes, m).gens:
        assert is_minimal_generator(primes, m, gen)


def test_monomial_text():
    assert format_monomial((2, 0, 1, 0, 0, 1), graph_n=3) == "x1^2*x3*y3"
    assert format_monomial((0, 0)) == "1"
    with pytest.raises(IdealError):
        parse_monomial("y1", 2)
    with pytest.raises(IdealError):
        parse_monomial("z1", 2)
    with pytest.raises(IdealError):
        parse_monomial("x3", 2)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 3), min_size=2 * n, max_size=2 * n))))
def test_monomial_text_round_trip(case):
    n, exps = case
    m = Monomial(tuple(exps))
    assert parse_monomial(m.format(n), 2 * n, n) == m


@given(squarefree_ideals())
def test_ideal_json_round_trip(ideal):
    assert MonomialIdeal.from_json(ideal.to_json()) == ideal


def test_ideal_json_errors():
    with pytest.raises(IdealError):
        MonomialIdeal.from_json({"dim": 2})
    with pytest.raises(IdealError):
        MonomialIdeal.from_json({"dim": 2, "gens": [[1, 1, 1]]})
    with pytest.raises(IdealError):
        MonomialIdeal.from_json({"dim": 2, "gens": []})
    with pytest.raises(IdealError):
        PrimeSupport(2, (3,))
